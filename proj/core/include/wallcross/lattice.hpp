#ifndef WALLCROSS_LATTICE_HPP_
#define WALLCROSS_LATTICE_HPP_

// Integer cohomology lattice of CP^2 # 2(-CP^2) in the basis (e1, e2, s) with
// intersection form diag(-1, -1, +1), together with reflections in (-1)-classes
// and the orientation data that decides the coefficient ring of an invariant.

#include <array>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace wallcross {

using Integer = mpz_class;
using Rational = mpq_class;

/// A class a*e1 + b*e2 + c*s.
struct LatticeClass {
  Integer a, b, c;

  LatticeClass() = default;
  LatticeClass(Integer a_, Integer b_, Integer c_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {}

  friend bool operator==(const LatticeClass& x, const LatticeClass& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c;
  }
  friend LatticeClass operator+(const LatticeClass& x, const LatticeClass& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c};
  }
  friend LatticeClass operator-(const LatticeClass& x, const LatticeClass& y) {
    return {x.a - y.a, x.b - y.b, x.c - y.c};
  }
  friend LatticeClass operator*(const Integer& k, const LatticeClass& x) {
    return {k * x.a, k * x.b, k * x.c};
  }
  LatticeClass operator-() const { return {-a, -b, -c}; }

  std::string str() const;  // "(a,b,c)"
};

// Named classes used throughout.
LatticeClass class_e1();
LatticeClass class_e2();
LatticeClass class_s();
LatticeClass sigma_plus();   // s + e1 + e2
LatticeClass sigma_minus();  // s - e1 + e2

/// Intersection pairing c_x c_y - a_x a_y - b_x b_y.
Integer pairing(const LatticeClass& x, const LatticeClass& y);
inline Integer square(const LatticeClass& x) { return pairing(x, x); }

/// x + 2 (x . sigma) sigma. Throws NotMinusOneClass unless sigma^2 = -1.
LatticeClass reflect(const LatticeClass& sigma, const LatticeClass& x);

/// 3x3 integer matrix, row-major.
class Matrix3 {
public:
  Matrix3() = default;
  explicit Matrix3(std::array<Integer, 9> entries) : m_(std::move(entries)) {}

  static Matrix3 identity();
  static Matrix3 from_columns(const LatticeClass& c0, const LatticeClass& c1,
                              const LatticeClass& c2);

  const Integer& operator()(int row, int col) const { return m_[3 * row + col]; }
  Integer& operator()(int row, int col) { return m_[3 * row + col]; }
  std::span<const Integer, 9> entries() const { return m_; }

  LatticeClass column(int col) const;
  Matrix3 transpose() const;
  Integer determinant() const;
  LatticeClass operator*(const LatticeClass& x) const;
  friend Matrix3 operator*(const Matrix3& lhs, const Matrix3& rhs);
  friend bool operator==(const Matrix3&, const Matrix3&) = default;

private:
  std::array<Integer, 9> m_{};
};

/// The form Q = diag(-1, -1, 1).
const Matrix3& intersection_form();

/// A form-preserving automorphism of the lattice, remembered together with the
/// reflection word it was built from. The first entry of the word acts first.
class Isometry {
public:
  Isometry() : matrix_(Matrix3::identity()) {}

  /// Wraps an arbitrary matrix; throws InvalidInput unless M^T Q M = Q.
  static Isometry from_matrix(Matrix3 matrix, std::vector<LatticeClass> word = {});

  const Matrix3& matrix() const { return matrix_; }
  const std::vector<LatticeClass>& word() const { return word_; }

  LatticeClass operator()(const LatticeClass& x) const { return matrix_ * x; }

  /// The isometry that applies *this first and then `next`.
  Isometry then(const Isometry& next) const;

  /// Exact inverse Q M^T Q; the word is reversed.
  Isometry inverse() const;

  friend bool operator==(const Isometry& x, const Isometry& y) {
    return x.matrix_ == y.matrix_;
  }

private:
  Isometry(Matrix3 m, std::vector<LatticeClass> w)
      : matrix_(std::move(m)), word_(std::move(w)) {}
  friend Isometry reflection_matrix(const LatticeClass& sigma);

  Matrix3 matrix_;
  std::vector<LatticeClass> word_;
};

Isometry reflection_matrix(const LatticeClass& sigma);

/// Composition of reflections, applied to classes in list order.
Isometry compose_word(std::span<const LatticeClass> word);

/// Spinor norm: +1 when the forward cone (and so the orientation of H^2_+)
/// is preserved.
int alpha(const Isometry& m);

/// (-1)^(((Mc - c)/2)^2). Throws W2NotPreserved unless Mc = c mod 2.
int beta(const Isometry& m, const LatticeClass& w2_lift);

enum class CoefficientRing { Z, Z2 };

std::string to_string(CoefficientRing ring);
CoefficientRing ring_from_string(const std::string& text);

CoefficientRing ym_ring(const Isometry& m, const LatticeClass& w2_lift);

/// Formal dimension -2 p1 - 3 (1 + b_plus) of the ASD moduli space on a
/// simply connected manifold.
Integer ym_dimension(const Integer& p1, const Integer& b_plus);

/// SO(3) bundle L + R over N: p1 equals the square of the lift of w2.
struct BundleData {
  Integer p1;
  LatticeClass w2_lift;
  Integer b_plus_N = 1;

  /// Bundle reduced to the line bundle with first Chern class `c1`.
  static BundleData reducible(const LatticeClass& c1);
};

/// Integer parity (0 or 1) of n, sign ignored.
int parity(const Integer& n);

} // namespace wallcross

#endif
