#include "wallcross/lattice.hpp"

#include "wallcross/errors.hpp"

namespace wallcross {

std::string LatticeClass::str() const {
  return "(" + a.get_str() + "," + b.get_str() + "," + c.get_str() + ")";
}

LatticeClass class_e1() { return {1, 0, 0}; }
LatticeClass class_e2() { return {0, 1, 0}; }
LatticeClass class_s() { return {0, 0, 1}; }
LatticeClass sigma_plus() { return {1, 1, 1}; }
LatticeClass sigma_minus() { return {-1, 1, 1}; }

Integer pairing(const LatticeClass& x, const LatticeClass& y) {
  return x.c * y.c - x.a * y.a - x.b * y.b;
}

namespace {

void require_minus_one(const LatticeClass& sigma) {
  if (square(sigma) != -1)
    throw Error(ErrorKind::NotMinusOneClass,
                sigma.str() + " has square " + Integer(square(sigma)).get_str());
}

} // namespace

LatticeClass reflect(const LatticeClass& sigma, const LatticeClass& x) {
  require_minus_one(sigma);
  Integer k = 2 * pairing(x, sigma);
  return x + k * sigma;
}

Matrix3 Matrix3::identity() {
  return Matrix3({1, 0, 0, 0, 1, 0, 0, 0, 1});
}

Matrix3 Matrix3::from_columns(const LatticeClass& c0, const LatticeClass& c1,
                              const LatticeClass& c2) {
  return Matrix3({c0.a, c1.a, c2.a, c0.b, c1.b, c2.b, c0.c, c1.c, c2.c});
}

LatticeClass Matrix3::column(int col) const {
  return {(*this)(0, col), (*this)(1, col), (*this)(2, col)};
}

Matrix3 Matrix3::transpose() const {
  Matrix3 t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t(i, j) = (*this)(j, i);
  return t;
}

Integer Matrix3::determinant() const {
  const Matrix3& m = *this;
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

LatticeClass Matrix3::operator*(const LatticeClass& x) const {
  const Matrix3& m = *this;
  return {m(0, 0) * x.a + m(0, 1) * x.b + m(0, 2) * x.c,
          m(1, 0) * x.a + m(1, 1) * x.b + m(1, 2) * x.c,
          m(2, 0) * x.a + m(2, 1) * x.b + m(2, 2) * x.c};
}

Matrix3 operator*(const Matrix3& lhs, const Matrix3& rhs) {
  Matrix3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Integer sum = 0;
      for (int k = 0; k < 3; ++k) sum += lhs(i, k) * rhs(k, j);
      out(i, j) = sum;
    }
  return out;
}

const Matrix3& intersection_form() {
  static const Matrix3 q({-1, 0, 0, 0, -1, 0, 0, 0, 1});
  return q;
}

Isometry Isometry::from_matrix(Matrix3 matrix, std::vector<LatticeClass> word) {
  const Matrix3& q = intersection_form();
  if (matrix.transpose() * q * matrix != q)
    throw Error(ErrorKind::InvalidInput, "matrix does not preserve the intersection form");
  return Isometry(std::move(matrix), std::move(word));
}

Isometry Isometry::then(const Isometry& next) const {
  std::vector<LatticeClass> w = word_;
  w.insert(w.end(), next.word_.begin(), next.word_.end());
  return Isometry(next.matrix_ * matrix_, std::move(w));
}

Isometry Isometry::inverse() const {
  const Matrix3& q = intersection_form();
  return Isometry(q * matrix_.transpose() * q,
                  std::vector<LatticeClass>(word_.rbegin(), word_.rend()));
}

Isometry reflection_matrix(const LatticeClass& sigma) {
  require_minus_one(sigma);
  Matrix3 m = Matrix3::from_columns(reflect(sigma, class_e1()),
                                    reflect(sigma, class_e2()),
                                    reflect(sigma, class_s()));
  return Isometry(std::move(m), {sigma});
}

Isometry compose_word(std::span<const LatticeClass> word) {
  Isometry result;
  for (const auto& sigma : word) result = result.then(reflection_matrix(sigma));
  return result;
}

int alpha(const Isometry& m) {
  const LatticeClass s = class_s();
  return pairing(m(s), s) > 0 ? 1 : -1;
}

int parity(const Integer& n) {
  return mpz_odd_p(n.get_mpz_t()) ? 1 : 0;
}

int beta(const Isometry& m, const LatticeClass& w2_lift) {
  LatticeClass diff = m(w2_lift) - w2_lift;
  if (parity(diff.a) || parity(diff.b) || parity(diff.c))
    throw Error(ErrorKind::W2NotPreserved,
                "image " + m(w2_lift).str() + " is not congruent to " + w2_lift.str() + " mod 2");
  LatticeClass half{diff.a / 2, diff.b / 2, diff.c / 2};
  return parity(square(half)) ? -1 : 1;
}

std::string to_string(CoefficientRing ring) {
  return ring == CoefficientRing::Z ? "Z" : "Z2";
}

CoefficientRing ring_from_string(const std::string& text) {
  if (text == "Z") return CoefficientRing::Z;
  if (text == "Z2") return CoefficientRing::Z2;
  throw Error(ErrorKind::InvalidInput, "unknown coefficient ring '" + text + "'");
}

CoefficientRing ym_ring(const Isometry& m, const LatticeClass& w2_lift) {
  return alpha(m) * beta(m, w2_lift) == 1 ? CoefficientRing::Z : CoefficientRing::Z2;
}

Integer ym_dimension(const Integer& p1, const Integer& b_plus) {
  return -2 * p1 - 3 * (1 + b_plus);
}

BundleData BundleData::reducible(const LatticeClass& c1) {
  return BundleData{square(c1), c1, 1};
}

} // namespace wallcross
