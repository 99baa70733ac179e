#include "wallcross/json_io.hpp"

#include <cstdint>
#include <limits>

#include "wallcross/errors.hpp"

namespace wallcross {

namespace {

void expect(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::InvalidInput, "malformed JSON: " + what);
}

int sign_from_json(const Json& j, const char* key) {
  expect(j.contains(key) && j.at(key).is_number_integer(), std::string("missing ") + key);
  const int v = j.at(key).get<int>();
  expect(v == 1 || v == -1, std::string(key) + " must be +1 or -1");
  return v;
}

} // namespace

Json to_json(const Integer& n) {
  if (mpz_fits_slong_p(n.get_mpz_t())) return static_cast<std::int64_t>(n.get_si());
  return n.get_str();
}

Json to_json(const Rational& q) { return q.get_str(); }

Json to_json(const LatticeClass& x) {
  return Json::array({to_json(x.a), to_json(x.b), to_json(x.c)});
}

Json to_json(const Isometry& m) {
  Json matrix = Json::array();
  for (const auto& entry : m.matrix().entries()) matrix.push_back(to_json(entry));
  Json word = Json::array();
  for (const auto& sigma : m.word()) word.push_back(to_json(sigma));
  return Json{{"matrix", std::move(matrix)}, {"word", std::move(word)}};
}

Json to_json(const ChamberPoint& p) {
  return Json{{"x", to_json(p.x())}, {"y", to_json(p.y())}, {"z", to_json(p.z())}};
}

Json to_json(const Wall& w) {
  return Json{{"a", to_json(w.a)}, {"b", to_json(w.b)}, {"c", to_json(w.c)}, {"eps", w.eps}};
}

Json to_json(const std::vector<Wall>& walls) {
  Json out = Json::array();
  for (const auto& w : walls) out.push_back(to_json(w));
  return out;
}

Json to_json(const Crossing& c) {
  return Json{{"wall", to_json(c.wall)},
              {"direction", c.direction},
              {"contribution", c.contribution},
              {"doubled", c.doubled()}};
}

Json to_json(const CrossingReport& report) {
  Json crossings = Json::array();
  for (const auto& c : report.crossings) crossings.push_back(to_json(c));
  return Json{{"crossings", std::move(crossings)},
              {"gamma_dot_W", report.gamma_dot_W},
              {"doubled_total", kGluingMultiplicity * report.gamma_dot_W},
              {"start", to_json(report.start)},
              {"end", to_json(report.end)}};
}

Json to_json(const SegmentCrossing& c) {
  return Json{{"wall", to_json(c.wall)}, {"t", to_json(c.t)}, {"direction", c.direction}};
}

Json to_json(const InvariantExpression& e) {
  Json terms = Json::object();
  for (const auto& [symbol, coeff] : e.terms()) terms[symbol] = to_json(coeff);
  return Json{{"ring", to_string(e.ring())}, {"terms", std::move(terms)}};
}

Json to_json(const SwResult& r) {
  return Json{{"parity", r.parity}, {"ring", to_string(r.ring)}, {"epsilon_parity", r.epsilon_parity}};
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  expect(j.is_string(), "expected an integer");
  Integer out;
  expect(out.set_str(j.get<std::string>(), 10) == 0, "bad integer string");
  return out;
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(integer_from_json(j));
  expect(j.is_string(), "expected a fraction string");
  Rational out;
  expect(out.set_str(j.get<std::string>(), 10) == 0, "bad fraction string");
  expect(out.get_den() != 0, "zero denominator");
  out.canonicalize();
  return out;
}

LatticeClass lattice_class_from_json(const Json& j) {
  expect(j.is_array() && j.size() == 3, "lattice class must be [a,b,c]");
  return {integer_from_json(j[0]), integer_from_json(j[1]), integer_from_json(j[2])};
}

Isometry isometry_from_json(const Json& j) {
  expect(j.is_object() && j.contains("matrix") && j.contains("word"), "isometry fields");
  const Json& m = j.at("matrix");
  expect(m.is_array() && m.size() == 9, "matrix must have 9 entries");
  std::array<Integer, 9> entries;
  for (std::size_t i = 0; i < 9; ++i) entries[i] = integer_from_json(m[i]);
  std::vector<LatticeClass> word;
  for (const auto& sigma : j.at("word")) word.push_back(lattice_class_from_json(sigma));
  return Isometry::from_matrix(Matrix3(std::move(entries)), std::move(word));
}

ChamberPoint chamber_point_from_json(const Json& j) {
  expect(j.is_object() && j.contains("x") && j.contains("y") && j.contains("z"), "point fields");
  return ChamberPoint(rational_from_json(j.at("x")), rational_from_json(j.at("y")),
                      rational_from_json(j.at("z")));
}

Wall wall_from_json(const Json& j) {
  expect(j.is_object() && j.contains("a") && j.contains("b") && j.contains("c"), "wall fields");
  Wall w = make_wall(integer_from_json(j.at("a")), integer_from_json(j.at("b")),
                     integer_from_json(j.at("c")));
  w.eps = sign_from_json(j, "eps");
  return w;
}

std::vector<Wall> walls_from_json(const Json& j) {
  expect(j.is_array(), "wall list must be an array");
  std::vector<Wall> walls;
  for (const auto& w : j) walls.push_back(wall_from_json(w));
  return walls;
}

CrossingReport crossing_report_from_json(const Json& j) {
  expect(j.is_object() && j.contains("crossings") && j.contains("gamma_dot_W"), "report fields");
  CrossingReport report;
  for (const auto& c : j.at("crossings")) {
    Crossing crossing{wall_from_json(c.at("wall")), sign_from_json(c, "direction"),
                      sign_from_json(c, "contribution")};
    report.crossings.push_back(std::move(crossing));
  }
  report.gamma_dot_W = j.at("gamma_dot_W").get<long>();
  report.start = chamber_point_from_json(j.at("start"));
  report.end = chamber_point_from_json(j.at("end"));
  return report;
}

InvariantExpression invariant_from_json(const Json& j) {
  expect(j.is_object() && j.contains("ring") && j.contains("terms"), "expression fields");
  std::map<std::string, Integer> terms;
  for (const auto& [symbol, coeff] : j.at("terms").items()) terms.emplace(symbol, integer_from_json(coeff));
  return InvariantExpression(ring_from_string(j.at("ring").get<std::string>()), std::move(terms));
}

} // namespace wallcross
