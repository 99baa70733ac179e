#include "wallcross/parse.hpp"

#include <algorithm>
#include <string>

#include "wallcross/errors.hpp"

namespace wallcross {

namespace {

std::string strip(std::string_view text) {
  std::string out;
  for (char ch : text)
    if (ch != ' ' && ch != '\t' && ch != '(' && ch != ')' && ch != '[' && ch != ']') out += ch;
  return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char ch : text) {
    if (ch == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current += ch;
    }
  }
  parts.push_back(current);
  return parts;
}

[[noreturn]] void bad(const std::string& what, std::string_view text) {
  throw Error(ErrorKind::InvalidInput, what + " '" + std::string(text) + "'");
}

} // namespace

Integer parse_integer(std::string_view text) {
  std::string s = strip(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  Integer out;
  if (s.empty() || out.set_str(s, 10) != 0) bad("not an integer:", text);
  return out;
}

Rational parse_rational(std::string_view text) {
  std::string s = strip(text);
  const auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string frac = s.substr(dot + 1);
    if (frac.empty() || !std::all_of(frac.begin(), frac.end(), ::isdigit)) bad("not a number:", text);
    std::string whole = s.substr(0, dot);
    const bool negative = !whole.empty() && whole.front() == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    Integer num = parse_integer(whole + frac);
    if (negative && num > 0) num = -num;  // "-0.5"
    Integer den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(s));
  Integer num = parse_integer(s.substr(0, slash));
  Integer den = parse_integer(s.substr(slash + 1));
  if (den == 0) bad("zero denominator in", text);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

LatticeClass parse_lattice_class(std::string_view text) {
  auto parts = split(strip(text), ',');
  if (parts.size() != 3) bad("expected a,b,c:", text);
  return {parse_integer(parts[0]), parse_integer(parts[1]), parse_integer(parts[2])};
}

std::vector<LatticeClass> parse_word(std::string_view text) {
  std::vector<LatticeClass> word;
  const std::string s = strip(text);
  if (s.empty()) return word;
  std::vector<Integer> pending;
  for (const auto& token : split(s, ',')) {
    if (token == "+" || token == "-") {
      if (!pending.empty()) bad("incomplete class before sign token in word", text);
      word.push_back(token == "+" ? sigma_plus() : sigma_minus());
      continue;
    }
    pending.push_back(parse_integer(token));
    if (pending.size() == 3) {
      word.push_back({pending[0], pending[1], pending[2]});
      pending.clear();
    }
  }
  if (!pending.empty()) bad("incomplete class at end of word", text);
  return word;
}

ChamberPoint parse_start(std::string_view text) {
  std::string s = strip(text);
  std::string model = "poincare";
  if (const auto colon = s.find(':'); colon != std::string::npos) {
    model = s.substr(0, colon);
    s = s.substr(colon + 1);
  }
  auto parts = split(s, ',');
  if (model == "poincare") {
    if (parts.size() != 2) bad("expected poincare:u,v, got", text);
    return poincare_to_hyperboloid(parse_rational(parts[0]), parse_rational(parts[1]));
  }
  if (model == "hyperboloid") {
    if (parts.size() != 3) bad("expected hyperboloid:x,y,z, got", text);
    return ChamberPoint(parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2]));
  }
  bad("unknown point model in", text);
}

} // namespace wallcross
