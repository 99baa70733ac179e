// wallcross: command-line front end for the wall-crossing library.
//
//   wallcross walls --c-max 13 --json
//   wallcross invariant --word "-,+" --start "poincare:-1/2,-1/2" --symbol X0 --json
//   wallcross verify

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "wallcross/chambers.hpp"
#include "wallcross/crossing.hpp"
#include "wallcross/errors.hpp"
#include "wallcross/figure.hpp"
#include "wallcross/json_io.hpp"
#include "wallcross/lattice.hpp"
#include "wallcross/parse.hpp"
#include "wallcross/swside.hpp"
#include "wallcross/verify.hpp"

using namespace wallcross;

namespace {

constexpr int kExitFixtureFailure = 1;
constexpr int kExitInvalidInput = 2;

struct GlobalOptions {
  bool json = false;
  std::string orientation = "+";
  std::string out;

  HomologyOrientation homology() const {
    return orientation == "-" ? HomologyOrientation::Negative : HomologyOrientation::Positive;
  }
};

void write_output(const GlobalOptions& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(g.out, std::ios::binary);
  if (!file) throw Error(ErrorKind::InvalidInput, "cannot open " + g.out + " for writing");
  file << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string word_text(const std::vector<LatticeClass>& word) {
  std::string out;
  for (const auto& sigma : word) out += (out.empty() ? "" : " then ") + sigma.str();
  return out.empty() ? "(identity)" : out;
}

std::string message_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::NonGenericPoint:
      return "start point or its image lies on a wall; choose a generic point";
    case ErrorKind::OutsideDisk:
      return "point is not inside the open unit disk";
    case ErrorKind::NotMinusOneClass:
      return "reflection class must have square -1";
    case ErrorKind::W2NotPreserved:
      return "isometry does not preserve the w2 lift mod 2";
    case ErrorKind::RohlinViolation:
      return "b2+(X) must be congruent to 3 mod 4 (and at least 3)";
    case ErrorKind::OddBPlus:
      return "b2+ must be even";
    case ErrorKind::NotOdd:
      return "wall coordinates must be odd";
    case ErrorKind::NotForwardSheet:
      return "point is not on the forward hyperboloid sheet";
    case ErrorKind::DegenerateSegment:
      return "segment endpoints coincide";
    case ErrorKind::MissingSymbol:
      return "no value supplied for a symbol";
    case ErrorKind::OnWall:
      return "point lies on a wall";
    case ErrorKind::InvalidInput:
      return "invalid input";
  }
  return "error";
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wall-crossing computations for reflection diffeomorphisms of CP2 # 2(-CP2)"};
  app.require_subcommand(1);
  GlobalOptions g;
  app.add_flag("--json", g.json, "Emit JSON");
  app.add_option("--homology-orientation", g.orientation, "Base orientation sign (+ or -)")
      ->check(CLI::IsMember({"+", "-"}));
  app.add_option("--out", g.out, "Write output to PATH instead of stdout");

  std::string c_max_text = "3";
  auto* walls = app.add_subcommand("walls", "Enumerate walls W(a,b,c) with c <= c-max");
  walls->add_option("--c-max", c_max_text, "Largest c")->required();

  std::string sigma_text, class_text;
  auto* reflect_cmd = app.add_subcommand("reflect", "Reflect a class in a (-1)-class");
  reflect_cmd->add_option("--sigma", sigma_text, "Reflection class a,b,c (or + / -)")->required();
  reflect_cmd->add_option("--class", class_text, "Class a,b,c to reflect")->required();

  std::string word_arg = "-,+";
  std::string lift_text = "1,1,1";
  auto* diffeo = app.add_subcommand("diffeo", "Matrix, spinor norm and coefficient ring of a word");
  diffeo->add_option("--word", word_arg, "Reflection word, applied left to right");
  diffeo->add_option("--c", lift_text, "Integral lift of w2");

  std::string start_text = "poincare:0,0";
  std::string symbol = "X";
  auto* invariant = app.add_subcommand("invariant", "Wall crossings and the 1-parameter invariant");
  invariant->add_option("--word", word_arg, "Reflection word");
  invariant->add_option("--start", start_text, "poincare:u,v or hyperboloid:x,y,z");
  invariant->add_option("--symbol", symbol, "Symbol for the invariant of the other summand");
  invariant->add_option("--c", lift_text, "Integral lift of w2");

  std::string figure_c_max = "13";
  std::vector<std::string> figure_points;
  std::vector<std::string> figure_words;
  auto* figure = app.add_subcommand("figure", "Render the Poincare-disk wall chart as SVG");
  figure->add_option("--c-max", figure_c_max, "Largest c among drawn walls");
  figure->add_option("--point", figure_points, "Poincare point u,v (repeatable)");
  figure->add_option("--word", figure_words, "Reflection word (repeatable)");

  std::string b_plus_x_text;
  auto* sw = app.add_subcommand("sw", "Mod-2 Seiberg-Witten invariant of the single reflection");
  sw->add_option("--b-plus-x", b_plus_x_text, "b2+ of the spin summand X")->required();

  std::string p1_text = "-1", b_plus_text = "1";
  auto* dim = app.add_subcommand("dim", "Formal dimension of the ASD moduli space");
  dim->add_option("--p1", p1_text, "Pontryagin number");
  dim->add_option("--b-plus", b_plus_text, "b2+");

  std::vector<std::string> only;
  auto* verify = app.add_subcommand("verify", "Replay the reference fixtures");
  verify->add_option("--only", only, "Run only the named fixtures");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*walls) {
      const auto list = enumerate_walls(parse_integer(c_max_text), g.homology());
      if (g.json) {
        write_output(g, dump(to_json(list)));
      } else {
        std::ostringstream os;
        for (const auto& w : list) os << w.label() << "  eps=" << (w.eps > 0 ? "+1" : "-1") << "\n";
        os << list.size() << " walls\n";
        write_output(g, os.str());
      }
    } else if (*reflect_cmd) {
      const auto sigma_word = parse_word(sigma_text);
      if (sigma_word.size() != 1) throw Error(ErrorKind::InvalidInput, "--sigma takes exactly one class");
      const LatticeClass image = reflect(sigma_word.front(), parse_lattice_class(class_text));
      write_output(g, g.json ? dump(to_json(image)) : image.str() + "\n");
    } else if (*diffeo) {
      const Isometry m = compose_word(parse_word(word_arg));
      const LatticeClass lift = parse_lattice_class(lift_text);
      Json j = to_json(m);
      j["determinant"] = to_json(m.matrix().determinant());
      j["alpha"] = alpha(m);
      j["image_of_c"] = to_json(m(lift));
      j["beta"] = beta(m, lift);
      j["ring"] = to_string(ym_ring(m, lift));
      if (g.json) {
        write_output(g, dump(j));
      } else {
        std::ostringstream os;
        os << "word: " << word_text(m.word()) << "\nmatrix:\n";
        for (int r = 0; r < 3; ++r)
          os << "  " << m.matrix()(r, 0) << " " << m.matrix()(r, 1) << " " << m.matrix()(r, 2) << "\n";
        os << "c " << lift.str() << " -> " << m(lift).str() << "\n"
           << "alpha " << alpha(m) << ", beta " << beta(m, lift) << ", ring " << to_string(ym_ring(m, lift))
           << "\n";
        write_output(g, os.str());
      }
    } else if (*invariant) {
      const Isometry m = compose_word(parse_word(word_arg));
      const ChamberPoint start = parse_start(start_text);
      const LatticeClass lift = parse_lattice_class(lift_text);
      CrossingOptions options;
      options.orientation = g.homology();
      const CrossingReport report = separation_crossings(m, start, options);
      const CoefficientRing ring = ym_ring(m, lift);
      const InvariantExpression expr = one_param_invariant(report, ring, symbol);
      if (g.json) {
        Json j = to_json(report);
        Json ordered = Json::array();
        if (!(start == report.end))
          for (const auto& c : segment_crossings_oracle(start, report.end, options)) ordered.push_back(to_json(c));
        j["path_order"] = std::move(ordered);
        j["ring"] = to_string(ring);
        j["expression"] = to_json(expr);
        write_output(g, dump(j));
      } else {
        std::ostringstream os;
        os << "word: " << word_text(m.word()) << "\n";
        for (const auto& c : report.crossings)
          os << "  " << c.wall.label() << "  direction " << c.direction << "  contributes "
             << (c.doubled() > 0 ? "+" : "") << c.doubled() << "\n";
        os << "gamma.W = " << report.gamma_dot_W << "\n"
           << "D_Z = " << kGluingMultiplicity * report.gamma_dot_W << " D_" << symbol << " over "
           << to_string(ring) << "\n";
        write_output(g, os.str());
      }
    } else if (*figure) {
      FigureSpec spec = FigureSpec::standard();
      spec.wall_c_max = parse_integer(figure_c_max);
      spec.orientation = g.homology();
      if (!figure_points.empty()) {
        spec.points.clear();
        for (const auto& text : figure_points) {
          const auto comma = text.find(',');
          if (comma == std::string::npos) throw Error(ErrorKind::InvalidInput, "--point expects u,v");
          spec.points.push_back({"(" + text + ")", parse_rational(text.substr(0, comma)),
                                 parse_rational(text.substr(comma + 1))});
        }
      }
      if (!figure_words.empty()) {
        spec.words.clear();
        for (const auto& w : figure_words) spec.words.push_back(parse_word(w));
      }
      write_output(g, render_figure(spec));
    } else if (*sw) {
      const Integer b_plus_x = parse_integer(b_plus_x_text);
      const SwResult r = sw_reflection_invariant(SwContext(b_plus_x, alpha(reflection_matrix(sigma_plus()))));
      if (g.json) {
        write_output(g, dump(to_json(r)));
      } else {
        std::ostringstream os;
        os << "SW(f) = " << r.parity << " mod 2, epsilon parity " << r.epsilon_parity << ", ring "
           << to_string(r.ring) << "\n";
        write_output(g, os.str());
      }
    } else if (*dim) {
      const Integer d = ym_dimension(parse_integer(p1_text), parse_integer(b_plus_text));
      write_output(g, g.json ? dump(Json{{"dimension", to_json(d)}}) : d.get_str() + "\n");
    } else if (*verify) {
      const auto results = run_verify(only);
      if (g.json) {
        Json j = Json::array();
        for (const auto& r : results)
          j.push_back(Json{{"name", r.name}, {"expected", r.expected}, {"actual", r.actual}, {"pass", r.pass}});
        write_output(g, dump(j));
      } else {
        std::ostringstream os;
        for (const auto& r : results) {
          os << (r.pass ? "PASS " : "FAIL ") << r.name;
          if (!r.pass) os << "\n     expected " << r.expected << "\n     actual   " << r.actual;
          os << "\n";
        }
        os << results.size() << " fixtures, " << (all_pass(results) ? "all passed" : "FAILURES") << "\n";
        write_output(g, os.str());
      }
      return all_pass(results) ? 0 : kExitFixtureFailure;
    }
  } catch (const Error& e) {
    std::cerr << "wallcross: " << to_string(e.kind()) << ": " << message_for(e) << " (" << e.what() << ")\n";
    return kExitInvalidInput;
  }
  return 0;
}
