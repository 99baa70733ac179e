#ifndef WALLCROSS_PARSE_HPP_
#define WALLCROSS_PARSE_HPP_

// Text forms accepted on the command line. All parsers throw InvalidInput on
// malformed text.

#include <string_view>
#include <vector>

#include "wallcross/chambers.hpp"
#include "wallcross/lattice.hpp"

namespace wallcross {

Integer parse_integer(std::string_view text);

/// "p/q", "p" or a terminating decimal such as "-0.5".
Rational parse_rational(std::string_view text);

/// "a,b,c", optionally wrapped in parentheses or brackets.
LatticeClass parse_lattice_class(std::string_view text);

/// Comma-separated reflection word. "+" is s+e1+e2, "-" is s-e1+e2, and any
/// three consecutive integers form an explicit class: "-,+" or "1,-1,1,+".
std::vector<LatticeClass> parse_word(std::string_view text);

/// "poincare:u,v" or "hyperboloid:x,y,z". A bare "u,v" is read as Poincare.
ChamberPoint parse_start(std::string_view text);

} // namespace wallcross

#endif
