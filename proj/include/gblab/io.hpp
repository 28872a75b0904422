#ifndef GBLAB_IO_HPP
#define GBLAB_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "gblab/polynomial.hpp"

namespace gblab {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A system together with its variable names (slot order = name order).
struct NamedSystem {
    PolySystem system;
    std::vector<std::string> varNames;
};

// Text format:
//   ring q=<prime> vars=x1,...,xn
//   x1^2 + 3*x1*x2 - 2*x1
//   ...
// One polynomial per line; blank lines and lines starting with '#' are
// skipped. Constant and zero polynomials are rejected.
NamedSystem parseSystemText(std::istream& in);
NamedSystem parseSystemText(const std::string& text);

// JSON mirror: {"ring": {"q":..., "vars":[...]},
//               "polys": [[[exponents...], coeff], ...] per polynomial}.
NamedSystem parseSystemJson(const std::string& text);
std::string writeSystemJson(const NamedSystem& s);

std::string writeSystemText(const NamedSystem& s);

// Single polynomial in infix form with canonical residues, e.g.
// "x1^2 + 68*x2*x3 + 55*x3^2"; "0" for the zero polynomial.
std::string polyToString(const Polynomial& f, const std::vector<std::string>& varNames);
std::string monomialToString(const Monomial& m, const std::vector<std::string>& varNames);

Polynomial parsePolynomial(const std::string& text, const Ring& ring,
                           const std::vector<std::string>& varNames);

// Variable names for a homogenized ring: the base names plus a fresh name
// for the homogenizing variable ("y", suffixed with '_' on clash).
std::vector<std::string> homogenizedNames(std::vector<std::string> names);

// Reads a file, dispatching on the extension (.json vs text).
NamedSystem loadSystemFile(const std::string& path);

} // namespace gblab

#endif
