#ifndef EBC_BUNDLE_PARSE_HPP
#define EBC_BUNDLE_PARSE_HPP

#include <string>

#include "ebc/bundle.hpp"

namespace ebc {

/// Parse the bundle DSL:
///   expr  := term ("+" term)*
///   term  := jordan | atom
///   jordan:= "I" INT "(" atom ")"
///   atom  := "O" | "O(" INT "p0)" | "L(" point ")"
///          | "W" INT "(" INT ";" point ")" | "eta" ("1"|"2"|"3")
///   point := RAT "," RAT
/// Throws ParseError with a character position on bad syntax, including the
/// coprimality gate on W atoms.
BundleExpr parse_bundle(const std::string& text);

/// Canonical rendering; parse_bundle(print_bundle(v)) == v.
std::string print_bundle(const BundleExpr& v);
std::string print_atom(const BundleAtom& a);

/// Parse "u,v" with rational u and v.
TorsionPoint parse_point(const std::string& text);

/// Parse a comma-separated rational vector, e.g. "1/3,0,2/3".
RatVector parse_rat_vector(const std::string& text);

} // namespace ebc

#endif
