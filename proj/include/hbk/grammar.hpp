#pragma once

#include <string>
#include <string_view>

#include "hbk/engine.hpp"

namespace hbk {

// Textual forms.
//
//   spec    :=  k:<int>;<tangle>
//   tangle  :=  rational:<s>:<p>/<q>
//            |  composite:<s|->:<knots>:<descriptor>
//   knots   :=  [ <name><+|-|=> { , <name><+|-|=> } ]     (may be empty)
//
// <s> is one of x, y, z; "-" marks a composite with no rational vertex.
// Rational fractions are validated on parse (nontrivial, odd denominator).
// Descriptors may carry the recorded-move suffixes ~m and ~s. Composite
// tangles parsed from text are declared atoroidal; non-atoroidal tangles
// exist only through the API and are rejected by the engine.

TauTangle parse_tangle(std::string_view text);  // throws ParseError and the validation errors
HbkSpec parse_spec(std::string_view text);

KnotLabel parse_knot(std::string_view text);

std::string format_knot(const KnotLabel& knot);
std::string format_tangle(const TauTangle& tangle);
std::string format_spec(const HbkSpec& spec);

}  // namespace hbk
