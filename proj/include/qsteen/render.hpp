#pragma once

#include "qsteen/series.hpp"

#include <string>

namespace qsteen {

std::string render_monomial(const RingPresentation& ring, const Monomial& m);
// "x^2 h^4 + T h^2 + x T": decreasing h, then increasing T, then monomial order
std::string render_series(const RingPresentation& ring, const Series& s);
std::string render_poly(const RingPresentation& ring, const Gf2Poly& p);

std::string series_csv(const RingPresentation& ring, const Series& s);
std::string series_json(const RingPresentation& ring, const Series& s);

// Parses a class expression over the ring's generators plus "T": sums of
// monomials with ^ exponents, '*' or juxtaposition for products. Returns a
// QTElement (h = 0). Throws std::invalid_argument with a diagnostic.
Series parse_class(const RingPresentation& ring, const std::string& text);

}  // namespace qsteen
