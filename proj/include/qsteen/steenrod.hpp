#pragma once

#include "qsteen/series.hpp"

namespace qsteen {

// Total classical Steenrod square on a ring generated in degree 2, built from
// the axioms: Sq(g) = g h^2 + g^2 on generators, Cartan multiplicativity on
// monomials, additivity on sums.
struct SqTable {
    std::map<Monomial, Series> entries;  // basis class -> Sq, t = 0 throughout
};

// Computes Sq of a monomial in the free polynomial ring (no reduction),
// returned as h-exponent -> free polynomial. Used for the closure check and
// for the table via reduction of each component.
std::map<int, Gf2Poly> sq_free_monomial(const RingPresentation& ring, const Monomial& m);

// Representative-independence certificate: Sq of every relation, computed in
// the free ring, must reduce to 0 componentwise. Returns false and fills
// *diag when the relation ideal is not Sq-closed.
bool check_sq_closure(const RingPresentation& ring, std::string* diag = nullptr);

// Throws std::invalid_argument if a generator is not of degree 2, if an
// odd-degree basis class exists, or if the closure check fails.
SqTable build_sq_table(const RingPresentation& ring);

Series sq_generator(const RingPresentation& ring, std::size_t gen);
Series sq(const RingPresentation& ring, const SqTable& table, const Gf2Poly& a);
// Sq^i(a): the h^{|a|-i} coefficient
Gf2Poly sq_component(const RingPresentation& ring, const SqTable& table, const Gf2Poly& a, int deg,
                     int i);

// Wu class v with <Sq(b),[M]> = <b cup v,[M]>, via v = sum_y y <Sq(y^dual),[M]>
// and the convention <a h, A> = <a, A> h.
Series wu_class(const RingPresentation& ring, const SqTable& table);
// w(TM) = Sq(v), applied h-linearly
Series stiefel_whitney(const RingPresentation& ring, const SqTable& table);

}  // namespace qsteen
