#pragma once

#include "qsteen/qsteenrod.hpp"

#include <set>

namespace qsteen {

// H*(BD8) = Z/2[e, s1, s2]/(e s1), |e| = |s1| = 1, |s2| = 2.
// H*(BS4) = Z/2[n1, n2, c3]/(n1 c3), degrees 1, 2, 3.
// These are infinite dimensional, so they carry a GroebnerBasis directly
// rather than a RingPresentation. Generator order: (e, s1, s2) / (n1, n2, c3).
struct GradedAlgebra {
    std::vector<Generator> gens;
    GroebnerBasis gb;
};

GradedAlgebra bd8_ring();
GradedAlgebra bs4_ring();

// pi*(n1) = s1, pi*(n2) = s2 + e^2, pi*(c3) = e s2, extended multiplicatively
// and normal-formed in BD8.
Gf2Poly pi_star(const Gf2Poly& p);

// qq(alpha) = sum_{p,q} Sq^q Sq^p(alpha) e^{|alpha|+p-q} s2^{|alpha|-p};
// stored per basis class of M as a set of (i, j) for e^i s2^j.
struct QqElement {
    std::map<Monomial, std::set<std::pair<int, int>>> parts;
    void toggle(const Monomial& cls, int i, int j);
    bool operator==(const QqElement&) const = default;
};

QqElement qq_classical(const RingPresentation& ring, const SqTable& sqt, const Gf2Poly& alpha,
                       int alpha_deg);
// qq_{i,j}(alpha): the M-class coefficient of e^i s2^j
Gf2Poly qq_coefficient(const QqElement& q, int i, int j);

// Expresses a set of e^i s2^j monomials (all of one (i + 2j)-degree) in the
// basis (e^2+s2)^a (e s2)^b. coeffs maps (a,b) -> 1 for the used elements.
struct Fact1Part {
    bool in_span = false;
    std::map<std::pair<int, int>, int> coeffs;
};
Fact1Part fact1_solve_part(const std::set<std::pair<int, int>>& monomials);
// Runs the solver on every M-class part; in_span iff all parts succeed.
std::map<Monomial, Fact1Part> fact1_solve(const QqElement& q, bool* all_in_span = nullptr);

// C(3s+m, s+m) = sum_l C(m+l-1, 2l) C(3s+m, s-l) mod 2
bool lemma72_check(int m, int s);

// Sq^q Sq^p = sum_s C(p-s-1, q-2s) Sq^{p+q-s} Sq^s, q < 2p; nonzero terms only
std::vector<std::pair<int, std::pair<int, int>>> adem_rhs(int p, int q);

bool verify_adem(const RingPresentation& ring, const SqTable& sqt, int p, int q,
                 std::string* diag = nullptr);

// The naive quantum Adem defect: sum over (b,d) of
// QS^{q-2bN,b} o QS^{p-2dN,d}(alpha) + sum_s C(p-s-1,q-2s) QS^{p+q-s-2bN,b} o QS^{s-2dN,d}(alpha),
// returned as a QTElement-valued Series (h = 0 keys).
Series quantum_adem_defect(const RingPresentation& ring, const QuantumStructure& q,
                           const QsTable& table, const Gf2Poly& alpha, int p, int qq);

}  // namespace qsteen
