#pragma once

#include "qsteen/quantum.hpp"
#include "qsteen/steenrod.hpp"

namespace qsteen {

// Memoized quantum Steenrod squares of the basis classes. Entries are built
// recursively: QS(g) = g h^2 + g*g on degree-2 generators, then
// QS(b*g) = QS(b)*QS(g) + q_correction(b,g) with greedy factorization in
// generator order; quantum remainder terms of b*g are handled by additivity
// and the T-doubling rule on already-known lower classes.
struct QsTable {
    std::map<Monomial, Series> entries;
};

// gen_order: optional permutation of generator indices used when picking the
// degree-2 factor (exposed for the factorization-independence property test).
QsTable build_qs_table(const RingPresentation& ring, const QuantumStructure& q,
                       const std::vector<std::size_t>& gen_order = {});

// QS of a QTElement (h-exponent 0 everywhere); QS(a T^j) = QS(a) T^{2j}.
Series qs(const RingPresentation& ring, const QuantumStructure& q, const QsTable& table,
          const Series& a);

// Toric correction term of the quantum Cartan relation, for |x| = 2:
// sum over components (z_c, i_c, l_c) of QS(b) and curve classes mu of energy
// k >= 1 of n(x, mu_2) (z_c *_{mu,k} x) h^{i_c + 2} T^{l_c + k}, the h-exponent
// being forced by degree homogeneity (total degree 2(|b|+2)); a forced
// h-exponent < 2 is a hard error. b is a classical class (sum of basis
// monomials); extended additively.
Series q_correction(const RingPresentation& ring, const QuantumStructure& q, const QsTable& table,
                    const Gf2Poly& b, const Gf2Poly& x);

struct CartanReport {
    bool ok = false;
    Series lhs, rhs, correction;
};
// Checks QS(b*x) == QS(b)*QS(x) + q_correction(b,x), |x| = 2.
CartanReport verify_quantum_cartan(const RingPresentation& ring, const QuantumStructure& q,
                                   const QsTable& table, const Gf2Poly& b, const Gf2Poly& x);

// Closed form for QS(x^i) on CP^n and the Pascal-style recurrence for the
// whole table; both must agree with the general engine.
Series qs_cpn_closed(int i, int n);
std::vector<Series> qs_cpn_recurrence(int n);  // index i = 0..n

// QS_{i,j}(a): coefficient of h^i T^j
Gf2Poly qs_component(const Series& s, int i, int j);
// QS^{a,b}(x T^i): component with class degree |x| + a_shift at T-exponent
// b_shift + i, re-embedded as a QTElement (T-exponent b_shift + i).
Series qs_component_ab(const RingPresentation& ring, const QuantumStructure& q, const Series& qs_val,
                       int x_deg, int t_in, int a_shift, int b_shift);

// w_Q(TM) = sum_y QS(y) <Sq(y^dual),[M]>
Series quantum_stiefel_whitney(const RingPresentation& ring, const QuantumStructure& q,
                               const SqTable& sqt, const QsTable& qst);

}  // namespace qsteen
