#include "qsteen/qsteenrod.hpp"

#include <stdexcept>

namespace qsteen {

namespace {

int poly_degree(const RingPresentation& ring, const Gf2Poly& p) {
    int d = -1;
    if (!p.homogeneous(ring.degrees(), &d))
        throw std::invalid_argument("expected a homogeneous class");
    return d;
}

Series qs_poly(const QsTable& table, const Gf2Poly& p) {
    Series s;
    for (const auto& m : p.terms()) s += table.entries.at(m);
    return s;
}

// n(x, mu_2) for a degree-2 class x (sum of generators)
int intersection_number(const RingPresentation& ring, const CurveClass& cc, const Gf2Poly& x) {
    int n = 0;
    for (const auto& m : x.terms()) {
        for (std::size_t g = 0; g < ring.nvars(); ++g) {
            if (m.exp(g)) {
                if (m.degree(ring.degrees()) != 2) throw std::invalid_argument("|x| must be 2");
                n ^= cc.intersections[g];
            }
        }
    }
    return n;
}

Series q_correction_entry(const RingPresentation& ring, const QuantumStructure& q, const Series& qsb,
                          int b_deg, const Gf2Poly& x) {
    Series out;
    for (const auto& [key, z] : qsb.parts()) {
        auto [i_c, l_c] = key;
        for (std::size_t mu = 0; mu < q.curve_classes.size(); ++mu) {
            int k = q.energy(mu);
            if (!intersection_number(ring, q.curve_classes[mu], x)) continue;
            Gf2Poly res = product_restricted(ring, q, z, x, mu, k);
            if (res.is_zero()) continue;
            int forced_h = 2 * (b_deg + 2) - poly_degree(ring, res) - 2 * q.N * (l_c + k);
            if (forced_h < 2) throw std::logic_error("q_correction: forced h-exponent < 2");
            if (forced_h != i_c + 2) throw std::logic_error("q_correction: degree bookkeeping broken");
            out.add(forced_h, l_c + k, res);
        }
    }
    return out;
}

}  // namespace

Series q_correction(const RingPresentation& ring, const QuantumStructure& q, const QsTable& table,
                    const Gf2Poly& b, const Gf2Poly& x) {
    if (poly_degree(ring, x) != 2) throw std::invalid_argument("q_correction: |x| must be 2");
    Series out;
    Gf2Poly bn = ring.nf(b);
    for (const auto& bm : bn.terms()) {
        int bd = bm.degree(ring.degrees());
        out += q_correction_entry(ring, q, table.entries.at(bm), bd, x);
    }
    return out;
}

QsTable build_qs_table(const RingPresentation& ring, const QuantumStructure& q,
                       const std::vector<std::size_t>& gen_order) {
    for (const auto& g : ring.generators)
        if (g.degree != 2)
            throw std::invalid_argument("QS engine requires degree-2 generators (ring " + ring.name +
                                        ")");
    // the classical table build also certifies Sq-closure of the ideal
    (void)build_sq_table(ring);

    std::vector<std::size_t> order = gen_order;
    if (order.empty())
        for (std::size_t i = 0; i < ring.nvars(); ++i) order.push_back(i);

    QsTable table;
    for (const auto& [d, ms] : ring.basis) {
        for (const auto& m : ms) {
            if (d == 0) {
                table.entries[m] = Series::classical(Gf2Poly(m));
                continue;
            }
            std::size_t g = ring.nvars();
            for (std::size_t cand : order)
                if (m.exp(cand)) {
                    g = cand;
                    break;
                }
            if (g == ring.nvars())
                throw std::invalid_argument("basis class not reachable by degree-2 factorization");
            Gf2Poly xg(Monomial::var(ring.nvars(), g));

            if (d == 2) {
                // QS(x) = x h^2 + x*x
                Series s;
                s.add(2, 0, xg);
                s += quantum_product(ring, q, Series::classical(xg), Series::classical(xg));
                table.entries[m] = s;
                continue;
            }

            Monomial bm = m.quotient(Monomial::var(ring.nvars(), g));
            Gf2Poly b(bm);
            Series qs_b = table.entries.at(bm);
            Series qs_g = table.entries.at(Monomial::var(ring.nvars(), g));

            Series s = quantum_product(ring, q, qs_b, qs_g);
            s += q_correction_entry(ring, q, qs_b, d - 2, xg);
            // b*g = m + quantum remainder; move the remainder's QS (with
            // doubled T-exponents) to the other side
            Series prod = quantum_product(ring, q, Series::classical(b), Series::classical(xg));
            if (prod.part(0, 0) != Gf2Poly(m))
                throw std::logic_error("greedy factorization: classical part mismatch");
            for (const auto& [k, z] : prod.parts())
                if (k.second > 0) s += qs_poly(table, z).shift(0, 2 * k.second);
            table.entries[m] = s;
        }
    }
    return table;
}

Series qs(const RingPresentation& ring, const QuantumStructure& q, const QsTable& table,
          const Series& a) {
    (void)q;
    Series out;
    for (const auto& [k, p] : a.parts()) {
        if (k.first != 0) throw std::invalid_argument("qs expects a QTElement (no h part)");
        Gf2Poly n = ring.nf(p);
        for (const auto& m : n.terms()) out += table.entries.at(m).shift(0, 2 * k.second);
    }
    return out;
}

CartanReport verify_quantum_cartan(const RingPresentation& ring, const QuantumStructure& q,
                                   const QsTable& table, const Gf2Poly& b, const Gf2Poly& x) {
    CartanReport rep;
    Series bx = quantum_product(ring, q, Series::classical(b), Series::classical(x));
    rep.lhs = qs(ring, q, table, bx);
    rep.correction = q_correction(ring, q, table, b, x);
    rep.rhs = quantum_product(ring, q, qs(ring, q, table, Series::classical(b)),
                              qs(ring, q, table, Series::classical(x))) +
              rep.correction;
    rep.ok = (rep.lhs == rep.rhs);
    return rep;
}

namespace {

// binomial with possibly negative upper index treated as 0
int cbin(long long n, long long k) { return n < 0 ? 0 : lucas_binom(n, k); }

void add_cpn_term(Series& s, int coeff, int power, int h, int n) {
    if (!coeff) return;
    if (power >= n + 1)
        s.add_term(h, 1, Monomial::var(1, 0, unsigned(power - n - 1)));
    else
        s.add_term(h, 0, Monomial::var(1, 0, unsigned(power)));
}

}  // namespace

Series qs_cpn_closed(int i, int n) {
    if (i < 0 || i > n) throw std::invalid_argument("qs_cpn_closed: need 0 <= i <= n");
    Series s;
    for (int j = 0; j <= i; ++j) {
        int c = lucas_binom(i, j);
        for (int k = 0; k <= n / 2 + 1; ++k) c ^= cbin(n - k, k) & cbin(i - (n + 1 - k), j - k);
        add_cpn_term(s, c, i + j, 2 * (i - j), n);
    }
    return s;
}

std::vector<Series> qs_cpn_recurrence(int n) {
    std::vector<Series> out;
    std::vector<std::vector<int>> rows;
    rows.push_back({1});
    for (int i = 1; i <= n; ++i) {
        std::vector<int> row(std::size_t(i) + 1, 0);
        auto prev = [&](int j) { return (j >= 0 && j < i) ? rows.back()[std::size_t(j)] : 0; };
        for (int j = 0; j <= i; ++j) {
            row[std::size_t(j)] = prev(j) ^ prev(j - 1);
            if (j == n - (i - 1)) row[std::size_t(j)] ^= lucas_binom(i - 1, n - (i - 1));
        }
        rows.push_back(row);
    }
    for (int i = 0; i <= n; ++i) {
        Series s;
        for (int j = 0; j <= i; ++j) add_cpn_term(s, rows[std::size_t(i)][std::size_t(j)], i + j, 2 * (i - j), n);
        out.push_back(s);
    }
    return out;
}

Gf2Poly qs_component(const Series& s, int i, int j) { return s.part(i, j); }

Series qs_component_ab(const RingPresentation& ring, const QuantumStructure& q, const Series& qs_val,
                       int x_deg, int t_in, int a_shift, int b_shift) {
    int t = b_shift + t_in;
    int h = x_deg - 2 * q.N * t - a_shift;
    Series out;
    Gf2Poly p = qs_val.part(h, t);
    for (const auto& m : p.terms())
        if (m.degree(ring.degrees()) == x_deg + a_shift) out.add_term(0, t, m);
    return out;
}

Series quantum_stiefel_whitney(const RingPresentation& ring, const QuantumStructure& q,
                               const SqTable& sqt, const QsTable& qst) {
    (void)q;
    auto duals = dual_basis(ring);
    Series w;
    for (const auto& [d, ms] : ring.basis) {
        for (const auto& y : ms) {
            Series s = sq(ring, sqt, duals.at(y));
            for (const auto& [k, p] : s.parts())
                if (ring.pairing(p)) w += qst.entries.at(y).shift(k.first, 0);
        }
    }
    return w;
}

}  // namespace qsteen
