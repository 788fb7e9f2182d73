#include "qsteen/adem.hpp"

#include <cassert>
#include <stdexcept>

namespace qsteen {

namespace {

const std::size_t E = 0, S1 = 1, S2 = 2;   // BD8 generator indices
const std::size_t N1 = 0, N2 = 1, C3 = 2;  // BS4 generator indices

}  // namespace

GradedAlgebra bd8_ring() {
    GradedAlgebra a;
    a.gens = {{"e", 1}, {"s1", 1}, {"s2", 2}};
    a.gb = GroebnerBasis::make({1, 1, 2}, {Gf2Poly(Monomial::var(3, E) * Monomial::var(3, S1))});
    return a;
}

GradedAlgebra bs4_ring() {
    GradedAlgebra a;
    a.gens = {{"n1", 1}, {"n2", 2}, {"c3", 3}};
    a.gb = GroebnerBasis::make({1, 2, 3}, {Gf2Poly(Monomial::var(3, N1) * Monomial::var(3, C3))});
    return a;
}

Gf2Poly pi_star(const Gf2Poly& p) {
    static const GradedAlgebra bd8 = bd8_ring();
    Gf2Poly im_n1(Monomial::var(3, S1));
    Gf2Poly im_n2(Monomial::var(3, S2));
    im_n2.toggle(Monomial::var(3, E, 2));
    Gf2Poly im_c3(Monomial::var(3, E) * Monomial::var(3, S2));

    Gf2Poly out;
    for (const auto& m : p.terms()) {
        Gf2Poly acc = Gf2Poly::one(3);
        for (unsigned i = 0; i < m.exp(N1); ++i) acc = acc * im_n1;
        for (unsigned i = 0; i < m.exp(N2); ++i) acc = acc * im_n2;
        for (unsigned i = 0; i < m.exp(C3); ++i) acc = acc * im_c3;
        out += acc;
    }
    return bd8.gb.normal_form(out);
}

void QqElement::toggle(const Monomial& cls, int i, int j) {
    auto& s = parts[cls];
    auto key = std::make_pair(i, j);
    if (!s.erase(key)) s.insert(key);
    if (s.empty()) parts.erase(cls);
}

QqElement qq_classical(const RingPresentation& ring, const SqTable& sqt, const Gf2Poly& alpha,
                       int alpha_deg) {
    QqElement out;
    for (int p = 0; p <= alpha_deg; ++p) {
        Gf2Poly sp = sq_component(ring, sqt, alpha, alpha_deg, p);
        if (sp.is_zero()) continue;
        for (int q = 0; q <= alpha_deg + p; ++q) {
            int ei = alpha_deg + p - q, sj = alpha_deg - p;
            if (ei < 0 || sj < 0) continue;
            Gf2Poly sqp = sq_component(ring, sqt, sp, alpha_deg + p, q);
            for (const auto& m : sqp.terms()) out.toggle(m, ei, sj);
        }
    }
    return out;
}

Gf2Poly qq_coefficient(const QqElement& q, int i, int j) {
    Gf2Poly out;
    for (const auto& [cls, mons] : q.parts)
        if (mons.count({i, j})) out.toggle(cls);
    return out;
}

namespace {

// solve a (possibly rectangular) GF(2) system; returns solution or nullopt
std::optional<std::vector<int>> solve_rect(std::vector<std::vector<int>> a, std::vector<int> rhs,
                                           std::size_t ncols) {
    std::size_t rows = a.size(), row = 0;
    std::vector<std::size_t> pivot_col(rows, SIZE_MAX);
    for (std::size_t col = 0; col < ncols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && !a[piv][col]) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[row]);
        std::swap(rhs[piv], rhs[row]);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != row && a[i][col]) {
                for (std::size_t j = 0; j < ncols; ++j) a[i][j] ^= a[row][j];
                rhs[i] ^= rhs[row];
            }
        pivot_col[row] = col;
        ++row;
    }
    for (std::size_t i = row; i < rows; ++i)
        if (rhs[i]) return std::nullopt;
    std::vector<int> x(ncols, 0);
    for (std::size_t i = 0; i < row; ++i) x[pivot_col[i]] = rhs[i];
    return x;
}

}  // namespace

Fact1Part fact1_solve_part(const std::set<std::pair<int, int>>& monomials) {
    Fact1Part out;
    if (monomials.empty()) {
        out.in_span = true;
        return out;
    }
    int d = monomials.begin()->first + 2 * monomials.begin()->second;
    for (const auto& [i, j] : monomials)
        if (i + 2 * j != d) return out;  // mixed bidegree, not a single part

    std::vector<std::pair<int, int>> cols;  // (a,b) with 2a + 3b = d
    for (int b = 0; 3 * b <= d; ++b)
        if ((d - 3 * b) % 2 == 0) cols.emplace_back((d - 3 * b) / 2, b);
    std::vector<std::pair<int, int>> rowsix;  // all e^i s2^j of bidegree d
    for (int j = 0; 2 * j <= d; ++j) rowsix.emplace_back(d - 2 * j, j);

    std::vector<std::vector<int>> mat(rowsix.size(), std::vector<int>(cols.size(), 0));
    std::vector<int> rhs(rowsix.size(), 0);
    for (std::size_t r = 0; r < rowsix.size(); ++r) {
        auto [i, j] = rowsix[r];
        if (monomials.count({i, j})) rhs[r] = 1;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            auto [a, b] = cols[c];
            if ((i - b) < 0 || (i - b) % 2 != 0) continue;
            int m = (i - b) / 2;
            if (m > a || a - m + b != j) continue;
            mat[r][c] = lucas_binom(a, m);
        }
    }
    auto sol = solve_rect(mat, rhs, cols.size());
    if (!sol) return out;
    out.in_span = true;
    for (std::size_t c = 0; c < cols.size(); ++c)
        if ((*sol)[c]) out.coeffs[cols[c]] = 1;
    return out;
}

std::map<Monomial, Fact1Part> fact1_solve(const QqElement& q, bool* all_in_span) {
    std::map<Monomial, Fact1Part> out;
    bool ok = true;
    for (const auto& [cls, mons] : q.parts) {
        out[cls] = fact1_solve_part(mons);
        ok = ok && out[cls].in_span;
    }
    if (all_in_span) *all_in_span = ok;
    return out;
}

bool lemma72_check(int m, int s) {
    int lhs = lucas_binom(3 * s + m, s + m);
    int rhs = 0;
    for (int l = 0; l <= s; ++l) rhs ^= lucas_binom(m + l - 1, 2 * l) & lucas_binom(3 * s + m, s - l);
    return lhs == rhs;
}

std::vector<std::pair<int, std::pair<int, int>>> adem_rhs(int p, int q) {
    if (p <= 0 || q <= 0 || q >= 2 * p) throw std::invalid_argument("adem_rhs: need 0 < q < 2p");
    std::vector<std::pair<int, std::pair<int, int>>> out;
    for (int s = 0; s <= q / 2; ++s)
        if (lucas_binom(p - s - 1, q - 2 * s)) out.push_back({1, {p + q - s, s}});
    return out;
}

bool verify_adem(const RingPresentation& ring, const SqTable& sqt, int p, int q, std::string* diag) {
    auto rhs_terms = adem_rhs(p, q);
    for (const auto& [d, ms] : ring.basis) {
        for (const auto& am : ms) {
            Gf2Poly alpha(am);
            Gf2Poly lhs = sq_component(ring, sqt, sq_component(ring, sqt, alpha, d, p), d + p, q);
            Gf2Poly rhs;
            for (const auto& [c, sq_pair] : rhs_terms) {
                auto [hi, lo] = sq_pair;
                rhs += sq_component(ring, sqt, sq_component(ring, sqt, alpha, d, lo), d + lo, hi);
            }
            if (lhs != rhs) {
                if (diag)
                    *diag = "Adem (" + std::to_string(p) + "," + std::to_string(q) +
                            ") fails on a degree-" + std::to_string(d) + " class of " + ring.name;
                return false;
            }
        }
    }
    return true;
}

namespace {

// sum over components z h^{hi_inner} T^d of QS(alpha) and components
// w h^{hi_outer} T^{t'} of QS(z) of w T^{t' + 2d}
Series qs_compose(const QsTable& table, const Series& qs_alpha, int hi_inner, int hi_outer) {
    Series out;
    for (const auto& [k, z] : qs_alpha.parts()) {
        if (k.first != hi_inner) continue;
        for (const auto& zm : z.terms()) {
            const Series& qz = table.entries.at(zm);
            for (const auto& [k2, w] : qz.parts())
                if (k2.first == hi_outer) out.add(0, k2.second + 2 * k.second, w);
        }
    }
    return out;
}

}  // namespace

Series quantum_adem_defect(const RingPresentation& ring, const QuantumStructure&,
                           const QsTable& table, const Gf2Poly& alpha, int p, int qq) {
    int deg = -1;
    if (!alpha.homogeneous(ring.degrees(), &deg) || deg < 0)
        throw std::invalid_argument("defect: alpha must be homogeneous and nonzero");
    Series qs_alpha;
    Gf2Poly n = ring.nf(alpha);
    for (const auto& m : n.terms()) qs_alpha += table.entries.at(m);

    Series defect = qs_compose(table, qs_alpha, deg - p, deg + p - qq);
    for (int s = 0; s <= qq / 2; ++s)
        if (lucas_binom(p - s - 1, qq - 2 * s))
            defect += qs_compose(table, qs_alpha, deg - s, deg + 2 * s - p - qq);
    return defect;
}

}  // namespace qsteen
