#include "qsteen/ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsteen {

std::optional<std::size_t> RingPresentation::generator_index(const std::string& n) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i].name == n) return i;
    return std::nullopt;
}

namespace {

// all standard monomials of weighted degree <= cap, by recursive enumeration
void enumerate(const GroebnerBasis& gb, std::span<const int> degrees, Monomial& cur, std::size_t var,
               int deg, int cap, std::vector<Monomial>& out) {
    if (var == degrees.size()) {
        if (gb.is_standard(cur)) out.push_back(cur);
        return;
    }
    for (int e = 0; deg + e * degrees[var] <= cap; ++e) {
        cur.set_exp(var, unsigned(e));
        enumerate(gb, degrees, cur, var + 1, deg + e * degrees[var], cap, out);
    }
    cur.set_exp(var, 0);
}

}  // namespace

RingPresentation build_ring(std::string name, std::vector<Generator> generators,
                            std::vector<Gf2Poly> relations, int top_degree) {
    RingPresentation r;
    r.name = std::move(name);
    r.generators = std::move(generators);
    r.relations = std::move(relations);
    r.top_degree = top_degree;

    std::vector<int> degs;
    for (const auto& g : r.generators) {
        if (g.degree <= 0) throw std::invalid_argument("generator degree must be positive");
        degs.push_back(g.degree);
    }
    r.gb = GroebnerBasis::make(degs, r.relations);

    int maxgen = 0;
    for (int d : degs) maxgen = std::max(maxgen, d);
    std::vector<Monomial> std_mons;
    Monomial cur(r.nvars());
    enumerate(r.gb, r.degrees(), cur, 0, 0, top_degree + maxgen, std_mons);

    for (const auto& m : std_mons) {
        int d = m.degree(r.degrees());
        if (d > top_degree)
            throw std::invalid_argument("ring " + r.name + ": standard monomial above top degree");
        r.basis[d].push_back(m);
    }

    auto dim = [&](int d) {
        auto it = r.basis.find(d);
        return it == r.basis.end() ? std::size_t(0) : it->second.size();
    };
    if (dim(top_degree) != 1)
        throw std::invalid_argument("ring " + r.name + ": H^top is not 1-dimensional");
    for (int d = 0; d <= top_degree; ++d)
        if (dim(d) != dim(top_degree - d))
            throw std::invalid_argument("ring " + r.name + ": Poincare duality dimension check failed");

    r.top_monomial = r.basis[top_degree][0];
    return r;
}

CohomologyClass cup(const RingPresentation& ring, const CohomologyClass& a, const CohomologyClass& b) {
    return {ring.nf(a.poly * b.poly), a.degree + b.degree};
}

std::optional<std::vector<char>> gf2_solve(std::vector<std::vector<char>> a, std::vector<char> rhs) {
    std::size_t n = rhs.size();
    for (std::size_t col = 0, row = 0; col < n; ++col) {
        std::size_t piv = row;
        while (piv < n && !a[piv][col]) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[row]);
        std::swap(rhs[piv], rhs[row]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i != row && a[i][col]) {
                for (std::size_t j = 0; j < n; ++j) a[i][j] ^= a[row][j];
                rhs[i] ^= rhs[row];
            }
        }
        ++row;
    }
    return rhs;
}

std::map<Monomial, Gf2Poly> dual_basis(const RingPresentation& ring) {
    std::map<Monomial, Gf2Poly> duals;
    for (const auto& [d, classes] : ring.basis) {
        const auto& comp = ring.basis.at(ring.top_degree - d);
        std::size_t n = classes.size();
        std::vector<std::vector<char>> mat(n, std::vector<char>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                mat[i][j] = char(ring.pairing(Gf2Poly(classes[i]) * comp[j]));
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<char> e(n, 0);
            e[i] = 1;
            auto sol = gf2_solve(mat, e);
            if (!sol) throw std::invalid_argument("ring " + ring.name + ": singular Poincare pairing");
            Gf2Poly dual;
            for (std::size_t j = 0; j < n; ++j)
                if ((*sol)[j]) dual.toggle(comp[j]);
            duals[classes[i]] = dual;
        }
    }
    return duals;
}

}  // namespace qsteen
