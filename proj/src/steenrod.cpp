#include "qsteen/steenrod.hpp"

#include <stdexcept>

namespace qsteen {

namespace {

// product of two h-graded free polynomials
std::map<int, Gf2Poly> hmul(const std::map<int, Gf2Poly>& a, const std::map<int, Gf2Poly>& b) {
    std::map<int, Gf2Poly> r;
    for (const auto& [ha, pa] : a)
        for (const auto& [hb, pb] : b) r[ha + hb] += pa * pb;
    return r;
}

void require_degree2(const RingPresentation& ring) {
    for (const auto& g : ring.generators)
        if (g.degree != 2)
            throw std::invalid_argument("Steenrod engine requires degree-2 generators (ring " +
                                        ring.name + ")");
}

}  // namespace

std::map<int, Gf2Poly> sq_free_monomial(const RingPresentation& ring, const Monomial& m) {
    std::map<int, Gf2Poly> acc{{0, Gf2Poly::one(ring.nvars())}};
    for (std::size_t g = 0; g < ring.nvars(); ++g) {
        Gf2Poly x(Monomial::var(ring.nvars(), g));
        std::map<int, Gf2Poly> sqg{{2, x}, {0, x * x}};  // g h^2 + g^2, free
        for (unsigned e = 0; e < m.exp(g); ++e) acc = hmul(acc, sqg);
    }
    return acc;
}

bool check_sq_closure(const RingPresentation& ring, std::string* diag) {
    for (const auto& r : ring.relations) {
        std::map<int, Gf2Poly> total;
        for (const auto& m : r.terms())
            for (const auto& [h, p] : sq_free_monomial(ring, m)) total[h] += p;
        for (const auto& [h, p] : total) {
            if (!ring.nf(p).is_zero()) {
                if (diag)
                    *diag = "relation ideal of " + ring.name +
                            " is not Sq-closed (failing h-exponent " + std::to_string(h) + ")";
                return false;
            }
        }
    }
    return true;
}

SqTable build_sq_table(const RingPresentation& ring) {
    require_degree2(ring);
    for (const auto& [d, ms] : ring.basis)
        if (d % 2 != 0 && !ms.empty())
            throw std::invalid_argument("ring has odd-degree cohomology, unsupported");
    std::string diag;
    if (!check_sq_closure(ring, &diag)) throw std::invalid_argument(diag);

    SqTable t;
    for (const auto& [d, ms] : ring.basis) {
        for (const auto& m : ms) {
            Series s;
            for (const auto& [h, p] : sq_free_monomial(ring, m)) s.add(h, 0, ring.nf(p));
            t.entries[m] = s;
        }
    }
    return t;
}

Series sq_generator(const RingPresentation& ring, std::size_t gen) {
    require_degree2(ring);
    Gf2Poly x(Monomial::var(ring.nvars(), gen));
    Series s;
    s.add(2, 0, x);
    s.add(0, 0, ring.nf(x * x));
    return s;
}

Series sq(const RingPresentation& ring, const SqTable& table, const Gf2Poly& a) {
    Series s;
    Gf2Poly n = ring.nf(a);
    for (const auto& m : n.terms()) {
        auto it = table.entries.find(m);
        if (it != table.entries.end()) {
            s += it->second;
        } else {
            for (const auto& [h, p] : sq_free_monomial(ring, m)) s.add(h, 0, ring.nf(p));
        }
    }
    return s;
}

Gf2Poly sq_component(const RingPresentation& ring, const SqTable& table, const Gf2Poly& a, int deg,
                     int i) {
    return sq(ring, table, a).part(deg - i, 0);
}

Series wu_class(const RingPresentation& ring, const SqTable& table) {
    auto duals = dual_basis(ring);
    Series v;
    for (const auto& [d, ms] : ring.basis) {
        for (const auto& y : ms) {
            // <Sq(y^dual),[M]> as a polynomial in h, per <a h, A> = <a, A> h
            Series s = sq(ring, table, duals.at(y));
            for (const auto& [k, p] : s.parts())
                if (ring.pairing(p)) v.add_term(k.first, 0, y);
        }
    }
    return v;
}

Series stiefel_whitney(const RingPresentation& ring, const SqTable& table) {
    Series w;
    Series v = wu_class(ring, table);
    for (const auto& [k, p] : v.parts()) w += sq(ring, table, p).shift(k.first, 0);
    return w;
}

}  // namespace qsteen
