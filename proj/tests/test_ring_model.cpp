#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "qsteen/manifolds.hpp"
#include "qsteen/steenrod.hpp"

using namespace qsteen;

namespace {

Monomial xpow(unsigned i) { return Monomial::var(1, 0, i); }

}  // namespace

TEST_CASE("CP^n basis is 1, x, ..., x^n") {
    for (int n = 1; n <= 10; ++n) {
        Manifold m = make_cpn(n);
        CHECK(m.ring.top_degree == 2 * n);
        for (int d = 0; d <= 2 * n; d += 2) {
            REQUIRE(m.ring.basis.at(d).size() == 1);
            CHECK(m.ring.basis.at(d)[0] == xpow(unsigned(d / 2)));
        }
        CHECK(m.ring.top_monomial == xpow(unsigned(n)));
    }
}

TEST_CASE("five-point blow-up ring dimensions 1, 5, 1") {
    Manifold m = make_m05bar();
    CHECK(m.ring.basis.at(0).size() == 1);
    CHECK(m.ring.basis.at(2).size() == 5);
    CHECK(m.ring.basis.at(4).size() == 1);
    int total = 0;
    for (const auto& [d, ms] : m.ring.basis) total += int(ms.size());
    CHECK(total == 7);  // Euler characteristic
}

TEST_CASE("product-of-spheres bases") {
    Manifold m = make_p1xp1();
    CHECK(m.ring.basis.at(0).size() == 1);
    CHECK(m.ring.basis.at(2).size() == 2);
    CHECK(m.ring.basis.at(4).size() == 1);
    Manifold c = make_p1cubed();
    CHECK(c.ring.basis.at(2).size() == 3);
    CHECK(c.ring.basis.at(4).size() == 3);
    CHECK(c.ring.basis.at(6).size() == 1);
}

TEST_CASE("cup products") {
    Manifold cp2 = make_cpn(2);
    CohomologyClass x{Gf2Poly(xpow(1)), 2};
    CHECK(cup(cp2.ring, x, x).poly == Gf2Poly(xpow(2)));
    Manifold cp1 = make_cpn(1);
    CohomologyClass x1{Gf2Poly(xpow(1)), 2};
    CHECK(cup(cp1.ring, x1, x1).poly.is_zero());
    CohomologyClass one{Gf2Poly::one(1), 0};
    CHECK(cup(cp2.ring, one, x).poly == x.poly);
}

TEST_CASE("dual bases") {
    Manifold cp2 = make_cpn(2);
    auto duals = dual_basis(cp2.ring);
    CHECK(duals.at(xpow(1)) == Gf2Poly(xpow(1)));
    CHECK(duals.at(xpow(0)) == Gf2Poly(xpow(2)));
    CHECK(duals.at(xpow(2)) == Gf2Poly(xpow(0)));

    Manifold pp = make_p1xp1();
    auto pd = dual_basis(pp.ring);
    auto gx = Monomial::var(2, 0), gy = Monomial::var(2, 1);
    CHECK(pd.at(gx) == Gf2Poly(gy));
    CHECK(pd.at(gy) == Gf2Poly(gx));

    Manifold m05 = make_m05bar();
    auto md = dual_basis(m05.ring);
    auto w0 = Monomial::var(5, *m05.ring.generator_index("w0"));
    CHECK(md.at(w0) == Gf2Poly(w0));  // w0^2 = d1 d2 is the top class
    auto d1 = Monomial::var(5, *m05.ring.generator_index("d1"));
    auto d2 = Monomial::var(5, *m05.ring.generator_index("d2"));
    CHECK(md.at(d1) == Gf2Poly(d2));
}

TEST_CASE("dual_basis is an involution for the shipped monomial bases") {
    for (const std::string& name : {"cpn:3", "cpn:6", "p1xp1", "p1cubed", "m05bar"}) {
        Manifold m = *find_manifold(name);
        auto duals = dual_basis(m.ring);
        for (const auto& [d, ms] : m.ring.basis) {
            for (const auto& b : ms) {
                const Gf2Poly& dual = duals.at(b);
                REQUIRE(dual.size() == 1);  // permutation pairing matrix
                CHECK(duals.at(*dual.terms().begin()) == Gf2Poly(b));
            }
        }
    }
}

TEST_CASE("presentations failing Poincare duality are rejected") {
    // H^top 2-dimensional: no relations tying x^2 and y^2 together at top
    std::vector<Gf2Poly> rels{Gf2Poly(Monomial::var(2, 0, 3)), Gf2Poly(Monomial::var(2, 1, 3))};
    CHECK_THROWS_AS(build_ring("bad", {{"x", 2}, {"y", 2}}, rels, 4), std::invalid_argument);
    // standard monomials above top_degree
    CHECK_THROWS_AS(build_ring("bad2", {{"x", 2}}, {Gf2Poly(Monomial::var(1, 0, 4))}, 4),
                    std::invalid_argument);
}

TEST_CASE("Wu classes of small projective spaces") {
    Manifold cp1 = make_cpn(1);
    SqTable t1 = build_sq_table(cp1.ring);
    Series v1;
    v1.add(2, 0, Gf2Poly::one(1));
    CHECK(wu_class(cp1.ring, t1) == v1);

    Manifold cp2 = make_cpn(2);
    SqTable t2 = build_sq_table(cp2.ring);
    Series v2;
    v2.add(4, 0, Gf2Poly::one(1));
    v2.add(0, 0, Gf2Poly(xpow(1)));
    CHECK(wu_class(cp2.ring, t2) == v2);
}

TEST_CASE("Wu duality: <Sq(b),[M]> = <b cup v,[M]> for every basis class") {
    for (const std::string& name : {"cpn:1", "cpn:2", "cpn:5", "p1xp1", "p1cubed", "m05bar"}) {
        Manifold m = *find_manifold(name);
        SqTable t = build_sq_table(m.ring);
        Series v = wu_class(m.ring, t);
        for (const auto& [d, ms] : m.ring.basis) {
            for (const auto& b : ms) {
                Series lhs_pair, rhs_pair;
                Series sqb = sq(m.ring, t, Gf2Poly(b));
                for (const auto& [k, p] : sqb.parts())
                    if (m.ring.pairing(p)) lhs_pair.add(k.first, 0, Gf2Poly::one(m.ring.nvars()));
                for (const auto& [k, p] : v.parts())
                    if (m.ring.pairing(p * Gf2Poly(b))) rhs_pair.add(k.first, 0, Gf2Poly::one(m.ring.nvars()));
                CHECK(lhs_pair == rhs_pair);
            }
        }
    }
}

TEST_CASE("Stiefel-Whitney classes of CP^n match the (1+x)^{n+1} oracle") {
    for (int n = 1; n <= 10; ++n) {
        Manifold m = make_cpn(n);
        SqTable t = build_sq_table(m.ring);
        Series w = stiefel_whitney(m.ring, t);
        Series expect;
        for (int i = 0; i <= n; ++i)
            if (oracles::one_plus_x_pow(n + 1, i)) expect.add(2 * n - 2 * i, 0, Gf2Poly(xpow(unsigned(i))));
        CHECK(w == expect);
    }
}

TEST_CASE("total Stiefel-Whitney classes pinned for small cases") {
    // CP^1: 1.  CP^2: 1 + x + x^2.  CP^3: 1 ((1+x)^4 = 1 + x^4 = 1 mod x^4).
    auto total = [](const Manifold& m) {
        SqTable t = build_sq_table(m.ring);
        Gf2Poly out;
        Series w = stiefel_whitney(m.ring, t);
        for (const auto& [k, p] : w.parts()) out += p;
        return out;
    };
    CHECK(total(make_cpn(1)) == Gf2Poly::one(1));
    Gf2Poly cp2;
    cp2.toggle(xpow(0));
    cp2.toggle(xpow(1));
    cp2.toggle(xpow(2));
    CHECK(total(make_cpn(2)) == cp2);
    CHECK(total(make_cpn(3)) == Gf2Poly::one(1));
}
