#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsteen/manifolds.hpp"

using namespace qsteen;

namespace {

Series cls(const RingPresentation& ring, const Monomial& m) { return Series::classical(Gf2Poly(m)); }
Monomial xpow(unsigned i) { return Monomial::var(1, 0, i); }

}  // namespace

TEST_CASE("CP^1: x * x = T") {
    Manifold m = make_cpn(1);
    Series prod = quantum_product(m.ring, *m.quantum, cls(m.ring, xpow(1)), cls(m.ring, xpow(1)));
    Series expect;
    expect.add(0, 1, Gf2Poly::one(1));
    CHECK(prod == expect);
}

TEST_CASE("CP^2: x * x^2 = T") {
    Manifold m = make_cpn(2);
    Series prod = quantum_product(m.ring, *m.quantum, cls(m.ring, xpow(1)), cls(m.ring, xpow(2)));
    Series expect;
    expect.add(0, 1, Gf2Poly::one(1));
    CHECK(prod == expect);
}

TEST_CASE("CP^1 x CP^1 products") {
    Manifold m = make_p1xp1();
    auto gx = Monomial::var(2, 0), gy = Monomial::var(2, 1);
    Series xy = quantum_product(m.ring, *m.quantum, cls(m.ring, gx), cls(m.ring, gy));
    CHECK(xy == Series::classical(Gf2Poly(gx * gy)));
    Series xx = quantum_product(m.ring, *m.quantum, cls(m.ring, gx), cls(m.ring, gx));
    Series t;
    t.add(0, 1, Gf2Poly::one(2));
    CHECK(xx == t);
    // (xy) * (xy) = T^2
    Series top2 = quantum_product(m.ring, *m.quantum, cls(m.ring, gx * gy), cls(m.ring, gx * gy));
    Series t2;
    t2.add(0, 2, Gf2Poly::one(2));
    CHECK(top2 == t2);
}

TEST_CASE("restricted products") {
    Manifold cp3 = make_cpn(3);
    CHECK(product_restricted(cp3.ring, *cp3.quantum, Gf2Poly(xpow(3)), Gf2Poly(xpow(1)), 0, 1) ==
          Gf2Poly::one(1));
    Manifold cp2 = make_cpn(2);
    CHECK(product_restricted(cp2.ring, *cp2.quantum, Gf2Poly(xpow(1)), Gf2Poly(xpow(1)), 0, 1)
              .is_zero());
    Manifold pp = make_p1xp1();
    auto gx = Monomial::var(2, 0), gy = Monomial::var(2, 1);
    for (std::size_t mu = 0; mu < pp.quantum->curve_classes.size(); ++mu) {
        int k = pp.quantum->energy(mu);
        if (k == 1)
            CHECK(product_restricted(pp.ring, *pp.quantum, Gf2Poly(gx), Gf2Poly(gy), mu, k).is_zero());
    }
    CHECK_THROWS_AS(product_restricted(cp3.ring, *cp3.quantum, Gf2Poly(xpow(1)), Gf2Poly(xpow(1)), 0, 2),
                    std::invalid_argument);
}

TEST_CASE("T-linearity and degree of the product") {
    Manifold m = make_cpn(3);
    Series a = cls(m.ring, xpow(2)).shift(0, 2);  // x^2 T^2
    Series b = cls(m.ring, xpow(3)).shift(0, 1);  // x^3 T
    Series prod = quantum_product(m.ring, *m.quantum, a, b);
    Series plain = quantum_product(m.ring, *m.quantum, cls(m.ring, xpow(2)), cls(m.ring, xpow(3)));
    CHECK(prod == plain.shift(0, 3));
    CHECK(prod.homogeneous(m.ring, 4 + 6 + 2 * m.quantum->N * 3, m.quantum->N));
}

TEST_CASE("validation passes on all shipped quantum structures") {
    for (const std::string& name : {"cpn:1", "cpn:2", "cpn:3", "cpn:5", "p1xp1", "p1cubed"}) {
        Manifold m = *find_manifold(name);
        REQUIRE(m.quantum.has_value());
        CHECK(validate_quantum(m.ring, *m.quantum).empty());
    }
}

TEST_CASE("setting the quantum constants to zero recovers the cup product") {
    Manifold m = make_p1cubed();
    QuantumStructure stripped = *m.quantum;
    stripped.constants.clear();
    std::vector<Monomial> all;
    for (const auto& [d, ms] : m.ring.basis) all.insert(all.end(), ms.begin(), ms.end());
    for (const auto& a : all)
        for (const auto& b : all) {
            Series prod = quantum_product(m.ring, stripped, cls(m.ring, a), cls(m.ring, b));
            CHECK(prod == Series::classical(m.ring.nf(Gf2Poly(a) * Gf2Poly(b))));
        }
}

TEST_CASE("corrupted structures fail validation") {
    // wrong |T|: CP^1 with N = 1 makes x*x = T degree-inhomogeneous
    Manifold m = make_cpn(1);
    QuantumStructure bad = *m.quantum;
    bad.N = 1;
    bad.curve_classes[0].chern = 1;
    CHECK(!validate_quantum(m.ring, bad).empty());

    // broken associativity: drop the x * x^2 -> T constant on CP^2
    Manifold c2 = make_cpn(2);
    QuantumStructure assoc = *c2.quantum;
    assoc.constants.erase({Monomial::var(1, 0, 1), Monomial::var(1, 0, 2), 0, 1});
    auto errs = validate_quantum(c2.ring, assoc);
    bool saw_assoc = false;
    for (const auto& e : errs) saw_assoc = saw_assoc || e.find("associativity") != std::string::npos;
    CHECK(saw_assoc);

    // stray degree-violating constant
    QuantumStructure degbad = *c2.quantum;
    degbad.add_constant(Monomial::var(1, 0, 1), Monomial::var(1, 0, 1), 0, 1, Gf2Poly::one(1));
    CHECK(!validate_quantum(c2.ring, degbad).empty());
}
