#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "qsteen/adem.hpp"
#include "qsteen/manifolds.hpp"

using namespace qsteen;

namespace {

const std::size_t E = 0, S2 = 2;   // BD8
const std::size_t N1 = 0, N2 = 1, C3 = 2;  // BS4

Monomial bd8_mono(unsigned e, unsigned s1, unsigned s2) {
    Monomial m(3);
    m.set_exp(0, e);
    m.set_exp(1, s1);
    m.set_exp(2, s2);
    return m;
}

Monomial xpow(unsigned i) { return Monomial::var(1, 0, i); }

std::vector<Monomial> all_basis(const RingPresentation& ring) {
    std::vector<Monomial> out;
    for (const auto& [d, ms] : ring.basis) out.insert(out.end(), ms.begin(), ms.end());
    return out;
}

std::vector<std::string> shipped_rings() {
    std::vector<std::string> names;
    for (int n = 1; n <= 10; ++n) names.push_back("cpn:" + std::to_string(n));
    names.push_back("p1xp1");
    names.push_back("p1cubed");
    names.push_back("m05bar");
    return names;
}

}  // namespace

TEST_CASE("pi_star generator images and small products") {
    Gf2Poly n2(Monomial::var(3, N2));
    Gf2Poly expect_n2(Monomial::var(3, S2));
    expect_n2.toggle(bd8_mono(2, 0, 0));
    CHECK(pi_star(n2) == expect_n2);

    CHECK(pi_star(Gf2Poly(Monomial::var(3, N1))) == Gf2Poly(Monomial::var(3, 1)));

    Gf2Poly n2sq(Monomial::var(3, N2, 2));
    Gf2Poly expect_sq(bd8_mono(0, 0, 2));
    expect_sq.toggle(bd8_mono(4, 0, 0));
    CHECK(pi_star(n2sq) == expect_sq);

    Gf2Poly c3sq(Monomial::var(3, C3, 2));
    CHECK(pi_star(c3sq) == Gf2Poly(bd8_mono(2, 0, 2)));
}

TEST_CASE("pi_star is a ring homomorphism and injective on the reduced subalgebra") {
    // multiplicativity on a sample of monomials in n2, c3
    for (unsigned a = 0; a <= 3; ++a)
        for (unsigned b = 0; b <= 3; ++b)
            for (unsigned c = 0; c <= 2; ++c)
                for (unsigned d = 0; d <= 2; ++d) {
                    Monomial m1(3), m2(3);
                    m1.set_exp(N2, a);
                    m1.set_exp(C3, b);
                    m2.set_exp(N2, c);
                    m2.set_exp(C3, d);
                    CHECK(pi_star(Gf2Poly(m1) * Gf2Poly(m2)) ==
                          pi_star(Gf2Poly(m1)) * pi_star(Gf2Poly(m2)));
                }
    // injectivity: per degree <= 20, the images of the reduced-subalgebra
    // monomials n2^a c3^b are linearly independent over GF(2)
    for (int deg = 1; deg <= 20; ++deg) {
        std::vector<Gf2Poly> images;
        for (int b = 0; 3 * b <= deg; ++b) {
            if ((deg - 3 * b) % 2) continue;
            int a = (deg - 3 * b) / 2;
            Monomial m(3);
            m.set_exp(N2, unsigned(a));
            m.set_exp(C3, unsigned(b));
            images.push_back(pi_star(Gf2Poly(m)));
        }
        // full rank over GF(2) <=> linear independence
        std::set<Monomial> cols_set;
        for (const auto& p : images)
            for (const auto& t : p.terms()) cols_set.insert(t);
        std::vector<Monomial> cols(cols_set.begin(), cols_set.end());
        std::vector<std::vector<int>> mat;
        for (const auto& p : images) {
            std::vector<int> row;
            for (const auto& c : cols) row.push_back(p.contains(c) ? 1 : 0);
            mat.push_back(row);
        }
        std::size_t rank = 0;
        for (std::size_t c = 0; c < cols.size() && rank < mat.size(); ++c) {
            std::size_t piv = rank;
            while (piv < mat.size() && !mat[piv][c]) ++piv;
            if (piv == mat.size()) continue;
            std::swap(mat[piv], mat[rank]);
            for (std::size_t r = 0; r < mat.size(); ++r)
                if (r != rank && mat[r][c])
                    for (std::size_t cc = 0; cc < cols.size(); ++cc) mat[r][cc] ^= mat[rank][cc];
            ++rank;
        }
        CHECK(rank == images.size());
    }
}

TEST_CASE("classical qq values") {
    Manifold cp2 = make_cpn(2);
    SqTable t2 = build_sq_table(cp2.ring);
    QqElement q = qq_classical(cp2.ring, t2, Gf2Poly(xpow(1)), 2);
    QqElement expect;
    expect.toggle(xpow(1), 2, 2);
    expect.toggle(xpow(2), 0, 2);
    expect.toggle(xpow(2), 4, 0);
    CHECK(q == expect);

    QqElement q1 = qq_classical(cp2.ring, t2, Gf2Poly::one(1), 0);
    QqElement e1;
    e1.toggle(xpow(0), 0, 0);
    CHECK(q1 == e1);

    Manifold cp1 = make_cpn(1);
    SqTable t1 = build_sq_table(cp1.ring);
    QqElement qx = qq_classical(cp1.ring, t1, Gf2Poly(xpow(1)), 2);
    QqElement ex;
    ex.toggle(xpow(1), 2, 2);
    CHECK(qx == ex);
}

TEST_CASE("Fact-1 span membership") {
    // e^2 s2^2 = (e s2)^2
    Fact1Part p1 = fact1_solve_part({{2, 2}});
    CHECK(p1.in_span);
    CHECK(p1.coeffs == std::map<std::pair<int, int>, int>{{{0, 2}, 1}});
    // s2^2 + e^4 = (e^2 + s2)^2
    Fact1Part p2 = fact1_solve_part({{0, 2}, {4, 0}});
    CHECK(p2.in_span);
    CHECK(p2.coeffs == std::map<std::pair<int, int>, int>{{{2, 0}, 1}});
    // a bare e is not in the span
    CHECK(!fact1_solve_part({{1, 0}}).in_span);
}

TEST_CASE("Fact-1 expansion coefficient is C(i+j-3k, i-k)") {
    for (int i = 0; i + 0 <= 20; ++i) {
        for (int j = 0; i + j <= 20; ++j) {
            for (int k = 0; 3 * k <= i + j; ++k) {
                int a = i + j - 3 * k;
                if (i - k < 0) continue;
                // expand (e^2+s2)^a (e s2)^{2k} by brute force and read off e^{2i} s2^j
                int coeff = 0;
                for (int m = 0; m <= a; ++m)
                    if (2 * m + 2 * k == 2 * i && a - m + 2 * k == j)
                        coeff ^= oracles::binom_mod2(a, m);
                CHECK(coeff == (lucas_binom(a, i - k) && (a - (i - k) + 2 * k == j) ? 1 : 0));
            }
        }
    }
}

TEST_CASE("fact1_solve succeeds on qq of every basis class of every shipped ring") {
    for (const auto& name : shipped_rings()) {
        Manifold m = *find_manifold(name);
        SqTable t = build_sq_table(m.ring);
        for (const auto& b : all_basis(m.ring)) {
            QqElement q = qq_classical(m.ring, t, Gf2Poly(b), b.degree(m.ring.degrees()));
            bool ok = false;
            auto parts = fact1_solve(q, &ok);
            CHECK(ok);
            // reconstruction: expanding the preimage reproduces the qq part
            for (const auto& [cls, part] : parts) {
                std::set<std::pair<int, int>> rebuilt;
                for (const auto& [ab, one] : part.coeffs) {
                    auto [a, bb] = ab;
                    for (int mm = 0; mm <= a; ++mm)
                        if (lucas_binom(a, mm)) {
                            auto key = std::make_pair(2 * mm + bb, a - mm + bb);
                            if (!rebuilt.erase(key)) rebuilt.insert(key);
                        }
                }
                CHECK(rebuilt == q.parts.at(cls));
            }
        }
    }
}

TEST_CASE("binomial identity grid (m <= 30, s <= 30)") {
    for (int m = 1; m <= 30; ++m)
        for (int s = 0; s <= 30; ++s) CHECK(lemma72_check(m, s));
}

TEST_CASE("Adem right-hand sides") {
    using V = std::vector<std::pair<int, std::pair<int, int>>>;
    CHECK(adem_rhs(2, 1) == V{{1, {3, 0}}});
    CHECK(adem_rhs(1, 1) == V{});
    CHECK(adem_rhs(3, 2) == V{{1, {5, 0}}, {1, {4, 1}}});
    CHECK_THROWS_AS(adem_rhs(1, 2), std::invalid_argument);
}

TEST_CASE("Adem relations hold on CP^5, CP^1 x CP^1 and the blow-up ring, p+q <= 12") {
    for (const std::string& name : {"cpn:5", "p1xp1", "m05bar"}) {
        Manifold m = *find_manifold(name);
        SqTable t = build_sq_table(m.ring);
        for (int p = 1; p <= 12; ++p)
            for (int q = 1; q < 2 * p && p + q <= 12; ++q) {
                std::string diag;
                bool ok = verify_adem(m.ring, t, p, q, &diag);
                CHECK_MESSAGE(ok, diag);
            }
    }
}

TEST_CASE("energy-zero Adem identity on qq coefficients, p+q <= 12") {
    for (const auto& name : shipped_rings()) {
        Manifold m = *find_manifold(name);
        SqTable t = build_sq_table(m.ring);
        for (const auto& b : all_basis(m.ring)) {
            int deg = b.degree(m.ring.degrees());
            QqElement q = qq_classical(m.ring, t, Gf2Poly(b), deg);
            for (int p = 1; p <= 12; ++p) {
                for (int qq2 = 1; qq2 < 2 * p && p + qq2 <= 12; ++qq2) {
                    Gf2Poly lhs = qq_coefficient(q, deg + p - qq2, deg - p);
                    Gf2Poly rhs;
                    for (int s = 0; s <= qq2 / 2; ++s)
                        if (lucas_binom(p - s - 1, qq2 - 2 * s))
                            rhs += qq_coefficient(q, deg + 2 * s - p - qq2, deg - s);
                    CHECK(lhs == rhs);
                }
            }
        }
    }
}

TEST_CASE("quantum Adem defect on CP^2, alpha = x, (p,q) = (2,2)") {
    Manifold m = make_cpn(2);
    QsTable t = build_qs_table(m.ring, *m.quantum);
    Series d = quantum_adem_defect(m.ring, *m.quantum, t, Gf2Poly(xpow(1)), 2, 2);
    CHECK(!d.is_zero());
    Series energy1 = d.t_slice(1);
    Series expect;
    expect.add(0, 1, Gf2Poly::one(1));
    CHECK(energy1 == expect);   // the T term
    CHECK(d.t_slice(0).is_zero());  // classical truncation vanishes
}

TEST_CASE("defect energy-0 truncation vanishes across rings and (p,q)") {
    for (const std::string& name : {"cpn:2", "cpn:3", "cpn:5", "p1xp1"}) {
        Manifold m = *find_manifold(name);
        QuantumStructure wide = *m.quantum;
        wide.jmax *= 2;
        QsTable t = build_qs_table(m.ring, wide);
        for (const auto& b : all_basis(m.ring)) {
            if (b.degree(m.ring.degrees()) == 0) continue;
            for (int p = 1; p <= 4; ++p)
                for (int q = 1; q < 2 * p && p + q <= 6; ++q)
                    CHECK(quantum_adem_defect(m.ring, wide, t, Gf2Poly(b), p, q).t_slice(0).is_zero());
        }
    }
}

TEST_CASE("defect on CP^3, alpha = x, (p,q) = (2,2): regression pin") {
    Manifold m = make_cpn(3);
    QsTable t = build_qs_table(m.ring, *m.quantum);
    // pinned after first computation: the defect vanishes identically here
    CHECK(quantum_adem_defect(m.ring, *m.quantum, t, Gf2Poly(xpow(1)), 2, 2).is_zero());
}
