#include "qsteen/manifolds.hpp"

#include <bit>
#include <stdexcept>

namespace qsteen {

Manifold make_cpn(int n) {
    if (n < 1) throw std::invalid_argument("cpn requires n >= 1");
    Gf2Poly rel(Monomial::var(1, 0, unsigned(n + 1)));
    Manifold m;
    m.name = "cpn:" + std::to_string(n);
    m.ring = build_ring(m.name, {{"x", 2}}, {rel}, 2 * n);

    QuantumStructure q;
    q.N = n + 1;
    q.curve_classes.push_back({"line", {1}, n + 1, {1}});
    // x^i * x^j = x^{i+j-(n+1)} T for i+j >= n+1
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            if (i + j >= n + 1)
                q.add_constant(Monomial::var(1, 0, unsigned(i)), Monomial::var(1, 0, unsigned(j)), 0, 1,
                               Gf2Poly(Monomial::var(1, 0, unsigned(i + j - n - 1))));
    q.jmax = default_jmax(m.ring, q.N);
    m.quantum = q;
    return m;
}

namespace {

// product of k copies of CP^1: generators x_0..x_{k-1}, x_i^2 = T via the
// line class of factor i; composite curve classes for multi-T constants
Manifold make_p1_power(int k, const std::string& name, std::vector<std::string> gen_names) {
    std::vector<Generator> gens;
    std::vector<Gf2Poly> rels;
    for (int i = 0; i < k; ++i) {
        gens.push_back({gen_names[std::size_t(i)], 2});
        rels.push_back(Gf2Poly(Monomial::var(std::size_t(k), std::size_t(i), 2)));
    }
    Manifold m;
    m.name = name;
    m.ring = build_ring(name, gens, rels, 2 * k);

    QuantumStructure q;
    q.N = 2;
    // curve classes indexed by nonempty subsets of factors
    std::vector<unsigned> subset_class(1u << k, 0);
    for (unsigned s = 1; s < (1u << k); ++s) {
        CurveClass cc;
        cc.h2.assign(std::size_t(k), 0);
        int pop = 0;
        for (int i = 0; i < k; ++i)
            if (s & (1u << i)) {
                cc.h2[std::size_t(i)] = 1;
                cc.label += (cc.label.empty() ? "" : "+") + ("mu" + std::to_string(i + 1));
                ++pop;
            }
        cc.chern = 2 * pop;
        for (int i = 0; i < k; ++i) cc.intersections.push_back((s >> i) & 1);
        subset_class[s] = unsigned(q.curve_classes.size());
        q.curve_classes.push_back(cc);
    }
    // basis monomials are square-free; m1 * m2 turns each shared factor into T
    std::vector<Monomial> sf;
    for (unsigned s = 0; s < (1u << k); ++s) {
        Monomial mo{std::size_t(k)};
        for (int i = 0; i < k; ++i)
            if (s & (1u << i)) mo.set_exp(std::size_t(i), 1);
        sf.push_back(mo);
    }
    for (unsigned s1 = 0; s1 < (1u << k); ++s1) {
        for (unsigned s2 = s1; s2 < (1u << k); ++s2) {
            unsigned shared = s1 & s2;
            if (!shared) continue;
            Monomial out{std::size_t(k)};
            for (int i = 0; i < k; ++i)
                if ((s1 ^ s2) & (1u << i)) out.set_exp(std::size_t(i), 1);
            int energy = int(std::popcount(shared));
            q.add_constant(sf[s1], sf[s2], subset_class[shared], energy, Gf2Poly(out));
        }
    }
    q.jmax = default_jmax(m.ring, q.N);
    m.quantum = q;
    return m;
}

}  // namespace

Manifold make_p1xp1() { return make_p1_power(2, "p1xp1", {"x", "y"}); }
Manifold make_p1cubed() { return make_p1_power(3, "p1cubed", {"x", "y", "z"}); }

Manifold make_m05bar() {
    // generators ordered so that w_i^2 reduces to d1 d2 under graded lex
    std::vector<Generator> gens{{"w0", 2}, {"w1", 2}, {"winf", 2}, {"d1", 2}, {"d2", 2}};
    const std::size_t W0 = 0, W1 = 1, WINF = 2, D1 = 3, D2 = 4;
    auto v = [&](std::size_t i, unsigned p = 1) { return Monomial::var(5, i, p); };
    std::vector<Gf2Poly> rels;
    rels.push_back(Gf2Poly(v(D1, 2)));
    rels.push_back(Gf2Poly(v(D2, 2)));
    Monomial d1d2 = v(D1) * v(D2);
    for (std::size_t w : {W0, W1, WINF}) {
        rels.push_back(Gf2Poly(v(w, 3)));
        Gf2Poly r(v(w, 2));
        r.toggle(d1d2);
        rels.push_back(r);
        for (std::size_t d : {D1, D2}) rels.push_back(Gf2Poly(v(w) * v(d)));
    }
    rels.push_back(Gf2Poly(v(W0) * v(W1)));
    rels.push_back(Gf2Poly(v(W0) * v(WINF)));
    rels.push_back(Gf2Poly(v(W1) * v(WINF)));

    Manifold m;
    m.name = "m05bar";
    m.ring = build_ring(m.name, gens, rels, 4);
    return m;
}

std::optional<Manifold> find_manifold(const std::string& name) {
    if (name.rfind("cpn:", 0) == 0) {
        try {
            int n = std::stoi(name.substr(4));
            if (n >= 1 && n <= 10) return make_cpn(n);
        } catch (const std::exception&) {
        }
        return std::nullopt;
    }
    if (name == "p1xp1") return make_p1xp1();
    if (name == "p1cubed") return make_p1cubed();
    if (name == "m05bar") return make_m05bar();
    return std::nullopt;
}

}  // namespace qsteen
