#include "qsteen/quantum.hpp"

#include <stdexcept>

namespace qsteen {

namespace {

std::tuple<Monomial, Monomial, int, int> key_of(const Monomial& a, const Monomial& b, std::size_t mu,
                                                int k) {
    if (b < a) return {b, a, int(mu), k};
    return {a, b, int(mu), k};
}

}  // namespace

void QuantumStructure::add_constant(const Monomial& a, const Monomial& b, std::size_t mu, int k,
                                    const Gf2Poly& out) {
    constants[key_of(a, b, mu, k)] += out;
}

Gf2Poly QuantumStructure::constant(const Monomial& a, const Monomial& b, std::size_t mu, int k) const {
    auto it = constants.find(key_of(a, b, mu, k));
    return it == constants.end() ? Gf2Poly{} : it->second;
}

int default_jmax(const RingPresentation& ring, int N) {
    return (2 * ring.top_degree + 2 * N - 1) / (2 * N) + 2;
}

Series quantum_product(const RingPresentation& ring, const QuantumStructure& q, const Series& a,
                       const Series& b, int cap) {
    if (cap < 0) cap = q.jmax;
    Series out;
    for (const auto& [ka, pa] : a.parts()) {
        for (const auto& [kb, pb] : b.parts()) {
            int h = ka.first + kb.first;
            int t = ka.second + kb.second;
            for (const auto& ma : pa.terms()) {
                for (const auto& mb : pb.terms()) {
                    if (t <= cap) out.add(h, t, ring.nf(Gf2Poly(ma) * mb));
                    for (std::size_t mu = 0; mu < q.curve_classes.size(); ++mu) {
                        int k = q.energy(mu);
                        if (t + k > cap) continue;
                        out.add(h, t + k, q.constant(ma, mb, mu, k));
                    }
                }
            }
        }
    }
    return out;
}

Gf2Poly product_restricted(const RingPresentation& ring, const QuantumStructure& q, const Gf2Poly& a,
                           const Gf2Poly& b, std::size_t mu, int k) {
    (void)ring;
    if (k != q.energy(mu)) throw std::invalid_argument("product_restricted: k does not match energy(mu)");
    Gf2Poly out;
    for (const auto& ma : a.terms())
        for (const auto& mb : b.terms()) out += q.constant(ma, mb, mu, k);
    return out;
}

std::vector<std::string> validate_quantum(const RingPresentation& ring, const QuantumStructure& q) {
    std::vector<std::string> errs;
    if (q.N <= 0) {
        errs.push_back("minimal Chern number must be positive");
        return errs;
    }
    for (const auto& cc : q.curve_classes) {
        if (cc.chern <= 0 || cc.chern % q.N != 0)
            errs.push_back("curve class " + cc.label + ": c1 must be a positive multiple of N");
        if (cc.intersections.size() != ring.nvars())
            errs.push_back("curve class " + cc.label + ": intersection numbers incomplete");
    }
    if (!errs.empty()) return errs;

    for (const auto& [key, gamma] : q.constants) {
        const auto& [a, b, mu, k] = key;
        if (k <= 0 || std::size_t(mu) >= q.curve_classes.size()) {
            errs.push_back("constant with k = 0 or unknown curve class");
            continue;
        }
        if (k != q.energy(std::size_t(mu)))
            errs.push_back("constant tagged (" + q.curve_classes[std::size_t(mu)].label +
                           ") with k != energy");
        int want = a.degree(ring.degrees()) + b.degree(ring.degrees()) - 2 * k * q.N;
        for (const auto& g : gamma.terms())
            if (g.degree(ring.degrees()) != want)
                errs.push_back("degree-inhomogeneous structure constant (|gamma| != |a|+|b|-2kN)");
    }
    if (!errs.empty()) return errs;

    std::vector<Monomial> all;
    for (const auto& [d, ms] : ring.basis) all.insert(all.end(), ms.begin(), ms.end());
    int cap = 1000;  // no truncation during validation

    auto prod = [&](const Series& x, const Series& y) { return quantum_product(ring, q, x, y, cap); };
    Series unit = Series::classical(Gf2Poly::one(ring.nvars()));

    for (const auto& m : all) {
        Series sm = Series::classical(Gf2Poly(m));
        if (prod(unit, sm) != sm) errs.push_back("unitality failed on a basis class");
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
        Series si = Series::classical(Gf2Poly(all[i]));
        for (std::size_t j = 0; j < all.size(); ++j) {
            Series sj = Series::classical(Gf2Poly(all[j]));
            if (prod(si, sj) != prod(sj, si)) errs.push_back("commutativity failed");
            for (std::size_t l = 0; l < all.size(); ++l) {
                Series sl = Series::classical(Gf2Poly(all[l]));
                if (prod(prod(si, sj), sl) != prod(si, prod(sj, sl)))
                    errs.push_back("associativity failed on basis triple (" + std::to_string(i) + "," +
                                   std::to_string(j) + "," + std::to_string(l) + ")");
            }
        }
    }
    return errs;
}

}  // namespace qsteen
