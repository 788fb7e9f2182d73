#pragma once

#include "qsteen/series.hpp"

#include <string>
#include <tuple>
#include <vector>

namespace qsteen {

struct CurveClass {
    std::string label;
    std::vector<int> h2;       // coordinates in a chosen H_2 basis
    int chern = 0;             // c1 of the class; a positive multiple of N
    std::vector<char> intersections;  // n(g, mu_2) per generator index, degree-2 generators only
};

// Quantum structure constants on top of a RingPresentation. A constant
// (a, b, mu, k) -> gamma-sum records the coefficient of T^k via curve class
// mu in a * b; k = 0 (cup) is never stored, it is computed from the ring.
struct QuantumStructure {
    int N = 0;  // minimal Chern number
    std::vector<CurveClass> curve_classes;
    std::map<std::tuple<Monomial, Monomial, int, int>, Gf2Poly> constants;
    int jmax = 0;  // T-truncation

    int energy(std::size_t mu) const { return curve_classes[mu].chern / N; }
    void add_constant(const Monomial& a, const Monomial& b, std::size_t mu, int k, const Gf2Poly& out);
    Gf2Poly constant(const Monomial& a, const Monomial& b, std::size_t mu, int k) const;
};

int default_jmax(const RingPresentation& ring, int N);

// Full quantum product, bilinear over (class, h, t) parts; cup at T^0 plus all
// tagged constants; T-exponents above cap (default structure jmax) dropped.
Series quantum_product(const RingPresentation& ring, const QuantumStructure& q, const Series& a,
                       const Series& b, int cap = -1);

// Coefficient of T^{k} contributed by curve class mu only, re-embedded at
// T-exponent 0. Throws if k != energy(mu).
Gf2Poly product_restricted(const RingPresentation& ring, const QuantumStructure& q, const Gf2Poly& a,
                           const Gf2Poly& b, std::size_t mu, int k);

// Degree homogeneity of every constant, energy tagging, commutativity,
// associativity over all basis triples, unitality. Returns failure messages.
std::vector<std::string> validate_quantum(const RingPresentation& ring, const QuantumStructure& q);

}  // namespace qsteen
