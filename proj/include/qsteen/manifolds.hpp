#pragma once

#include "qsteen/quantum.hpp"

#include <optional>

namespace qsteen {

struct Manifold {
    std::string name;
    RingPresentation ring;
    std::optional<QuantumStructure> quantum;
};

Manifold make_cpn(int n);      // Z/2[x]/(x^{n+1}), x^{n+1} = T, line class, c1 = n+1
Manifold make_p1xp1();         // x^2 = T, y^2 = T, two line classes
Manifold make_p1cubed();       // three CP^1 factors
Manifold make_m05bar();        // ring only, no quantum data

// "cpn:3", "p1xp1", "p1cubed", "m05bar"
std::optional<Manifold> find_manifold(const std::string& name);

}  // namespace qsteen
