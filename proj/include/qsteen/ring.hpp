#pragma once

#include "qsteen/groebner.hpp"

#include <map>
#include <optional>
#include <string>

namespace qsteen {

struct Generator {
    std::string name;
    int degree = 0;
};

struct CohomologyClass {
    Gf2Poly poly;  // normal form
    int degree = 0;
};

// A graded mod-2 cohomology ring given by generators and homogeneous relations,
// with the monomial basis per degree and Poincare pairing data.
struct RingPresentation {
    std::string name;
    std::vector<Generator> generators;
    std::vector<Gf2Poly> relations;
    int top_degree = 0;
    GroebnerBasis gb;
    std::map<int, std::vector<Monomial>> basis;
    Monomial top_monomial;

    std::span<const int> degrees() const { return gb.degrees(); }
    std::size_t nvars() const { return generators.size(); }

    Gf2Poly nf(const Gf2Poly& p) const { return gb.normal_form(p); }
    std::optional<std::size_t> generator_index(const std::string& n) const;

    // <m,[M]> = 1 iff the normal form of m contains the top basis monomial
    int pairing(const Gf2Poly& p) const { return nf(p).contains(top_monomial) ? 1 : 0; }
};

// Runs Buchberger, enumerates the standard-monomial basis per degree, and
// performs the Poincare-duality checks. Throws std::invalid_argument on a
// presentation that fails them (H^top not 1-dim, asymmetric dimensions, or
// standard monomials above top_degree).
RingPresentation build_ring(std::string name, std::vector<Generator> generators,
                            std::vector<Gf2Poly> relations, int top_degree);

CohomologyClass cup(const RingPresentation& ring, const CohomologyClass& a, const CohomologyClass& b);

// gamma -> gamma^dual with <gamma cup gamma^dual,[M]> = 1 and 0 against the
// other basis classes of complementary degree. Throws on a singular pairing.
std::map<Monomial, Gf2Poly> dual_basis(const RingPresentation& ring);

// Solve A x = rhs over GF(2); A is row-major n x n. Returns nullopt if singular.
std::optional<std::vector<char>> gf2_solve(std::vector<std::vector<char>> a, std::vector<char> rhs);

}  // namespace qsteen
