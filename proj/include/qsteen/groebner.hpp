#pragma once

#include "qsteen/gf2.hpp"

#include <vector>

namespace qsteen {

// Reduced Groebner basis of a homogeneous ideal over GF(2), graded-lex order
// weighted by the generator degrees.
class GroebnerBasis {
public:
    // Runs Buchberger. Throws std::invalid_argument if a relation is not
    // homogeneous with respect to `degrees`.
    static GroebnerBasis make(std::vector<int> degrees, const std::vector<Gf2Poly>& relations);

    const std::vector<int>& degrees() const { return degrees_; }
    const std::vector<Gf2Poly>& elements() const { return basis_; }
    const std::vector<Monomial>& leading_terms() const { return leads_; }

    Gf2Poly normal_form(const Gf2Poly& p) const;
    bool is_standard(const Monomial& m) const;  // m not divisible by any leading term

private:
    std::vector<int> degrees_;
    std::vector<Gf2Poly> basis_;
    std::vector<Monomial> leads_;
};

}  // namespace qsteen
