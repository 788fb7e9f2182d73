#include "qsteen/groebner.hpp"

#include <deque>
#include <stdexcept>
#include <utility>

namespace qsteen {

namespace {

Monomial leading_term(const Gf2Poly& p, std::span<const int> degrees) {
    const auto& ts = p.terms();
    auto it = ts.begin();
    Monomial best = *it;
    for (++it; it != ts.end(); ++it)
        if (grlex_less(best, *it, degrees)) best = *it;
    return best;
}

// one reduction sweep: full multivariate division by the current basis
Gf2Poly reduce(Gf2Poly p, const std::vector<Gf2Poly>& basis, const std::vector<Monomial>& leads,
               std::span<const int> degrees) {
    Gf2Poly rem;
    while (!p.is_zero()) {
        Monomial lt = leading_term(p, degrees);
        bool hit = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (leads[i].divides(lt)) {
                p += basis[i] * lt.quotient(leads[i]);
                hit = true;
                break;
            }
        }
        if (!hit) {
            rem.toggle(lt);
            p.toggle(lt);
        }
    }
    return rem;
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a.exp(i) && b.exp(i)) return false;
    return true;
}

}  // namespace

GroebnerBasis GroebnerBasis::make(std::vector<int> degrees, const std::vector<Gf2Poly>& relations) {
    GroebnerBasis gb;
    gb.degrees_ = std::move(degrees);
    std::span<const int> ds(gb.degrees_);

    for (const auto& r : relations) {
        if (!r.homogeneous(ds)) throw std::invalid_argument("non-homogeneous relation");
        if (r.is_zero()) continue;
        gb.basis_.push_back(r);
        gb.leads_.push_back(leading_term(r, ds));
    }

    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < gb.basis_.size(); ++i)
        for (std::size_t j = i + 1; j < gb.basis_.size(); ++j) pairs.emplace_back(i, j);

    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        if (coprime(gb.leads_[i], gb.leads_[j])) continue;
        Monomial l = gb.leads_[i].lcm(gb.leads_[j]);
        Gf2Poly s = gb.basis_[i] * l.quotient(gb.leads_[i]) + gb.basis_[j] * l.quotient(gb.leads_[j]);
        Gf2Poly r = reduce(std::move(s), gb.basis_, gb.leads_, ds);
        if (!r.is_zero()) {
            std::size_t n = gb.basis_.size();
            gb.basis_.push_back(r);
            gb.leads_.push_back(leading_term(r, ds));
            for (std::size_t t = 0; t < n; ++t) pairs.emplace_back(t, n);
        }
    }

    // inter-reduce to the unique reduced basis
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < gb.basis_.size(); ++i) {
            std::vector<Gf2Poly> others;
            std::vector<Monomial> olds;
            for (std::size_t j = 0; j < gb.basis_.size(); ++j)
                if (j != i) {
                    others.push_back(gb.basis_[j]);
                    olds.push_back(gb.leads_[j]);
                }
            Gf2Poly r = reduce(gb.basis_[i], others, olds, ds);
            if (r != gb.basis_[i]) {
                changed = true;
                if (r.is_zero()) {
                    gb.basis_.erase(gb.basis_.begin() + long(i));
                    gb.leads_.erase(gb.leads_.begin() + long(i));
                    --i;
                } else {
                    gb.basis_[i] = r;
                    gb.leads_[i] = leading_term(r, ds);
                }
            }
        }
    }
    return gb;
}

Gf2Poly GroebnerBasis::normal_form(const Gf2Poly& p) const {
    return reduce(p, basis_, leads_, degrees_);
}

bool GroebnerBasis::is_standard(const Monomial& m) const {
    for (const auto& l : leads_)
        if (l.divides(m)) return false;
    return true;
}

}  // namespace qsteen
