#include "qsteen/gf2.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsteen {

Monomial Monomial::var(std::size_t nvars, std::size_t idx, unsigned pow) {
    Monomial m(nvars);
    m.set_exp(idx, pow);
    return m;
}

void Monomial::set_exp(std::size_t i, unsigned v) {
    if (v > 255) throw std::overflow_error("monomial exponent overflow");
    e_[i] = static_cast<std::uint8_t>(v);
}

bool Monomial::is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](auto x) { return x == 0; });
}

int Monomial::degree(std::span<const int> gen_degrees) const {
    int d = 0;
    for (std::size_t i = 0; i < e_.size(); ++i) d += int(e_[i]) * gen_degrees[i];
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (e_.size() != o.e_.size()) throw std::invalid_argument("generator count mismatch");
    Monomial r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) {
        unsigned s = unsigned(e_[i]) + unsigned(o.e_[i]);
        r.set_exp(i, s);
    }
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::quotient(const Monomial& o) const {
    Monomial r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (o.e_[i] > e_[i]) throw std::invalid_argument("non-divisible quotient");
        r.e_[i] = std::uint8_t(e_[i] - o.e_[i]);
    }
    return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
    Monomial r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = std::max(e_[i], o.e_[i]);
    return r;
}

bool grlex_less(const Monomial& a, const Monomial& b, std::span<const int> degrees) {
    int da = a.degree(degrees), db = b.degree(degrees);
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i);
    return false;
}

void Gf2Poly::toggle(const Monomial& m) {
    auto it = terms_.find(m);
    if (it == terms_.end())
        terms_.insert(m);
    else
        terms_.erase(it);
}

Gf2Poly Gf2Poly::operator+(const Gf2Poly& o) const {
    Gf2Poly r = *this;
    r += o;
    return r;
}

Gf2Poly& Gf2Poly::operator+=(const Gf2Poly& o) {
    for (const auto& m : o.terms_) toggle(m);
    return *this;
}

Gf2Poly Gf2Poly::operator*(const Gf2Poly& o) const {
    Gf2Poly r;
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) r.toggle(a * b);
    return r;
}

Gf2Poly Gf2Poly::operator*(const Monomial& m) const {
    Gf2Poly r;
    for (const auto& a : terms_) r.toggle(a * m);
    return r;
}

bool Gf2Poly::homogeneous(std::span<const int> degrees, int* deg) const {
    if (terms_.empty()) {
        if (deg) *deg = -1;
        return true;
    }
    int d = terms_.begin()->degree(degrees);
    for (const auto& m : terms_)
        if (m.degree(degrees) != d) return false;
    if (deg) *deg = d;
    return true;
}

int lucas_binom(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    return ((n & k) == k) ? 1 : 0;
}

}  // namespace qsteen
