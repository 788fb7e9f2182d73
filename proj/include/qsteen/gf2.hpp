#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace qsteen {

// Exponent vector of a monomial. One entry per generator; coefficient is
// implicit (we are over GF(2), presence in a Gf2Poly means 1).
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}

    static Monomial var(std::size_t nvars, std::size_t idx, unsigned pow = 1);

    std::size_t nvars() const { return e_.size(); }
    unsigned exp(std::size_t i) const { return e_[i]; }
    void set_exp(std::size_t i, unsigned v);

    bool is_one() const;
    // weighted total degree
    int degree(std::span<const int> gen_degrees) const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial quotient(const Monomial& o) const;  // *this / o, requires o.divides(*this)
    Monomial lcm(const Monomial& o) const;

    auto operator<=>(const Monomial&) const = default;

private:
    std::vector<std::uint8_t> e_;
};

// graded lex: weighted degree first, then lex by generator index
bool grlex_less(const Monomial& a, const Monomial& b, std::span<const int> degrees);

// Polynomial over GF(2) as a set of monomials.
class Gf2Poly {
public:
    Gf2Poly() = default;
    explicit Gf2Poly(const Monomial& m) { terms_.insert(m); }

    static Gf2Poly zero() { return {}; }
    static Gf2Poly one(std::size_t nvars) { return Gf2Poly(Monomial(nvars)); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::set<Monomial>& terms() const { return terms_; }
    bool contains(const Monomial& m) const { return terms_.count(m) != 0; }

    void toggle(const Monomial& m);

    Gf2Poly operator+(const Gf2Poly& o) const;
    Gf2Poly& operator+=(const Gf2Poly& o);
    Gf2Poly operator*(const Gf2Poly& o) const;
    Gf2Poly operator*(const Monomial& m) const;

    bool operator==(const Gf2Poly&) const = default;

    // true if every monomial has the same weighted degree; *deg receives it
    // (degree of the zero polynomial reported as -1, vacuously homogeneous)
    bool homogeneous(std::span<const int> degrees, int* deg = nullptr) const;

private:
    std::set<Monomial> terms_;
};

// C(n,k) mod 2 by Lucas' theorem. Returns 0 unless 0 <= k <= n.
int lucas_binom(long long n, long long k);

}  // namespace qsteen
