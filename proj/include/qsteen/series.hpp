#pragma once

#include "qsteen/ring.hpp"

#include <map>

namespace qsteen {

// Element of H*(M)[h][T]: map from (h-exponent, T-exponent) to a normal-form
// class part. Covers HElement (t = 0), QTElement (h = 0) and HTElement.
class Series {
public:
    using Key = std::pair<int, int>;  // (h, t)

    bool is_zero() const;
    const std::map<Key, Gf2Poly>& parts() const { return c_; }

    void add(int h, int t, const Gf2Poly& p);
    void add_term(int h, int t, const Monomial& m);
    Series& operator+=(const Series& o);
    Series operator+(const Series& o) const;
    bool operator==(const Series&) const = default;

    Gf2Poly part(int h, int t) const;
    Series h_slice(int h) const;         // all terms with that h-exponent
    Series t_slice(int t) const;         // all terms with that T-exponent
    Series shift(int dh, int dt) const;  // multiply by h^dh T^dt

    static Series classical(const Gf2Poly& p) {
        Series s;
        s.add(0, 0, p);
        return s;
    }

    // every term homogeneous of the given total degree, |h| = 1, |T| = 2N
    bool homogeneous(const RingPresentation& ring, int total, int N) const;

private:
    void prune(const Key& k);
    std::map<Key, Gf2Poly> c_;
};

}  // namespace qsteen
