#include "qsteen/series.hpp"

namespace qsteen {

bool Series::is_zero() const {
    for (const auto& [k, p] : c_)
        if (!p.is_zero()) return false;
    return true;
}

void Series::prune(const Key& k) {
    auto it = c_.find(k);
    if (it != c_.end() && it->second.is_zero()) c_.erase(it);
}

void Series::add(int h, int t, const Gf2Poly& p) {
    if (p.is_zero()) return;
    Key k{h, t};
    c_[k] += p;
    prune(k);
}

void Series::add_term(int h, int t, const Monomial& m) {
    Key k{h, t};
    c_[k].toggle(m);
    prune(k);
}

Series& Series::operator+=(const Series& o) {
    for (const auto& [k, p] : o.c_) add(k.first, k.second, p);
    return *this;
}

Series Series::operator+(const Series& o) const {
    Series r = *this;
    r += o;
    return r;
}

Gf2Poly Series::part(int h, int t) const {
    auto it = c_.find({h, t});
    return it == c_.end() ? Gf2Poly{} : it->second;
}

Series Series::h_slice(int h) const {
    Series r;
    for (const auto& [k, p] : c_)
        if (k.first == h) r.add(h, k.second, p);
    return r;
}

Series Series::t_slice(int t) const {
    Series r;
    for (const auto& [k, p] : c_)
        if (k.second == t) r.add(k.first, t, p);
    return r;
}

Series Series::shift(int dh, int dt) const {
    Series r;
    for (const auto& [k, p] : c_) r.add(k.first + dh, k.second + dt, p);
    return r;
}

bool Series::homogeneous(const RingPresentation& ring, int total, int N) const {
    for (const auto& [k, p] : c_)
        for (const auto& m : p.terms())
            if (m.degree(ring.degrees()) + k.first + 2 * N * k.second != total) return false;
    return true;
}

}  // namespace qsteen
