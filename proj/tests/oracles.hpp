#pragma once

// Independent oracles used to freeze expected values. These deliberately avoid
// the library's own code paths (no Lucas bit tricks, no Sq/QS engines).

#include <cstdint>
#include <vector>

namespace oracles {

// Pascal's triangle mod 2, straight from the defining recurrence.
inline int binom_mod2(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    std::vector<std::vector<int>> row(std::size_t(n) + 1);
    for (int i = 0; i <= n; ++i) {
        row[std::size_t(i)].assign(std::size_t(i) + 1, 0);
        for (int j = 0; j <= i; ++j) {
            if (j == 0 || j == i)
                row[std::size_t(i)][std::size_t(j)] = 1;
            else
                row[std::size_t(i)][std::size_t(j)] =
                    (row[std::size_t(i) - 1][std::size_t(j) - 1] +
                     row[std::size_t(i) - 1][std::size_t(j)]) % 2;
        }
    }
    return row[std::size_t(n)][std::size_t(k)];
}

// Exact 64-bit binomial (valid for the small inputs used here), then mod 2.
inline long long binom_exact(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Coefficient parity of x^m in (1+x)^e: the Stiefel-Whitney oracle.
inline int one_plus_x_pow(int e, int m) { return int(binom_exact(e, m) % 2); }

}  // namespace oracles
