#pragma once

#include "cambmin/rational.hpp"

namespace cambmin {

// Binomial coefficient with the support convention used throughout the
// verification sums: binom(n,0) = 1 for every n (empty product), and the
// value is 0 whenever k < 0, or k > 0 with n < 0, or k > n.
inline Int binom(long n, long k) {
    if (k < 0) return 0;
    if (k == 0) return 1;
    if (n < 0 || k > n) return 0;
    Int num = 1, den = 1;
    for (long i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

inline Rat binom_rat(long n, long k) { return Rat(binom(n, k)); }

}  // namespace cambmin
