#pragma once

#include <gmpxx.h>

#include <string>

namespace cambmin {

// Exact arbitrary-precision scalars. mpq_class keeps itself canonicalized
// through arithmetic; only string construction needs an explicit pass.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat_parse(const std::string& s) {
    Rat q(s);
    q.canonicalize();
    return q;
}

// "p" when the denominator is 1, "p/q" otherwise.
inline std::string rat_str(const Rat& q) {
    return q.get_str();
}

}  // namespace cambmin
