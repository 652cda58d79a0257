#ifndef PDD_GMPLL_HPP
#define PDD_GMPLL_HPP

#include <gmpxx.h>

namespace pdd {

// gmpxx has no long long overloads; these keep call sites tidy.
inline mpz_class to_mpz(long long v) {
    return mpz_class(static_cast<long>(v));
}

inline mpq_class to_mpq(long long num, long long den = 1) {
    mpq_class q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return q;
}

} // namespace pdd

#endif
