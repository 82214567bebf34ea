#include "skewpp/exact.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "skewpp/errors.hpp"

namespace skewpp {

long long checked_add(long long a, long long b) {
    long long out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw OverflowError("integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
    return out;
}

long long checked_mul(long long a, long long b) {
    long long out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw OverflowError("integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
    return out;
}

long long binom(long long a, long long b) {
    if (a < 0 || b < 0 || b > a) return 0;
    b = std::min(b, a - b);
    // res holds an exact binomial after every step, so the running value is
    // nondecreasing and a single bound check per step suffices.
    unsigned __int128 res = 1;
    constexpr auto kMax = static_cast<unsigned __int128>(std::numeric_limits<long long>::max());
    for (long long i = 1; i <= b; ++i) {
        res = res * static_cast<unsigned __int128>(a - b + i) / static_cast<unsigned __int128>(i);
        if (res > kMax)
            throw OverflowError("binomial(" + std::to_string(a) + ", " + std::to_string(b) +
                                ") exceeds the 64-bit range");
    }
    return static_cast<long long>(res);
}

} // namespace skewpp
