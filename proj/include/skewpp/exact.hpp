#pragma once

namespace skewpp {

// Exact 64-bit arithmetic; every overflow throws OverflowError instead of
// wrapping.
long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);

// Binomial coefficient; 0 when b < 0, a < 0 or b > a.
long long binom(long long a, long long b);

} // namespace skewpp
