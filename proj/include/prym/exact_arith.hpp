#pragma once

#include "prym/rational.hpp"

namespace prym {

// C(n, k); 0 when k < 0 or k > n. Memoized, safe for concurrent callers.
BigInt binomial(int n, int k);

// n!
BigInt factorial(int n);

// m-th Bernoulli number under the convention t/(e^t - 1) = sum B_m t^m / m!,
// so B_1 = -1/2. Memoized, safe for concurrent callers.
Rational bernoulli(int m);

}  // namespace prym
