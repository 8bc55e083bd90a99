#include "prym/exact_arith.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace prym {

BigInt binomial(int n, int k) {
    if (n < 0) throw std::invalid_argument("binomial: n must be >= 0");
    if (k < 0 || k > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.backend().data(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return out;
}

BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: n must be >= 0");
    BigInt out;
    mpz_fac_ui(out.backend().data(), static_cast<unsigned long>(n));
    return out;
}

namespace {

// Bernoulli numbers via sum_{j=0}^{m} C(m+1, j) B_j = 0, B_0 = 1.
// The table only ever grows and is guarded by a mutex; values are
// returned by copy so callers never observe a reallocation.
std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_table = {Rational(1)};

}  // namespace

Rational bernoulli(int m) {
    if (m < 0) throw std::invalid_argument("bernoulli: m must be >= 0");
    std::lock_guard lock(bernoulli_mutex);
    while (static_cast<int>(bernoulli_table.size()) <= m) {
        const int k = static_cast<int>(bernoulli_table.size());
        Rational acc = 0;
        for (int j = 0; j < k; ++j) {
            acc += Rational(binomial(k + 1, j)) * bernoulli_table[j];
        }
        bernoulli_table.push_back(-acc / Rational(k + 1));
    }
    return bernoulli_table[m];
}

}  // namespace prym
