#include "prym/tuples.hpp"

#include <algorithm>
#include <array>

namespace prym {

std::vector<IndexPair> enumerate_pairs(int r, int d) {
    std::vector<IndexPair> out;
    for_each_pair(r, d, [&](const IndexPair& p) { out.push_back(p); });
    return out;
}

namespace {

// Counts weakly increasing n-tuples weighted by prod (floor(n_j/2) + 1).
std::int64_t count_rec(int slots, int min_n, int remaining) {
    if (slots == 0) return 1;
    std::int64_t total = 0;
    for (int nj = min_n; nj * slots <= remaining; ++nj) {
        total += (nj / 2 + 1) * count_rec(slots - 1, nj, remaining - nj);
    }
    return total;
}

std::int64_t int_factorial(int k) {
    std::int64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

}  // namespace

std::int64_t count_pairs(int r, int d) {
    if (r < 1) throw std::invalid_argument("count_pairs: r must be >= 1");
    if (d < r) throw std::invalid_argument("count_pairs: d must be >= r");
    return count_rec(r, 1, d);
}

std::int64_t perm_count(int ell, const IndexPair& pair) {
    // n is weakly increasing, so the entries equal to ell are contiguous.
    const int r = pair.r();
    int lo = 0;
    while (lo < r && pair.n[lo] < ell) ++lo;
    int hi = lo;
    while (hi < r && pair.n[hi] == ell) ++hi;
    const int q = hi - lo;
    if (q == 0) return 1;

    std::vector<int> ms(pair.m.begin() + lo, pair.m.begin() + hi);
    std::sort(ms.begin(), ms.end());
    std::int64_t result = int_factorial(q);
    for (int i = 0; i < q;) {
        int j = i;
        while (j < q && ms[j] == ms[i]) ++j;
        result /= int_factorial(j - i);
        i = j;
    }
    return result;
}

std::int64_t repeat_factor(const IndexPair& pair) {
    std::vector<std::array<int, 2>> pairs;
    pairs.reserve(pair.n.size());
    for (std::size_t j = 0; j < pair.n.size(); ++j) {
        pairs.push_back({pair.n[j], pair.m[j]});
    }
    std::sort(pairs.begin(), pairs.end());
    std::int64_t result = 1;
    for (std::size_t i = 0; i < pairs.size();) {
        std::size_t j = i;
        while (j < pairs.size() && pairs[j] == pairs[i]) ++j;
        result *= int_factorial(static_cast<int>(j - i));
        i = j;
    }
    return result;
}

}  // namespace prym
