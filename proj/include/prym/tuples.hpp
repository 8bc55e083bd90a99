#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace prym {

// One admissible index pair of the double sums: a weakly increasing r-tuple
// n with |n| <= d and an r-tuple m with 0 <= m_j <= floor(n_j / 2).
struct IndexPair {
    std::vector<int> n;
    std::vector<int> m;
    int d = 0;

    int r() const { return static_cast<int>(n.size()); }
    int n_total() const {
        int s = 0;
        for (int v : n) s += v;
        return s;
    }
};

namespace detail {

template <typename Fn>
void visit_m(IndexPair& pair, std::size_t j, Fn& fn) {
    if (j == pair.m.size()) {
        fn(static_cast<const IndexPair&>(pair));
        return;
    }
    for (int mj = 0; mj <= pair.n[j] / 2; ++mj) {
        pair.m[j] = mj;
        visit_m(pair, j + 1, fn);
    }
}

template <typename Fn>
void visit_n(IndexPair& pair, std::size_t j, int min_n, int remaining, Fn& fn) {
    const int slots = static_cast<int>(pair.n.size() - j);
    if (slots == 0) {
        visit_m(pair, 0, fn);
        return;
    }
    // Remaining entries are >= n_j, so n_j * slots must fit in the budget.
    for (int nj = min_n; nj * slots <= remaining; ++nj) {
        pair.n[j] = nj;
        visit_n(pair, j + 1, nj, remaining - nj, fn);
    }
}

}  // namespace detail

// Streams every admissible pair for the given (r, d) in lexicographic order
// of (n, m). The IndexPair handed to the callback is a reused buffer: copy
// it if it must outlive the call.
template <typename Fn>
void for_each_pair(int r, int d, Fn&& fn) {
    if (r < 1) throw std::invalid_argument("for_each_pair: r must be >= 1");
    if (d < r) throw std::invalid_argument("for_each_pair: d must be >= r");
    IndexPair pair;
    pair.n.assign(static_cast<std::size_t>(r), 0);
    pair.m.assign(static_cast<std::size_t>(r), 0);
    pair.d = d;
    detail::visit_n(pair, 0, 1, d, fn);
}

// Materialized enumeration, same order as for_each_pair.
std::vector<IndexPair> enumerate_pairs(int r, int d);

// Number of pairs for_each_pair(r, d) visits, without visiting them.
std::int64_t count_pairs(int r, int d);

// Number of distinct rearrangements of the sub-tuple of m sitting over the
// entries of n equal to ell; 1 when no entry of n equals ell.
std::int64_t perm_count(int ell, const IndexPair& pair);

// Product of factorials of the run lengths of equal (n_j, m_j) pairs, with
// the pairs first brought to canonical (sorted) order.
std::int64_t repeat_factor(const IndexPair& pair);

}  // namespace prym
