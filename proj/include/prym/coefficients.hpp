#pragma once

#include "prym/rational.hpp"
#include "prym/tuples.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace prym {

struct CoeffQuery {
    int t = 0;  // Beauville degree
    int r = 1;  // dimension of the linear system
    int d = 0;  // degree of the linear system
    std::optional<int> g;  // genus, used only by range validation

    // Enforces the regime 0 < 2r < d (and d < 2g when g is given).
    void validate() const;
};

// mu_n = prod (-1)^(n_j - 1) / n_j.
Rational mu(const std::vector<int>& n);

// nu_{n,m} = prod_{ell} 1 / p(ell, n, m), the permutation-redundancy weight.
Rational nu(const IndexPair& pair);

// lambda_{n,m} = 2^(d-|n|) * mu_n * nu_{n,m} * C(d,|n|) * prod C(n_j, m_j).
Rational lambda(const IndexPair& pair, int d);

// c_{t,r,d} = 2^(-2r-t) * sum_{n,m} lambda_{n,m}/d_{n,m} * prod (n_j-2m_j)^(t+2).
// Terms with some n_j = 2m_j vanish identically; skip_zero_terms controls
// whether they are elided before summation (the value is the same either way).
Rational c(const CoeffQuery& query, bool skip_zero_terms = true);

// The r = 1 specialization as an independent single-letter sum: coefficient
// (-1)^(n-1) 2^(d-n-t-2) / n * C(d,n) C(n,m) (n-2m)^(2+t). Oracle for c at r=1.
Rational c_g1d(int t, int d);

// The even-degree closed form (4^(s+1) - 1) B_{2s+2} / (s+1) * 2^(d-2)
// observed for c_{2s,1,d}.
Rational c_closed_form_even(int s, int d);

struct IntRange {
    int lo = 0;
    int hi = 0;

    bool empty() const { return hi < lo; }
    int size() const { return empty() ? 0 : hi - lo + 1; }
};

struct CoeffRow {
    int t, r, d;
    Rational value;
    bool integral;
};

struct CoeffTable {
    std::vector<CoeffRow> rows;  // sorted by (r, d, t)
    std::string engine_version;
};

struct ResourceCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ScanOptions {
    // Upper bound on the total number of (n, m) index pairs a scan may visit.
    std::int64_t cap = 50'000'000;
};

// Evaluates c over the cartesian product of the ranges, skipping cells
// outside the regime 2r < d. Throws ResourceCapError when the summed
// index-set size exceeds opts.cap.
CoeffTable scan(IntRange t_range, IntRange r_range, IntRange d_range,
                ScanOptions opts = {});

// CSV with fixed header "t,r,d,c,is_integer"; rationals as "p/q".
std::string to_csv(const CoeffTable& table);

// JSON array of row objects, values as "p/q" strings.
std::string to_json(const CoeffTable& table);

extern const char* const kEngineVersion;

}  // namespace prym
