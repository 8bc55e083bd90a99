#include "prym/coefficients.hpp"

#include "prym/exact_arith.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

namespace prym {

const char* const kEngineVersion = "0.1.0";

void CoeffQuery::validate() const {
    if (r < 1) throw std::domain_error("coefficient query: r must be >= 1");
    if (t < 0) throw std::domain_error("coefficient query: t must be >= 0");
    if (2 * r >= d) {
        throw std::domain_error("coefficient query: requires 0 < 2r < d");
    }
    if (g && d >= 2 * *g) {
        throw std::domain_error("coefficient query: requires d < 2g");
    }
}

Rational mu(const std::vector<int>& n) {
    Rational out = 1;
    for (int nj : n) {
        if (nj < 1) throw std::invalid_argument("mu: entries must be >= 1");
        out *= Rational(nj % 2 == 0 ? -1 : 1, nj);
    }
    return out;
}

Rational nu(const IndexPair& pair) {
    Rational out = 1;
    int j = 0;
    const int r = pair.r();
    while (j < r) {
        int k = j;
        while (k < r && pair.n[k] == pair.n[j]) ++k;
        out /= perm_count(pair.n[j], pair);
        j = k;
    }
    return out;
}

Rational lambda(const IndexPair& pair, int d) {
    const int total = pair.n_total();
    if (total > d) throw std::invalid_argument("lambda: |n| must be <= d");
    Rational out = pow2(d - total) * mu(pair.n) * nu(pair) *
                   Rational(binomial(d, total));
    for (int j = 0; j < pair.r(); ++j) {
        out *= Rational(binomial(pair.n[j], pair.m[j]));
    }
    return out;
}

namespace {

// Evaluates the double sum of c_{t,r,d} by walking the same (n, m) index
// set as for_each_pair, in the same order. For a fixed n the terms share
// the prefactor 2^(d-|n|) mu_n C(d,|n|), so the inner m-sum is accumulated
// with integer arithmetic: each term carries the integer weight
// W_n / (prod_l p(l,n,m) * d_{n,m}) with W_n = prod_l q(l)!, and the whole
// group is folded into the rational accumulator once.
class CSum {
  public:
    CSum(int t, int r, int d, bool skip_zero_terms)
        : t_(t), r_(r), d_(d), skip_(skip_zero_terms) {
        pascal_.assign(d + 1, {});
        for (int i = 0; i <= d; ++i) {
            pascal_[i].assign(i + 1, 1);
            for (int k = 1; k < i; ++k) {
                pascal_[i][k] = pascal_[i - 1][k - 1] + pascal_[i - 1][k];
            }
        }
        pow2_.assign(d + 1, 1);
        for (int i = 1; i <= d; ++i) pow2_[i] = pow2_[i - 1] << 1;
        powt_.assign(d + 1, 0);
        for (int k = 1; k <= d; ++k) {
            powt_[k] = boost::multiprecision::pow(BigInt(k),
                                                  static_cast<unsigned>(t + 2));
        }
        pair_.n.assign(r, 0);
        pair_.m.assign(r, 0);
        pair_.d = d;
        prefix_.assign(r + 1, BigInt(1));
    }

    Rational run() {
        visit_n(0, 1, d_);
        return acc_ * pow2(-(2 * r_ + t_));
    }

  private:
    void visit_n(int j, int min_n, int remaining) {
        const int slots = r_ - j;
        if (slots == 0) {
            sum_over_m();
            return;
        }
        for (int nj = min_n; nj * slots <= remaining; ++nj) {
            pair_.n[j] = nj;
            visit_n(j + 1, nj, remaining - nj);
        }
    }

    void sum_over_m() {
        weight_ = 1;  // W_n = prod over runs of q(l)!
        for (int j = 0; j < r_;) {
            int k = j;
            while (k < r_ && pair_.n[k] == pair_.n[j]) ++k;
            for (int q = 2; q <= k - j; ++q) weight_ *= q;
            j = k;
        }
        inner_int_ = 0;
        inner_frac_ = 0;
        visit_m(0);
        if (inner_int_ == 0 && inner_frac_ == 0) return;

        const int total = pair_.n_total();
        BigInt num = pow2_[d_ - total] * pascal_[d_][total];
        std::int64_t den = 1;
        for (int nj : pair_.n) den *= nj;
        Rational group = Rational(num, BigInt(den)) *
                         (Rational(inner_int_, BigInt(weight_)) + inner_frac_);
        if ((total - r_) % 2 != 0) group = -group;
        acc_ += group;
    }

    void visit_m(int j) {
        if (j == r_) {
            add_term();
            return;
        }
        const int nj = pair_.n[j];
        for (int mj = 0; mj <= nj / 2; ++mj) {
            if (skip_ && nj == 2 * mj) continue;
            pair_.m[j] = mj;
            prefix_[j + 1] = prefix_[j] * pascal_[nj][mj] * powt_[nj - 2 * mj];
            visit_m(j + 1);
        }
    }

    void add_term() {
        std::int64_t pd = repeat_factor(pair_);
        int j = 0;
        while (j < r_) {
            int k = j;
            while (k < r_ && pair_.n[k] == pair_.n[j]) ++k;
            pd *= perm_count(pair_.n[j], pair_);
            j = k;
        }
        if (weight_ % pd == 0) {
            inner_int_ += prefix_[r_] * BigInt(weight_ / pd);
        } else {
            inner_frac_ += Rational(prefix_[r_], BigInt(pd));
        }
    }

    int t_, r_, d_;
    bool skip_;
    std::vector<std::vector<BigInt>> pascal_;
    std::vector<BigInt> pow2_;
    std::vector<BigInt> powt_;  // k^(t+2)
    IndexPair pair_;
    std::vector<BigInt> prefix_;  // running products over the m odometer
    std::int64_t weight_ = 1;
    BigInt inner_int_;
    Rational inner_frac_;
    Rational acc_;
};

}  // namespace

Rational c(const CoeffQuery& query, bool skip_zero_terms) {
    query.validate();
    return CSum(query.t, query.r, query.d, skip_zero_terms).run();
}

Rational c_g1d(int t, int d) {
    if (d < 3) throw std::domain_error("c_g1d: requires d >= 3");
    Rational acc = 0;
    for (int n = 1; n <= d; ++n) {
        for (int m = 0; m <= n / 2; ++m) {
            Rational coeff = pow2(d - n - t - 2) / n;
            if (n % 2 == 0) coeff = -coeff;
            acc += coeff * Rational(binomial(d, n) * binomial(n, m)) *
                   Rational(boost::multiprecision::pow(
                       BigInt(n - 2 * m), static_cast<unsigned>(t + 2)));
        }
    }
    return acc;
}

Rational c_closed_form_even(int s, int d) {
    if (s < 0) throw std::invalid_argument("c_closed_form_even: s must be >= 0");
    BigInt four_pow = boost::multiprecision::pow(BigInt(4),
                                                 static_cast<unsigned>(s + 1));
    return Rational(four_pow - 1) * bernoulli(2 * s + 2) / (s + 1) *
           pow2(d - 2);
}

CoeffTable scan(IntRange t_range, IntRange r_range, IntRange d_range,
                ScanOptions opts) {
    if (t_range.empty() || r_range.empty() || d_range.empty()) {
        throw std::invalid_argument("scan: ranges must be nonempty");
    }

    std::int64_t budget = 0;
    for (int r = r_range.lo; r <= r_range.hi; ++r) {
        for (int d = d_range.lo; d <= d_range.hi; ++d) {
            if (2 * r >= d) continue;
            budget += count_pairs(r, d) * t_range.size();
            if (budget > opts.cap) {
                std::ostringstream msg;
                msg << "scan: index-set size exceeds cap of " << opts.cap;
                throw ResourceCapError(msg.str());
            }
        }
    }

    CoeffTable table;
    table.engine_version = kEngineVersion;
    for (int r = r_range.lo; r <= r_range.hi; ++r) {
        for (int d = d_range.lo; d <= d_range.hi; ++d) {
            if (2 * r >= d) continue;
            for (int t = t_range.lo; t <= t_range.hi; ++t) {
                Rational value = c({t, r, d});
                bool integral = is_integer(value);
                table.rows.push_back({t, r, d, std::move(value), integral});
            }
        }
    }
    return table;
}

std::string to_csv(const CoeffTable& table) {
    std::ostringstream out;
    out << "t,r,d,c,is_integer\n";
    for (const auto& row : table.rows) {
        out << row.t << ',' << row.r << ',' << row.d << ','
            << to_string(row.value) << ',' << (row.integral ? "true" : "false")
            << '\n';
    }
    return out.str();
}

std::string to_json(const CoeffTable& table) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        rows.push_back({{"t", row.t},
                        {"r", row.r},
                        {"d", row.d},
                        {"c", to_string(row.value)},
                        {"is_integer", row.integral}});
    }
    nlohmann::ordered_json doc = {{"engine_version", table.engine_version},
                          {"rows", rows}};
    return doc.dump(2);
}

}  // namespace prym
