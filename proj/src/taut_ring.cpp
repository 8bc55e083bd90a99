#include "prym/taut_ring.hpp"

#include "prym/coefficients.hpp"
#include "prym/exact_arith.hpp"
#include "prym/tuples.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace prym {

namespace {

// Renders a sorted coefficient map as "c1 * m1 + c2 * m2 - ...".
template <typename Map, typename MonomialFn>
std::string dump_map(const Map& terms, MonomialFn&& monomial) {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, coeff] : terms) {
        const bool negative = coeff < 0;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        out << to_string(negative ? Rational(-coeff) : coeff) << " * "
            << monomial(key);
    }
    return out.str();
}

template <typename Map>
std::string dump_map_json(const Map& terms) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [key, coeff] : terms) {
        arr.push_back({{"key", key}, {"coeff", to_string(coeff)}});
    }
    return nlohmann::ordered_json({{"terms", arr}}).dump();
}

std::string pont_monomial(const PontTerm& key) {
    if (key.empty()) return "1";
    std::ostringstream out;
    for (std::size_t i = 0; i < key.size();) {
        std::size_t j = i;
        while (j < key.size() && key[j] == key[i]) ++j;
        const std::size_t count = j - i;
        std::string factor =
            key[i] == 1 ? "Z" : std::to_string(key[i]) + "_*Z";
        if (i > 0) out << "*";
        if (count == 1) {
            out << factor;
        } else if (key[i] == 1) {
            out << factor << "^{*" << count << "}";
        } else {
            out << "(" << factor << ")^{*" << count << "}";
        }
        i = j;
    }
    return out.str();
}

std::string graded_monomial(const std::vector<int>& key) {
    if (key.empty()) return "1";
    std::ostringstream out;
    for (std::size_t i = 0; i < key.size();) {
        std::size_t j = i;
        while (j < key.size() && key[j] == key[i]) ++j;
        if (i > 0) out << "*";
        out << "Z_{(" << key[i] << ")}";
        if (j - i > 1) out << "^{*" << (j - i) << "}";
        i = j;
    }
    return out.str();
}

std::string zeta_monomial(const std::vector<int>& key) {
    if (key.empty()) return "1";
    std::ostringstream out;
    for (std::size_t i = 0; i < key.size();) {
        std::size_t j = i;
        while (j < key.size() && key[j] == key[i]) ++j;
        if (i > 0) out << "*";
        out << "zeta_" << key[i];
        if (j - i > 1) out << "^" << (j - i);
        i = j;
    }
    return out.str();
}

template <typename Map, typename Key>
void add_into(Map& terms, Key key, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms.try_emplace(std::move(key), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms.erase(it);
    }
}

}  // namespace

TautExpr TautExpr::term(PontTerm multipliers, Rational coeff) {
    TautExpr out;
    out.add(std::move(multipliers), coeff);
    return out;
}

void TautExpr::add(PontTerm multipliers, const Rational& coeff) {
    for (int k : multipliers) {
        if (k < 1) throw std::invalid_argument("PontTerm: multipliers must be >= 1");
    }
    std::sort(multipliers.begin(), multipliers.end());
    add_into(terms_, std::move(multipliers), coeff);
}

TautExpr& TautExpr::operator+=(const TautExpr& other) {
    for (const auto& [key, coeff] : other.terms_) add_into(terms_, key, coeff);
    return *this;
}

TautExpr& TautExpr::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, coeff] : terms_) coeff *= scalar;
    return *this;
}

std::string TautExpr::dump() const { return dump_map(terms_, pont_monomial); }
std::string TautExpr::dump_json() const { return dump_map_json(terms_); }

void GradedExpr::add(std::vector<int> degrees, const Rational& coeff) {
    for (int s : degrees) {
        if (s < 0) throw std::invalid_argument("GradedExpr: degrees must be >= 0");
        if (s % 2 != 0) return;  // odd components of the curve class vanish
    }
    std::sort(degrees.begin(), degrees.end());
    add_into(terms_, std::move(degrees), coeff);
}

GradedExpr& GradedExpr::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, coeff] : terms_) coeff *= scalar;
    return *this;
}

std::string GradedExpr::dump() const { return dump_map(terms_, graded_monomial); }
std::string GradedExpr::dump_json() const { return dump_map_json(terms_); }

void ZetaPolynomial::add(std::vector<int> indices, const Rational& coeff) {
    std::sort(indices.begin(), indices.end());
    add_into(terms_, std::move(indices), coeff);
}

std::string ZetaPolynomial::dump() const { return dump_map(terms_, zeta_monomial); }
std::string ZetaPolynomial::dump_json() const { return dump_map_json(terms_); }

TautExpr pont_mul(const TautExpr& a, const TautExpr& b) {
    TautExpr out;
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            PontTerm merged;
            merged.reserve(ka.size() + kb.size());
            std::merge(ka.begin(), ka.end(), kb.begin(), kb.end(),
                       std::back_inserter(merged));
            out.add(std::move(merged), ca * cb);
        }
    }
    return out;
}

TautExpr pushforward(int k, const TautExpr& x) {
    TautExpr out;
    for (const auto& [key, coeff] : x.terms()) {
        if (k == 0 && !key.empty()) continue;  // annihilated
        PontTerm scaled;
        scaled.reserve(key.size());
        for (int kj : key) scaled.push_back(std::abs(k) * kj);
        out.add(std::move(scaled), coeff);
    }
    return out;
}

TautExpr v_push_expansion(int r, int d) {
    if (2 * r >= d || r < 1) {
        throw std::domain_error("v_push_expansion: requires 0 < 2r < d");
    }
    TautExpr out;
    for_each_pair(r, d, [&](const IndexPair& pair) {
        PontTerm key;
        key.reserve(pair.n.size());
        for (int j = 0; j < pair.r(); ++j) {
            const int k = pair.n[j] - 2 * pair.m[j];
            if (k == 0) return;  // 0_*Z annihilates the whole term
            key.push_back(k);
        }
        out.add(std::move(key), lambda(pair, d) / repeat_factor(pair));
    });
    return out;
}

namespace {

// Ordered compositions of t into |key| even parts s_j with 0 <= s_j <= p-1.
void spread_compositions(const PontTerm& key, std::size_t j, int remaining,
                         int p, const Rational& partial,
                         std::vector<int>& parts, GradedExpr& out) {
    if (j == key.size()) {
        if (remaining == 0) out.add(parts, partial);
        return;
    }
    const int max_s = std::min(remaining, p - 1);
    for (int s = 0; s <= max_s; s += 2) {
        parts[j] = s;
        Rational scaled = partial *
            Rational(boost::multiprecision::pow(BigInt(key[j]),
                                                static_cast<unsigned>(2 + s)));
        spread_compositions(key, j + 1, remaining - s, p, scaled, parts, out);
    }
}

}  // namespace

GradedExpr graded_component(const TautExpr& x, int t, int p) {
    if (p < 2) throw std::invalid_argument("graded_component: requires p >= 2");
    GradedExpr out;
    if (t < 0 || t % 2 != 0) return out;  // odd components vanish
    for (const auto& [key, coeff] : x.terms()) {
        std::vector<int> parts(key.size(), 0);
        spread_compositions(key, 0, t, p, coeff, parts, out);
    }
    return out;
}

VComponent v_component(int t, int r, int d, int p) {
    if (p < r + 1) throw std::domain_error("v_component: requires p >= r + 1");
    VComponent result;
    result.expr = graded_component(v_push_expansion(r, d), t, p);
    result.expr *= pow2(-(2 * r + t));

    const GradedExpr base =
        graded_component(TautExpr::term(PontTerm(r, 1)), t, p);
    for (const auto& [key, coeff] : result.expr.terms()) {
        auto it = base.terms().find(key);
        if (it != base.terms().end() && it->second != 0) {
            result.ratios.emplace(key, coeff / it->second);
        }
    }
    return result;
}

ZetaPolynomial fourier_to_zeta(const GradedExpr& x, int p) {
    if (p < 2) throw std::invalid_argument("fourier_to_zeta: requires p >= 2");
    ZetaPolynomial out;
    for (const auto& [key, coeff] : x.terms()) {
        std::vector<int> indices;
        indices.reserve(key.size());
        bool vanished = false;
        for (int s : key) {
            const int n = s + 1;
            if (n % 2 == 0 || n >= p) {  // zeta_even = 0 and zeta_p = 0
                vanished = true;
                break;
            }
            indices.push_back(n);
        }
        if (!vanished) out.add(std::move(indices), coeff);
    }
    return out;
}

std::vector<int> zeta_generator_degrees(int p) {
    if (p < 2) throw std::invalid_argument("zeta_generator_degrees: requires p >= 2");
    std::vector<int> out;
    for (int n = 1; n <= p - 1; n += 2) out.push_back(n);
    return out;
}

}  // namespace prym
