#pragma once

#include "prym/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace prym {

// A basis Pontryagin monomial (k_1)_*Z * ... * (k_r)_*Z, stored as the
// sorted multiset {k_1 <= ... <= k_r} of positive pushforward multipliers.
// The empty multiset is the unit (class of the origin).
using PontTerm = std::vector<int>;

// Formal rational combination of Pontryagin monomials; zero coefficients
// are never stored.
class TautExpr {
  public:
    TautExpr() = default;

    static TautExpr term(PontTerm multipliers, Rational coeff = 1);

    void add(PontTerm multipliers, const Rational& coeff);
    const std::map<PontTerm, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    TautExpr& operator+=(const TautExpr& other);
    TautExpr& operator*=(const Rational& scalar);
    friend bool operator==(const TautExpr&, const TautExpr&) = default;

    // Deterministic textual form, e.g. "821/6 * Z^{*3} - 84 * Z^{*2}*2_*Z".
    std::string dump() const;
    std::string dump_json() const;

  private:
    std::map<PontTerm, Rational> terms_;
};

// Rational combination of graded basis monomials Z_{(s_1)} * ... * Z_{(s_r)},
// keyed by the sorted multiset of even Beauville degrees s_j.
class GradedExpr {
  public:
    void add(std::vector<int> degrees, const Rational& coeff);
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    GradedExpr& operator*=(const Rational& scalar);
    friend bool operator==(const GradedExpr&, const GradedExpr&) = default;

    std::string dump() const;
    std::string dump_json() const;

  private:
    std::map<std::vector<int>, Rational> terms_;
};

// Rational combination of intersection monomials zeta_{n_1} ... zeta_{n_r},
// keyed by the sorted multiset of odd generator indices.
class ZetaPolynomial {
  public:
    void add(std::vector<int> indices, const Rational& coeff);
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    std::string dump() const;
    std::string dump_json() const;

  private:
    std::map<std::vector<int>, Rational> terms_;
};

// Pontryagin product: bilinear, multiset union on basis monomials.
TautExpr pont_mul(const TautExpr& a, const TautExpr& b);

// Pushforward along multiplication by k. Multipliers scale by |k| (the curve
// class has symmetric translates and no odd components); k = 0 annihilates
// every non-unit monomial.
TautExpr pushforward(int k, const TautExpr& x);

// The expansion of 2_*[V] for a g^r_d as a combination of Pontryagin
// monomials in pushforwards of the curve class. Requires 0 < 2r < d.
TautExpr v_push_expansion(int r, int d);

// Beauville-degree-t part on a Prym of dimension p: each monomial
// {k_1,...,k_r} spreads over ordered compositions of t into even parts
// s_j <= p-1, the factor (k_j)_*Z_{(s_j)} contributing k_j^(2+s_j).
GradedExpr graded_component(const TautExpr& x, int t, int p);

struct VComponent {
    GradedExpr expr;
    // Per graded monomial, the ratio of its coefficient to that of the same
    // monomial in (Z^{*r})_{(t)}. For r = 1 these all equal c_{t,1,d}.
    std::map<std::vector<int>, Rational> ratios;
};

// [V]_{(t)} = 2^-(2r+t) * graded_component(v_push_expansion(r, d), t, p).
VComponent v_component(int t, int r, int d, int p);

// Fourier image: the graded monomial {s_1,...,s_r} maps to
// zeta_{s_1 + 1} ... zeta_{s_r + 1}; monomials producing an even index or an
// index >= p are zero.
ZetaPolynomial fourier_to_zeta(const GradedExpr& x, int p);

// [1, 3, 5, ...] up to p - 1.
std::vector<int> zeta_generator_degrees(int p);

}  // namespace prym
