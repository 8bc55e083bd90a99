#pragma once

#include "prym/rational.hpp"

#include <string>
#include <vector>

namespace prym {

struct PrymSetup {
    int g = 2;          // genus of the base curve
    int r = 1;          // projective dimension of the linear system
    int d = 1;          // degree of the linear system
    bool etale = true;  // etale double cover (p = g-1) vs two branch points (p = g)

    int prym_dim() const { return etale ? g - 1 : g; }
    void validate() const;
};

enum class Regime { kIzadiRoute, kWirtingerRoute, kInapplicable };

const char* regime_name(Regime regime);

struct RegimeReport {
    int rho = 0;
    bool range_ok = false;  // 0 < 2r < d < 2g
    Regime regime = Regime::kInapplicable;
    std::vector<std::string> notes;

    std::string dump_json() const;
    std::string dump_text() const;
};

// Brill-Noether number rho(g, r, d) = g - (r+1)(g - d + r).
int rho(int g, int r, int d);

// Classifies which algebraic-equivalence argument the numerology allows:
// rho >= min{r+1, g-d+r} (with rho > 0) supports the direct connectedness
// argument; 0 < rho < min{r+1, g-d+r} requires the nodal-degeneration route;
// anything else is out of reach. Genericity hypotheses are reported as
// caveat notes, never decided.
RegimeReport classify(const PrymSetup& setup);

// The common cohomology class of the special subvarieties,
// 2^(d-2r-1) * xi^(g-r-1) / (g-r-1)!, returned as (multiplier, xi exponent).
// Requires 0 < 2r < d < 2g.
std::pair<BigInt, int> homological_class(int g, int r, int d);

}  // namespace prym
