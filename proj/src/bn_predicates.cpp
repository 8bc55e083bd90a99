#include "prym/bn_predicates.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace prym {

void PrymSetup::validate() const {
    if (g < 2) throw std::invalid_argument("PrymSetup: g must be >= 2");
    if (r < 1) throw std::invalid_argument("PrymSetup: r must be >= 1");
    if (d < 1) throw std::invalid_argument("PrymSetup: d must be >= 1");
}

const char* regime_name(Regime regime) {
    switch (regime) {
        case Regime::kIzadiRoute: return "IZADI_ROUTE";
        case Regime::kWirtingerRoute: return "WIRTINGER_ROUTE";
        case Regime::kInapplicable: return "INAPPLICABLE";
    }
    return "INAPPLICABLE";
}

int rho(int g, int r, int d) {
    if (g < 1 || r < 1 || d < 1) {
        throw std::invalid_argument("rho: g, r, d must be positive");
    }
    return g - (r + 1) * (g - d + r);
}

RegimeReport classify(const PrymSetup& setup) {
    setup.validate();
    RegimeReport report;
    report.rho = rho(setup.g, setup.r, setup.d);
    report.range_ok = 2 * setup.r < setup.d && setup.d < 2 * setup.g;

    if (!report.range_ok) {
        if (2 * setup.r >= setup.d) report.notes.push_back("2r >= d");
        if (setup.d >= 2 * setup.g) report.notes.push_back("d >= 2g");
    }
    if (report.rho <= 0) report.notes.push_back("rho <= 0");

    if (report.rho <= 0 || !report.range_ok) {
        report.regime = Regime::kInapplicable;
        return report;
    }

    const int threshold = std::min(setup.r + 1, setup.g - setup.d + setup.r);
    report.regime = report.rho >= threshold ? Regime::kIzadiRoute
                                            : Regime::kWirtingerRoute;
    report.notes.push_back(
        "assumes W^r_d(C) reduced and of expected dimension rho (not "
        "decidable numerically)");
    return report;
}

std::string RegimeReport::dump_json() const {
    nlohmann::ordered_json doc = {{"rho", rho},
                          {"range_ok", range_ok},
                          {"regime", regime_name(regime)},
                          {"notes", notes}};
    return doc.dump(2);
}

std::string RegimeReport::dump_text() const {
    std::ostringstream out;
    out << "rho = " << rho << "\n"
        << "range 0 < 2r < d < 2g: " << (range_ok ? "ok" : "violated") << "\n"
        << "regime: " << regime_name(regime) << "\n";
    for (const auto& note : notes) out << "note: " << note << "\n";
    return out.str();
}

std::pair<BigInt, int> homological_class(int g, int r, int d) {
    if (!(0 < 2 * r && 2 * r < d && d < 2 * g)) {
        throw std::domain_error("homological_class: requires 0 < 2r < d < 2g");
    }
    BigInt coeff = 1;
    coeff <<= static_cast<unsigned>(d - 2 * r - 1);
    return {coeff, g - r - 1};
}

}  // namespace prym
