#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pmzv/serialize.hpp"
#include "pmzv/symbolic.hpp"

namespace pmzv {

// The associator of a flavor at truncation n:
//   complex_kz       numeric coefficients (ComplexField);
//   padic_kz         coefficients in zeta_p symbols;
//   padic_deligne    Phi_De solved from the p-adic KZ associator, in zeta_p;
//   minus_kz         Phi^- solved from the complex KZ associator, in zeta;
//   symbolic_lambda  free lambda_L coordinates.
// The prime is required for padic_deligne only.
AnySeries build_associator(AssociatorFlavor flavor, int n, std::optional<long> p, double tolerance = 1e-6);

// Applies q -> rewrite(q) to every coefficient.
SymSeries map_coefficients(const SymSeries& f, const std::function<SymbolPoly(const SymbolPoly&)>& rewrite);

struct CheckLine {
    std::string name;
    bool pass = false;
    // "exact-zero", a residual norm, or a constraint list.
    std::string residual;
};

struct IdentityReport {
    std::string identity;
    std::string flavor;
    int truncation = 0;
    std::optional<long> prime;
    std::optional<double> tolerance;  // numeric checks only
    // "exact-zero": every check vanished identically; "within-tolerance":
    // numeric checks below tolerance; "constraints": symbolic residuals
    // reported as relations among zeta symbols; "fail" otherwise.
    std::string status;
    std::vector<CheckLine> checks;
    std::vector<std::string> constraints;

    [[nodiscard]] bool pass() const { return status != "fail"; }
};

struct VerifyOptions {
    int weight = 4;
    std::optional<long> p;
    AssociatorFlavor flavor = AssociatorFlavor::complex_kz;
    double tolerance = 1e-6;
};

inline const std::vector<std::string>& identity_names()
{
    static const std::vector<std::string> names{"dual", "hexagon", "pentagon", "netherland",
                                                "czech", "moldova", "kz", "princeton"};
    return names;
}

// Throws domain_error for unknown identities or missing/invalid parameters.
IdentityReport verify_identity(const std::string& identity, const VerifyOptions& opt);

nlohmann::json report_to_json(const IdentityReport& r);

} // namespace pmzv
