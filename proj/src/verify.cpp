#include "pmzv/verify.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "pmzv/arch_eval.hpp"
#include "pmzv/associator.hpp"
#include "pmzv/padic.hpp"

namespace pmzv {

namespace {

constexpr int max_verify_weight = 6;

std::string zero_or(const SymbolPoly& q)
{
    return q.is_zero() ? std::string("exact-zero") : q.str();
}

std::string format_norm(double x)
{
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << x;
    return os.str();
}

long require_prime(const VerifyOptions& opt, const std::string& identity)
{
    if (!opt.p) {
        throw domain_error("assoc verify " + identity + ": a prime is required");
    }
    if (*opt.p < 2 || !is_prime(static_cast<unsigned long>(*opt.p))) {
        throw domain_error("assoc verify " + identity + ": " + std::to_string(*opt.p) + " is not prime");
    }
    return *opt.p;
}

// Tag and zeta flavor of the lambda coordinates behind a symbolic flavor.
std::pair<std::string_view, ZetaFlavor> symbolic_tag(AssociatorFlavor f)
{
    switch (f) {
    case AssociatorFlavor::padic_kz:
    case AssociatorFlavor::padic_deligne:
        return {tag_padic_kz, ZetaFlavor::padic};
    case AssociatorFlavor::minus_kz:
        return {tag_complex_kz, ZetaFlavor::complex};
    default:
        return {tag_generic, ZetaFlavor::complex};
    }
}

// Symbolic associator in lambda coordinates.
SymSeries lambda_associator(AssociatorFlavor f, int n, std::optional<long> p)
{
    const auto [tag, zf] = symbolic_tag(f);
    SymSeries phi = symbolic_associator(tag, n);
    if (f == AssociatorFlavor::padic_deligne) {
        if (!p) {
            throw domain_error("padic_Deligne associator: a prime is required");
        }
        phi = solve_deligne_from_kz(phi, *p);
    } else if (f == AssociatorFlavor::minus_kz) {
        phi = solve_minus_from_kz(phi);
    }
    return phi;
}

SymbolPoly to_zeta(const SymbolPoly& q, AssociatorFlavor f)
{
    if (f == AssociatorFlavor::symbolic_lambda) {
        return q;
    }
    const auto [tag, zf] = symbolic_tag(f);
    return lambda_to_zeta(q, tag, zf);
}

Monomial leading(const SymbolPoly& q)
{
    return std::prev(q.terms().end())->first;
}

void finish(IdentityReport& r)
{
    bool all_exact = true;
    bool all_pass = true;
    for (const CheckLine& c : r.checks) {
        all_pass = all_pass && c.pass;
        all_exact = all_exact && c.residual == "exact-zero";
    }
    if (!r.constraints.empty()) {
        r.status = "constraints";
    } else if (!all_pass) {
        r.status = "fail";
    } else {
        r.status = all_exact ? "exact-zero" : "within-tolerance";
    }
}

template <class Residual>
double residual_norm(const Residual& res)
{
    double m = 0.0;
    for (const auto& [label, c] : res.entries) {
        m = std::max(m, std::abs(c));
    }
    return m;
}

IdentityReport grt_identity(const std::string& identity, const VerifyOptions& opt)
{
    IdentityReport r{identity, flavor_name(opt.flavor), opt.weight, opt.p, std::nullopt, "", {}, {}};
    if (opt.flavor == AssociatorFlavor::complex_kz) {
        r.tolerance = opt.tolerance;
        const NCSeries<ComplexField> phi = numeric_associator(opt.weight, opt.tolerance);
        const Complex mu(0.0, 2.0 * std::numbers::pi);
        auto add = [&](const std::string& name, double norm) {
            r.checks.push_back({name, norm < opt.tolerance, format_norm(norm)});
        };
        if (identity == "dual") {
            add("rel0", residual_norm(grt_rel0(phi)));
            add("rel_i", residual_norm(grt_rel_i(phi)));
        } else if (identity == "hexagon") {
            add("rel_ii", residual_norm(grt_rel_ii(phi, mu)));
        } else {
            add("rel_iii", residual_norm(grt_rel_iii(phi, std::make_shared<const BraidBasis>(opt.weight))));
        }
        finish(r);
        return r;
    }
    // Symbolic flavors: residual coefficients are polynomial constraints.
    const SymSeries phi = lambda_associator(opt.flavor, opt.weight, opt.p);
    Residual<SymbolRing> res;
    if (identity == "dual") {
        res = grt_rel_i(phi);
        const Residual<SymbolRing> r0 = grt_rel0(phi);
        r.checks.push_back({"rel0", r0.exact_zero(), r0.exact_zero() ? "exact-zero" : "nonzero"});
    } else if (identity == "hexagon") {
        res = grt_rel_ii(phi, SymbolPoly{});
    } else {
        res = grt_rel_iii(phi, std::make_shared<const BraidBasis>(opt.weight));
    }
    std::set<SymbolPoly::term_map> seen;
    for (const auto& [label, c] : res.entries) {
        SymbolPoly q = to_zeta(c, opt.flavor);
        if (q.is_zero()) {
            continue;
        }
        q *= 1 / q.coeff(leading(q));
        if (seen.insert(q.terms()).second) {
            r.constraints.push_back(q.str() + " = 0");
        }
    }
    r.checks.push_back({res.relation, true, res.exact_zero() ? "exact-zero" : std::to_string(r.constraints.size()) + " constraints"});
    finish(r);
    return r;
}

IdentityReport netherland_identity(const VerifyOptions& opt)
{
    const long p = require_prime(opt, "netherland");
    IdentityReport r{"netherland", flavor_name(AssociatorFlavor::padic_deligne), opt.weight, p, std::nullopt, "", {}, {}};
    const int n = opt.weight;
    const SymSeries kz = symbolic_associator(tag_padic_kz, n);
    const SymSeries de = solve_deligne_from_kz(kz, p);
    auto add_series = [&](const std::string& name, const SymSeries& residual) {
        const bool zero = residual.is_zero();
        r.checks.push_back({name, zero, zero ? "exact-zero" : std::to_string(residual.terms().size()) + " nonzero coefficients"});
    };
    add_series("frobenius_relation", kz - de * frobenius_substitution(kz, de, p));
    const GTPair<SymbolRing> composed = gt_compose(GTPair<SymbolRing>{SymbolPoly(p), kz},
                                               gt_invert(GTPair<SymbolRing>{SymbolPoly(1), kz}));
    add_series("gt_composition", composed.g - de);
    r.checks.push_back({"gt_scalar", composed.c == SymbolPoly(p), composed.c == SymbolPoly(p) ? "exact-zero" : composed.c.str()});
    r.checks.push_back({"group_like", is_group_like(de), is_group_like(de) ? "exact-zero" : "not group-like"});

    SymbolContext ctx;
    ctx.p = p;
    ctx.zeta_series.emplace(ZetaFlavor::padic, kz);
    ctx.zeta_series.emplace(ZetaFlavor::padic_deligne, de);
    Canonicalizer canon(std::move(ctx));
    auto compare = [&](const std::string& name, const SymbolPoly& lhs, const SymbolPoly& rhs) {
        const SymbolPoly d = to_zeta(canon(lhs) - canon(rhs), AssociatorFlavor::padic_kz);
        r.checks.push_back({name, d.is_zero(), zero_or(d)});
    };
    for (int k = 2; k <= n; ++k) {
        compare("deligne_depth1(" + std::to_string(k) + ")", zeta_sym(ZetaFlavor::padic_deligne, Index{k}),
                closed_form::deligne_depth1(p, k));
    }
    for (int w = 3; w <= n; ++w) {
        for (int b = 2; b < w; ++b) {
            const int a = w - b;
            compare("deligne_depth2(" + std::to_string(a) + "," + std::to_string(b) + ")",
                    zeta_sym(ZetaFlavor::padic_deligne, Index{a, b}), closed_form::deligne_depth2(p, a, b));
        }
    }
    finish(r);
    return r;
}

IdentityReport czech_identity(const VerifyOptions& opt)
{
    const long p = require_prime(opt, "czech");
    IdentityReport r{"czech", flavor_name(AssociatorFlavor::padic_kz), opt.weight, p, std::nullopt, "", {}, {}};
    const int n = opt.weight;
    const PadicSymbolic ps = czech_expand(p, n);
    Canonicalizer canon(ps.context());
    auto compare = [&](const std::string& name, const SymbolPoly& lhs, const SymbolPoly& rhs) {
        const SymbolPoly d = to_zeta(canon(lhs) - canon(rhs), AssociatorFlavor::padic_kz);
        r.checks.push_back({name, d.is_zero(), zero_or(d)});
    };
    compare("A_coefficient", ps.dagger.coeff(Word::letter(Letter::A)), SymbolPoly{});
    for (int k = 1; k <= n; ++k) {
        compare("dagger_depth1(" + std::to_string(k) + ")", li_sym(LiFlavor::dagger, Index{k}, LiArg::z),
                closed_form::dagger_depth1(p, k));
    }
    for (int w = 2; w <= n; ++w) {
        for (int a = 1; a < w; ++a) {
            const int b = w - a;
            compare("dagger_depth2(" + std::to_string(a) + "," + std::to_string(b) + ")",
                    li_sym(LiFlavor::dagger, Index{a, b}, LiArg::z), closed_form::dagger_depth2(p, a, b));
        }
    }
    const bool gl = is_group_like(ps.dagger);
    r.checks.push_back({"group_like", gl, gl ? "exact-zero" : "not group-like"});
    finish(r);
    return r;
}

IdentityReport moldova_identity(const VerifyOptions& opt)
{
    IdentityReport r{"moldova", flavor_name(AssociatorFlavor::minus_kz), opt.weight, std::nullopt, std::nullopt, "", {}, {}};
    const int n = opt.weight;
    const HodgeSymbolic hs = moldova_expand(n);
    Canonicalizer canon(hs.context());
    auto compare = [&](const std::string& name, const SymbolPoly& lhs, const SymbolPoly& rhs) {
        const SymbolPoly d = to_zeta(canon(lhs) - canon(rhs), AssociatorFlavor::minus_kz);
        r.checks.push_back({name, d.is_zero(), zero_or(d)});
    };
    compare("A_coefficient", hs.minus.coeff(Word::letter(Letter::A)), log_sym(LogArg::abs_z_sq));
    for (int k = 1; k <= n; ++k) {
        compare("minus_depth1(" + std::to_string(k) + ")", li_sym(LiFlavor::minus, Index{k}, LiArg::z),
                closed_form::minus_depth1(k));
    }
    for (int w = 2; w <= n; ++w) {
        for (int a = 1; a < w; ++a) {
            const int b = w - a;
            compare("minus_depth2(" + std::to_string(a) + "," + std::to_string(b) + ")",
                    li_sym(LiFlavor::minus, Index{a, b}, LiArg::z), closed_form::minus_depth2(a, b));
        }
    }
    const bool gl = is_group_like(hs.minus);
    r.checks.push_back({"group_like", gl, gl ? "exact-zero" : "not group-like"});
    finish(r);
    return r;
}

void add_kz_residual(IdentityReport& r, const KZResidual& res)
{
    auto add = [&](const std::string& name, const SymSeries& s) {
        r.checks.push_back({name, s.is_zero(), s.is_zero() ? "exact-zero" : std::to_string(s.terms().size()) + " nonzero coefficients"});
    };
    add("over_z", res.over_z);
    add("over_one_minus_z", res.over_one_minus_z);
    add("over_zp", res.over_zp);
}

} // namespace

SymSeries map_coefficients(const SymSeries& f, const std::function<SymbolPoly(const SymbolPoly&)>& rewrite)
{
    SymSeries out(f.ring(), f.truncation());
    for (const auto& [w, c] : f.terms()) {
        out.set(w, rewrite(c));
    }
    return out;
}

AnySeries build_associator(AssociatorFlavor flavor, int n, std::optional<long> p, double tolerance)
{
    if (n < 1 || n > max_verify_weight) {
        throw domain_error("build_associator: weight must be in [1, " + std::to_string(max_verify_weight) + "]");
    }
    if (flavor == AssociatorFlavor::complex_kz) {
        return numeric_associator(n, tolerance);
    }
    if (p && (*p < 2 || !is_prime(static_cast<unsigned long>(*p)))) {
        throw domain_error("build_associator: " + std::to_string(*p) + " is not prime");
    }
    const SymSeries phi = lambda_associator(flavor, n, p);
    return map_coefficients(phi, [flavor](const SymbolPoly& q) { return to_zeta(q, flavor); });
}

IdentityReport verify_identity(const std::string& identity, const VerifyOptions& opt)
{
    if (opt.weight < 2 || opt.weight > max_verify_weight) {
        throw domain_error("assoc verify: weight must be in [2, " + std::to_string(max_verify_weight) + "]");
    }
    if (identity == "dual" || identity == "hexagon" || identity == "pentagon") {
        return grt_identity(identity, opt);
    }
    if (identity == "netherland") {
        return netherland_identity(opt);
    }
    if (identity == "czech") {
        return czech_identity(opt);
    }
    if (identity == "moldova") {
        return moldova_identity(opt);
    }
    if (identity == "kz") {
        IdentityReport r{"kz", "symbolic", opt.weight, std::nullopt, std::nullopt, "", {}, {}};
        add_kz_residual(r, verify_kz_equation(g0_symbolic(LiArg::z, opt.weight), SymbolContext{}));
        finish(r);
        return r;
    }
    if (identity == "princeton") {
        const long p = require_prime(opt, "princeton");
        IdentityReport r{"princeton", flavor_name(AssociatorFlavor::padic_kz), opt.weight, p, std::nullopt, "", {}, {}};
        const PadicSymbolic ps = czech_expand(p, opt.weight);
        add_kz_residual(r, verify_princeton_equation(ps.dagger, ps.phi_de, p, ps.context()));
        finish(r);
        return r;
    }
    throw domain_error("assoc verify: unknown identity '" + identity + "'");
}

nlohmann::json report_to_json(const IdentityReport& r)
{
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckLine& c : r.checks) {
        checks.push_back({{"relation", c.name}, {"pass", c.pass}, {"residual", c.residual}});
    }
    nlohmann::json j{{"schema_version", schema_version}, {"identity", r.identity}, {"status", r.status},
                     {"flavor", r.flavor},           {"truncation", r.truncation}, {"checks", std::move(checks)},
                     {"constraints", r.constraints}};
    j["prime"] = r.prime ? nlohmann::json(*r.prime) : nlohmann::json(nullptr);
    j["tolerance"] = r.tolerance ? nlohmann::json(*r.tolerance) : nlohmann::json(nullptr);
    return j;
}

} // namespace pmzv
