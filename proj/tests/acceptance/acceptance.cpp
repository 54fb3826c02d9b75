// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pmzv/arch_eval.hpp"
#include "pmzv/padic_eval.hpp"
#include "pmzv/relations.hpp"
#include "pmzv/verify.hpp"

#include "../support/example_forms.hpp"
#include "../support/properties.hpp"

namespace {

using namespace pmzv;
namespace forms = pmzv::oracle::forms;

struct Outcome {
    bool pass = true;
    std::ostringstream note;
    std::string failures;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            failures += (pass ? "" : "; ") + what;
            pass = false;
        }
    }
    [[nodiscard]] std::string summary() const { return pass ? note.str() : "failed: " + failures; }
};

bool has_passing_check(const IdentityReport& r, const std::string& name)
{
    for (const CheckLine& c : r.checks) {
        if (c.name == name) {
            return c.pass;
        }
    }
    return false;
}

std::string pair_name(const char* stem, int a, int b)
{
    return std::string(stem) + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::string one_name(const char* stem, int k)
{
    return std::string(stem) + "(" + std::to_string(k) + ")";
}

// Points with 0.05 <= |z| <= 0.85 and |arg z| <= 0.9 pi, clear of the branch
// cut of the principal logarithm.
std::vector<Complex> disk_points(int count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> radius(0.05, 0.85);
    std::uniform_real_distribution<double> angle(-0.9 * std::numbers::pi, 0.9 * std::numbers::pi);
    std::vector<Complex> out;
    for (int i = 0; i < count; ++i) {
        out.push_back(std::polar(radius(rng), angle(rng)));
    }
    return out;
}

void deligne_examples(Outcome& out)
{
    for (long p : {2L, 3L, 5L, 7L}) {
        VerifyOptions opt;
        opt.weight = 5;
        opt.p = p;
        const IdentityReport r = verify_identity("netherland", opt);
        const std::string at = " at p=" + std::to_string(p);
        out.require(r.status == "exact-zero", "netherland status " + r.status + at);
        for (int k = 2; k <= 4; ++k) {
            out.require(has_passing_check(r, one_name("deligne_depth1", k)), one_name("deligne_depth1", k) + at);
            out.require(closed_form::deligne_depth1(p, k) == forms::deligne1(p, k), "depth-1 transcription" + at);
        }
        for (auto [a, b] : {std::pair{1, 2}, std::pair{2, 2}, std::pair{1, 3}}) {
            out.require(has_passing_check(r, pair_name("deligne_depth2", a, b)), pair_name("deligne_depth2", a, b) + at);
            out.require(closed_form::deligne_depth2(p, a, b) == forms::deligne2(p, a, b),
                        "depth-2 transcription " + pair_name("", a, b) + at);
        }
    }
    out.note << "netherland exact-zero at weight 5 for p in {2,3,5,7}; depth-1 k=2..4 and depth-2 (1,2),(2,2),(1,3) match";
}

void dagger_examples(Outcome& out)
{
    for (long p : {2L, 3L, 5L, 7L}) {
        VerifyOptions opt;
        opt.weight = 4;
        opt.p = p;
        const IdentityReport r = verify_identity("czech", opt);
        const std::string at = " at p=" + std::to_string(p);
        out.require(r.status == "exact-zero", "czech status " + r.status + at);
        out.require(has_passing_check(r, "A_coefficient"), "A coefficient" + at);
        out.require(has_passing_check(r, "group_like"), "group-likeness" + at);
        for (int k = 1; k <= 4; ++k) {
            out.require(has_passing_check(r, one_name("dagger_depth1", k)), one_name("dagger_depth1", k) + at);
            out.require(closed_form::dagger_depth1(p, k) == forms::dagger1(p, k), "depth-1 transcription" + at);
        }
        out.require(has_passing_check(r, pair_name("dagger_depth2", 1, 2)), "dagger_depth2(1,2)" + at);
        out.require(closed_form::dagger_depth2(p, 1, 2) == forms::dagger2(p, 1, 2), "depth-2 transcription" + at);
    }
    const DaggerReport num = verify_dagger_numeric({3, 5, 7}, 4, 20, 30, 20, 7);
    long worst = 30;
    for (const DaggerSample& s : num.samples) {
        worst = std::min(worst, s.digits);
    }
    out.require(num.pass() && num.samples.size() == 3 * 4 * 20, "numeric depth-1 identity");
    out.note << "czech exact-zero at weight 4; A coefficient 0; numeric depth-1 on " << num.samples.size()
             << " samples, worst agreement " << worst << " digits (need 20)";
}

void hodge_examples(Outcome& out)
{
    VerifyOptions opt;
    opt.weight = 4;
    const IdentityReport r = verify_identity("moldova", opt);
    out.require(r.status == "exact-zero", "moldova status " + r.status);
    out.require(has_passing_check(r, "A_coefficient"), "A coefficient log|z|^2");
    for (int k = 1; k <= 4; ++k) {
        out.require(has_passing_check(r, one_name("minus_depth1", k)), one_name("minus_depth1", k));
        out.require(closed_form::minus_depth1(k) == forms::minus1(k), "depth-1 transcription");
    }
    out.require(has_passing_check(r, "minus_depth2(1,2)"), "minus_depth2(1,2)");
    out.require(closed_form::minus_depth2(1, 2) == forms::minus2(1, 2), "depth-2 transcription");

    // The Bernoulli-weighted sum is real for odd k and purely imaginary for
    // even k; it equals i^{k+1 mod 2} P_k(z).
    double sum_err = 0;
    double depth2_err = 0;
    for (const Complex z : disk_points(50, 11)) {
        for (int k = 1; k <= 4; ++k) {
            const Complex expected = (k % 2 == 1 ? Complex(1, 0) : Complex(0, 1)) * zagier_P(k, z);
            sum_err = std::max(sum_err, std::abs(bernoulli_sum(k, z) - expected));
        }
        depth2_err = std::max(depth2_err, std::abs(numeric_depth2_book_check(1, 2, z)));
    }
    out.require(sum_err < 1e-9, "Bernoulli sum residual " + std::to_string(sum_err));
    out.require(depth2_err < 1e-8, "depth-2 numeric residual " + std::to_string(depth2_err));
    char buf[160];
    std::snprintf(buf, sizeof buf, "moldova exact-zero at weight 4; Bernoulli sum max residual %.2e; depth-2 numeric max %.2e",
                  sum_err, depth2_err);
    out.note << buf;
}

void grt_relations(Outcome& out)
{
    VerifyOptions opt;
    opt.weight = 4;
    opt.tolerance = 1e-6;
    std::string residuals;
    for (const char* id : {"dual", "hexagon", "pentagon"}) {
        const IdentityReport r = verify_identity(id, opt);
        out.require(r.status == "within-tolerance" || r.status == "exact-zero", std::string(id) + " " + r.status);
        for (const CheckLine& c : r.checks) {
            residuals += " " + c.name + "=" + c.residual;
        }
    }
    VerifyOptions sym;
    sym.weight = 2;
    sym.flavor = AssociatorFlavor::padic_kz;
    bool found = false;
    for (const char* id : {"dual", "hexagon"}) {
        for (const std::string& c : verify_identity(id, sym).constraints) {
            found = found || c == "zeta_p[2] = 0";
        }
    }
    out.require(found, "symbolic weight-2 constraint zeta_p[2] = 0");
    out.note << "complex truncation 4:" << residuals << "; p-adic weight 2 forces zeta_p[2] = 0";
}

void double_shuffle(Outcome& out)
{
    const ZetaFlavor f = ZetaFlavor::complex;
    const auto z = [&](std::initializer_list<int> k) { return zeta_sym(f, Index(k)); };

    const RelationReduction r3 = reduce_relations(generate_double_shuffle(3, f), 3, f);
    out.require(r3.reduce(z({1, 2})) == z({3}), "zeta(1,2) = zeta(3)");

    const RelationReduction r4 = reduce_relations(generate_double_shuffle(4, f), 4, f);
    out.require(r4.basis.size() == 1, "weight-4 bound " + std::to_string(r4.basis.size()));
    const SymbolPoly z2sq = z({2}) * z({2});
    Rational ratio = 0;
    for (const auto& k : {Index{4}, Index{1, 3}, Index{2, 2}, Index{1, 1, 2}}) {
        const SymbolPoly e = r4.reduce(zeta_sym(f, k));
        const bool multiple = e.size() == 1 && e == z2sq * SymbolPoly(e.coeff(z2sq.terms().begin()->first));
        out.require(multiple, "zeta(" + k.str() + ") not a multiple of zeta(2)^2");
        if (k == Index{4} && multiple) {
            ratio = e.coeff(z2sq.terms().begin()->first);
        }
    }
    const double z2 = mzv_numeric(Index{2}).value.real();
    const double numeric_ratio = mzv_numeric(Index{4}).value.real() / (z2 * z2);
    const double ratio_err = std::abs(numeric_ratio - ratio.get_d());
    out.require(ratio_err < 1e-5, "ratio zeta(4)/zeta(2)^2 off by " + std::to_string(ratio_err));

    const RelationReduction r5 = reduce_relations(generate_double_shuffle(5, f), 5, f);
    out.require(r5.basis.size() <= 2, "weight-5 bound " + std::to_string(r5.basis.size()));

    double row_err = 0;
    std::size_t rows = 0;
    for (int w = 2; w <= 5; ++w) {
        for (const RelationRow& row : generate_double_shuffle(w, f)) {
            row_err = std::max(row_err, std::abs(evaluate_numeric(row.relation, Complex(0.5, 0))));
            ++rows;
        }
    }
    out.require(row_err < 1e-5, "rows vanish numerically, max " + std::to_string(row_err));
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "zeta(1,2)=zeta(3); weight-4 bound 1 with zeta(4)=%s zeta(2)^2 (numeric error %.1e); weight-5 bound %zu; "
                  "%zu rows vanish to %.1e",
                  to_string(ratio).c_str(), ratio_err, r5.basis.size(), rows, row_err);
    out.note << buf;
}

void kz_equations(Outcome& out)
{
    VerifyOptions opt;
    opt.weight = 4;
    const IdentityReport kz = verify_identity("kz", opt);
    out.require(kz.status == "exact-zero", "kz " + kz.status);
    for (long p : {2L, 3L, 5L}) {
        opt.p = p;
        const IdentityReport pr = verify_identity("princeton", opt);
        out.require(pr.status == "exact-zero", "modified equation " + pr.status + " at p=" + std::to_string(p));
    }
    out.note << "G0 KZ residual and modified-equation residual of the overconvergent G0 exactly zero to weight 4 (p=2,3,5)";
}

void properties(Outcome& out)
{
    using namespace pmzv::oracle;
    int group_like = 0;
    auto need_group_like = [&](const auto& f, const std::string& what) {
        out.require(is_group_like(f), what + " not group-like");
        ++group_like;
    };
    for (AssociatorFlavor fl : {AssociatorFlavor::complex_kz, AssociatorFlavor::padic_kz, AssociatorFlavor::padic_deligne,
                                AssociatorFlavor::minus_kz, AssociatorFlavor::symbolic_lambda}) {
        std::visit([&](const auto& s) { need_group_like(s, flavor_name(fl)); }, build_associator(fl, 5, 3L));
    }
    for (LiArg arg : {LiArg::z, LiArg::z_pow_p, LiArg::z_conj}) {
        need_group_like(g0_symbolic(arg, 5), "G0");
    }
    const PadicSymbolic ps = czech_expand(3, 4);
    for (const SymSeries* s : {&ps.phi_kz, &ps.phi_de, &ps.g0_z, &ps.g0_zp, &ps.dagger}) {
        need_group_like(*s, "p-adic side series");
    }
    const HodgeSymbolic hs = moldova_expand(4);
    for (const SymSeries* s : {&hs.phi_kz, &hs.phi_minus, &hs.g0_z, &hs.g0_zbar, &hs.minus}) {
        need_group_like(*s, "Hodge side series");
    }

    const std::vector<std::pair<std::string, PropertyResult>> suites{
        {"character round trip", check_character_round_trip(100, 5, 1)},
        {"recovery vs character", check_recovery_matches_character(100, 5, 2)},
        {"shuffle oracle", check_shuffle_oracle(3)},
        {"stuffle associativity", check_stuffle_associativity(200, 3)},
        {"gt_compose associativity", check_gt_associativity(20, 4, 4)},
    };
    out.note << group_like << " constructed series group-like";
    for (const auto& [name, res] : suites) {
        out.require(res.pass, name + " at " + res.first_failure);
        out.note << "; " << name << " " << res.cases << " cases";
    }
}

} // namespace

int main()
{
    const std::vector<std::pair<int, std::function<void(Outcome&)>>> criteria{
        {1, deligne_examples}, {2, dagger_examples}, {3, hodge_examples}, {4, grt_relations},
        {5, double_shuffle},   {6, kz_equations},    {7, properties},
    };
    bool all = true;
    for (const auto& [n, run] : criteria) {
        Outcome out;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            run(out);
        } catch (const std::exception& e) {
            out.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s criterion %d (%.2fs): %s\n", out.pass ? "PASS" : "FAIL", n, secs, out.summary().c_str());
        std::fflush(stdout);
        all = all && out.pass;
    }
    return all ? 0 : 1;
}
