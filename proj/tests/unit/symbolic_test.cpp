#include <gtest/gtest.h>

#include "pmzv/symbolic.hpp"
#include "pmzv/verify.hpp"

#include "../support/example_forms.hpp"

namespace {

using namespace pmzv;
namespace forms = pmzv::oracle::forms;

Word W(const char* s)
{
    return Word::parse(s);
}

SymbolPoly li(std::initializer_list<int> k, LiArg arg = LiArg::z)
{
    return li_sym(LiFlavor::plain, Index(k), arg);
}

TEST(SymbolPoly, CommutativeRingWithCanonicalText)
{
    const SymbolPoly x = zeta_sym(ZetaFlavor::complex, Index{2});
    const SymbolPoly y = li({1, 2});
    const SymbolPoly z = log_sym(LogArg::z);
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ((x + y) * z, x * z + y * z);
    EXPECT_EQ(x - x, SymbolPoly());
    const SymbolPoly q = x * x * SymbolPoly(Rational(-3, 4)) + y * z + SymbolPoly(2);
    EXPECT_EQ(SymbolPoly::parse(q.str()), q);
    EXPECT_EQ((x * y).homogeneous_weight(), 5);
    EXPECT_FALSE((x + z).homogeneous_weight().has_value());
}

TEST(SymbolPoly, GeneratorWeights)
{
    EXPECT_EQ(Generator::zeta(ZetaFlavor::padic, Index{1, 3}).weight(), 4);
    EXPECT_EQ(Generator::li(LiFlavor::dagger, Index{2}, LiArg::z).weight(), 2);
    EXPECT_EQ(Generator::log(LogArg::abs_z_sq).weight(), 1);
    EXPECT_EQ(Generator::lambda("KZ", W("AABAB")).weight(), 5);
    EXPECT_THROW(Generator::lambda("", W("AB")), domain_error);
}

TEST(FormalDerivative, Examples)
{
    const ZDerivative dlog = formal_derivative(log_sym(LogArg::z));
    EXPECT_EQ(dlog.over_z, SymbolPoly(1));
    EXPECT_TRUE(dlog.over_one_minus_z.is_zero());

    const ZDerivative dli1 = formal_derivative(li({1}));
    EXPECT_EQ(dli1.over_one_minus_z, SymbolPoly(1));
    EXPECT_TRUE(dli1.over_z.is_zero());

    const ZDerivative dli12 = formal_derivative(li({1, 2}));
    EXPECT_EQ(dli12.over_z, li({1, 1}));
    EXPECT_TRUE(dli12.over_one_minus_z.is_zero());

    EXPECT_THROW(formal_derivative(li({2}, LiArg::z_pow_p)), domain_error);
    EXPECT_TRUE(formal_derivative(zeta_sym(ZetaFlavor::padic, Index{3})).is_zero());
}

TEST(FormalDerivative, LeibnizRule)
{
    const std::vector<SymbolPoly> pieces{li({2}), li({1, 2}), log_sym(LogArg::z), li({1}) * li({3}),
                                         li({2}, LiArg::z_pow_p), log_sym(LogArg::z_pow_p)};
    const Rational p = 5;
    for (const SymbolPoly& f : pieces) {
        for (const SymbolPoly& g : pieces) {
            const ZDerivative dfg = formal_derivative(f * g, p);
            const ZDerivative df = formal_derivative(f, p);
            const ZDerivative dg = formal_derivative(g, p);
            EXPECT_EQ(dfg.over_z, df.over_z * g + f * dg.over_z);
            EXPECT_EQ(dfg.over_one_minus_z, df.over_one_minus_z * g + f * dg.over_one_minus_z);
            EXPECT_EQ(dfg.over_zp, df.over_zp * g + f * dg.over_zp);
        }
    }
}

TEST(G0, Coefficients)
{
    const SymSeries g = g0_symbolic(LiArg::z, 4);
    const SymbolPoly log_z = log_sym(LogArg::z);
    EXPECT_EQ(g.coeff(W("A")), log_z);
    EXPECT_EQ(g.coeff(W("B")), li({1}) * SymbolPoly(-1));
    EXPECT_EQ(g.coeff(W("AA")), log_z * log_z * SymbolPoly(Rational(1, 2)));
    EXPECT_EQ(g.coeff(W("AB")), li({2}) * SymbolPoly(-1));
    EXPECT_TRUE(is_group_like(g));
}

TEST(G0, KZEquation)
{
    const SymbolContext ctx;
    const SymSeries one = SymSeries::one(SymbolRing{}, 3);
    const KZResidual r1 = verify_kz_equation(one, ctx);
    const SymSeries a = SymSeries::letter(SymbolRing{}, 3, Letter::A);
    const SymSeries b = SymSeries::letter(SymbolRing{}, 3, Letter::B);
    // -(A/z + B/(z-1)) = -A/z + B/(1-z).
    EXPECT_EQ(r1.over_z, -a);
    EXPECT_EQ(r1.over_one_minus_z, b);
    for (int n = 1; n <= 5; ++n) {
        EXPECT_TRUE(verify_kz_equation(g0_symbolic(LiArg::z, n), ctx).is_zero()) << n;
    }
}

TEST(Expansions, OverconvergentSide)
{
    for (long p : {2L, 3L, 5L}) {
        const PadicSymbolic ps = czech_expand(p, 4);
        const SymbolContext ctx = ps.context();
        EXPECT_TRUE(canonicalize(ps.dagger.coeff(W("A")), ctx).is_zero());
        EXPECT_TRUE(is_group_like(ps.dagger));
        for (int k = 1; k <= 4; ++k) {
            EXPECT_EQ(canonicalize(li_sym(LiFlavor::dagger, Index{k}, LiArg::z), ctx), canonicalize(forms::dagger1(p, k), ctx));
        }
        EXPECT_EQ(canonicalize(li_sym(LiFlavor::dagger, Index{1, 2}, LiArg::z), ctx), canonicalize(forms::dagger2(p, 1, 2), ctx));
        EXPECT_TRUE(verify_princeton_equation(ps.dagger, ps.phi_de, p, ctx).is_zero());
        // The plain G0 is not a solution of the modified equation.
        EXPECT_FALSE(verify_princeton_equation(ps.g0_z, ps.phi_de, p, ctx).is_zero());
    }
    EXPECT_THROW(czech_expand(6, 3), domain_error);
}

TEST(Expansions, HodgeSide)
{
    const HodgeSymbolic hs = moldova_expand(4);
    const SymbolContext ctx = hs.context();
    EXPECT_EQ(canonicalize(hs.minus.coeff(W("A")), ctx), log_sym(LogArg::z) + log_sym(LogArg::z_conj));
    for (int k = 1; k <= 4; ++k) {
        EXPECT_EQ(canonicalize(li_sym(LiFlavor::minus, Index{k}, LiArg::z), ctx), canonicalize(forms::minus1(k), ctx));
    }
    for (auto [a, b] : {std::pair{1, 2}, std::pair{2, 1}, std::pair{1, 3}, std::pair{2, 2}, std::pair{3, 1}, std::pair{1, 1}}) {
        EXPECT_EQ(canonicalize(li_sym(LiFlavor::minus, Index{a, b}, LiArg::z), ctx), canonicalize(forms::minus2(a, b), ctx))
            << a << "," << b;
    }
}

TEST(ClosedForms, MatchTestTranscription)
{
    for (long p : {2L, 3L, 5L, 7L, 11L}) {
        for (int k = 2; k <= 6; ++k) {
            EXPECT_EQ(closed_form::deligne_depth1(p, k), forms::deligne1(p, k));
            EXPECT_EQ(closed_form::dagger_depth1(p, k), forms::dagger1(p, k));
        }
        for (int a = 1; a <= 3; ++a) {
            for (int b = 2; b <= 4; ++b) {
                EXPECT_EQ(closed_form::deligne_depth2(p, a, b), forms::deligne2(p, a, b));
            }
            for (int b = 1; b <= 4; ++b) {
                EXPECT_EQ(closed_form::dagger_depth2(p, a, b), forms::dagger2(p, a, b));
            }
        }
    }
    for (int k = 1; k <= 5; ++k) {
        EXPECT_EQ(closed_form::minus_depth1(k), forms::minus1(k));
    }
    for (int a = 1; a <= 3; ++a) {
        for (int b = 1; b <= 3; ++b) {
            EXPECT_EQ(closed_form::minus_depth2(a, b), forms::minus2(a, b));
        }
    }
}

TEST(ClosedForms, WeightTwoDeligneValue)
{
    const SymbolPoly expected = zeta_sym(ZetaFlavor::padic, Index{2}) * SymbolPoly(Rational(24, 25));
    EXPECT_EQ(closed_form::deligne_depth1(5, 2), expected);
}

struct IdentityCase {
    const char* identity;
    int weight;
    std::optional<long> p;
    const char* status;
};

void PrintTo(const IdentityCase& c, std::ostream* os)
{
    *os << c.identity;
}

class IdentityTest : public ::testing::TestWithParam<IdentityCase> {};

TEST_P(IdentityTest, Passes)
{
    const IdentityCase c = GetParam();
    VerifyOptions opt;
    opt.weight = c.weight;
    opt.p = c.p;
    const IdentityReport r = verify_identity(c.identity, opt);
    EXPECT_EQ(r.status, c.status);
    for (const CheckLine& line : r.checks) {
        EXPECT_TRUE(line.pass) << line.name << ": " << line.residual;
    }
    const nlohmann::json j = report_to_json(r);
    EXPECT_EQ(j.at("identity"), c.identity);
    EXPECT_EQ(j.at("status"), c.status);
    EXPECT_EQ(j.at("schema_version"), 1);
}

INSTANTIATE_TEST_SUITE_P(
    AllIdentities, IdentityTest,
    ::testing::Values(IdentityCase{"netherland", 4, 2, "exact-zero"}, IdentityCase{"netherland", 4, 5, "exact-zero"},
                      IdentityCase{"netherland", 5, 7, "exact-zero"}, IdentityCase{"czech", 4, 3, "exact-zero"},
                      IdentityCase{"czech", 5, 2, "exact-zero"}, IdentityCase{"moldova", 4, std::nullopt, "exact-zero"},
                      IdentityCase{"moldova", 5, std::nullopt, "exact-zero"}, IdentityCase{"kz", 5, std::nullopt, "exact-zero"},
                      IdentityCase{"princeton", 4, 5, "exact-zero"}, IdentityCase{"dual", 4, std::nullopt, "within-tolerance"},
                      IdentityCase{"hexagon", 4, std::nullopt, "within-tolerance"},
                      IdentityCase{"pentagon", 4, std::nullopt, "within-tolerance"}),
    [](const ::testing::TestParamInfo<IdentityCase>& info) {
        return std::string(info.param.identity) + "_w" + std::to_string(info.param.weight) +
               (info.param.p ? "_p" + std::to_string(*info.param.p) : std::string());
    });

TEST(Verify, RejectsBadRequests)
{
    VerifyOptions opt;
    EXPECT_THROW(verify_identity("nonsense", opt), domain_error);
    EXPECT_THROW(verify_identity("netherland", opt), domain_error);
    opt.p = 4;
    EXPECT_THROW(verify_identity("czech", opt), domain_error);
    opt.p = 3;
    opt.weight = 9;
    EXPECT_THROW(verify_identity("czech", opt), domain_error);
}

TEST(Verify, SymbolicDualityConstraintsAtWeightFour)
{
    VerifyOptions opt;
    opt.weight = 4;
    opt.flavor = AssociatorFlavor::padic_kz;
    const IdentityReport r = verify_identity("dual", opt);
    EXPECT_EQ(r.status, "constraints");
    const std::vector<std::string> expected{"-zeta_p[3] + zeta_p[1,2] = 0", "-zeta_p[4] + zeta_p[1,1,2] = 0"};
    EXPECT_EQ(r.constraints, expected);
}

} // namespace
