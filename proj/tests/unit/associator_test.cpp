#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "pmzv/arch_eval.hpp"
#include "pmzv/associator.hpp"
#include "pmzv/braid.hpp"
#include "pmzv/verify.hpp"

#include "../support/properties.hpp"

namespace {

using namespace pmzv;
using QSeries = NCSeries<RationalRing>;
using CSeries = NCSeries<ComplexField>;

const RationalRing Q;

Word W(const char* s)
{
    return Word::parse(s);
}

template <class T>
const T& as(const AnySeries& s)
{
    return std::get<T>(s);
}

TEST(GTPair, UnitAndInverseLaws)
{
    std::mt19937_64 rng(31);
    const int n = 4;
    for (int t = 0; t < 5; ++t) {
        auto assign = oracle::random_lyndon_assignment(rng, n);
        assign.erase(W("A"));
        assign.erase(W("B"));
        const QSeries g = character_series(Q, n, assign);
        const GTPair<RationalRing> x{Rational(t + 2, 3), g};
        const GTPair<RationalRing> unit{Rational(1), QSeries::one(Q, n)};
        EXPECT_TRUE(gt_equal(gt_compose(unit, x), x));
        EXPECT_TRUE(gt_equal(gt_compose(x, unit), x));
        EXPECT_TRUE(gt_equal(gt_compose(x, gt_invert(x)), unit));
        EXPECT_TRUE(gt_equal(gt_compose(gt_invert(x), x), unit));
    }
}

TEST(GTPair, AssociativeOnRandomSymbolicTriples)
{
    const auto r = oracle::check_gt_associativity(10, 4, 32);
    EXPECT_TRUE(r.pass) << r.first_failure;
}

TEST(GTPair, ZeroScalarRejected)
{
    const GTPair<RationalRing> x{Rational(0), QSeries::one(Q, 2)};
    EXPECT_THROW(gt_compose(x, x), domain_error);
}

TEST(Substitution, Examples)
{
    const int n = 4;
    const QSeries a = QSeries::letter(Q, n, Letter::A);
    const QSeries b = QSeries::letter(Q, n, Letter::B);
    const QSeries one = QSeries::one(Q, n);
    EXPECT_EQ(infinity_substitution(a, one), -a);
    EXPECT_EQ(frobenius_substitution(b, one, 7), b * Rational(1, 7));
    EXPECT_EQ(solve_deligne_from_kz(one, 5), one);

    const ComplexField C;
    const CSeries ca = CSeries::letter(C, n, Letter::A);
    const CSeries cone = CSeries::one(C, n);
    const Complex t(0, 2 * std::numbers::pi);
    EXPECT_EQ(period_substitution(period_substitution(ca, cone, t), cone, t), ca * (t * t));
}

// Phi_KZ = Phi_De * Phi_KZ(A/p, Phi_De^{-1} (B/p) Phi_De) holds for the solved Phi_De.
TEST(Substitution, DeligneSolutionSatisfiesDefiningEquation)
{
    std::mt19937_64 rng(33);
    const int n = 5;
    auto assign = oracle::random_lyndon_assignment(rng, n);
    assign.erase(W("A"));
    assign.erase(W("B"));
    const QSeries phi = character_series(Q, n, assign);
    for (long p : {2L, 3L, 7L}) {
        const QSeries de = solve_deligne_from_kz(phi, p);
        EXPECT_TRUE(is_group_like(de));
        EXPECT_EQ(de * frobenius_substitution(phi, de, p), phi);
        const QSeries minus = solve_minus_from_kz(phi);
        EXPECT_EQ(minus * infinity_substitution(phi, minus), phi);
    }
}

TEST(BuildAssociator, ComplexCoefficients)
{
    const CSeries phi = as<CSeries>(build_associator(AssociatorFlavor::complex_kz, 4, std::nullopt));
    EXPECT_NEAR(phi.coeff(W("AB")).real(), -std::numbers::pi * std::numbers::pi / 6, 1e-7);
    EXPECT_EQ(phi.coeff(W("A")), Complex(0));
    EXPECT_EQ(phi.coeff(W("B")), Complex(0));
    EXPECT_NEAR(std::abs(phi.coeff(W("BAB")) + 2.0 * phi.coeff(W("ABB"))), 0.0, 1e-9);
    // zeta(1,2) = zeta(3): the two depth-sign conventions give opposite signs.
    EXPECT_NEAR(std::abs(phi.coeff(W("ABB")) + phi.coeff(W("AAB"))), 0.0, 1e-8);
    EXPECT_TRUE(is_group_like(phi));
}

TEST(BuildAssociator, SymbolicFlavors)
{
    using SSeries = NCSeries<SymbolRing>;
    for (AssociatorFlavor f : {AssociatorFlavor::padic_kz, AssociatorFlavor::padic_deligne, AssociatorFlavor::minus_kz,
                               AssociatorFlavor::symbolic_lambda}) {
        const SSeries phi = as<SSeries>(build_associator(f, 4, 5L));
        EXPECT_TRUE(is_group_like(phi)) << flavor_name(f);
        EXPECT_TRUE(phi.coeff(W("A")).is_zero());
        EXPECT_TRUE(phi.coeff(W("B")).is_zero());
        EXPECT_EQ(phi.coeff(W("BAB")), phi.coeff(W("ABB")) * SymbolPoly(-2)) << flavor_name(f);
    }
    const SSeries kz = as<SSeries>(build_associator(AssociatorFlavor::padic_kz, 3, std::nullopt));
    EXPECT_EQ(kz.coeff(W("AB")), zeta_sym(ZetaFlavor::padic, Index{2}) * SymbolPoly(-1));
    EXPECT_EQ(kz.coeff(W("ABB")), zeta_sym(ZetaFlavor::padic, Index{1, 2}));
}

TEST(BuildAssociator, RejectsBadParameters)
{
    EXPECT_THROW(build_associator(AssociatorFlavor::padic_deligne, 3, std::nullopt), domain_error);
    EXPECT_THROW(build_associator(AssociatorFlavor::padic_deligne, 3, 4L), domain_error);
    EXPECT_THROW(build_associator(AssociatorFlavor::complex_kz, 0, std::nullopt), domain_error);
    EXPECT_THROW(parse_flavor("nonsense"), parse_error);
}

TEST(Grt, TrivialAssociatorSatisfiesEverything)
{
    const int n = 4;
    const auto basis = std::make_shared<const BraidBasis>(n);
    const GrtReport<RationalRing> r = verify_grt_relations(QSeries::one(Q, n), Rational(0), basis);
    EXPECT_TRUE(r.rel0.exact_zero());
    EXPECT_TRUE(r.rel_i.exact_zero());
    EXPECT_TRUE(r.rel_ii.exact_zero());
    EXPECT_TRUE(r.rel_iii.exact_zero());
}

TEST(Grt, NumericAssociatorWithinTolerance)
{
    const int n = 4;
    const CSeries phi = numeric_associator(n);
    const auto basis = std::make_shared<const BraidBasis>(n);
    const auto r = verify_grt_relations(phi, Complex(0, 2 * std::numbers::pi), basis);
    for (const auto* res : {&r.rel0, &r.rel_i, &r.rel_ii, &r.rel_iii}) {
        for (const auto& [w, c] : res->entries) {
            EXPECT_LT(std::abs(c), 1e-6) << res->relation << " " << w;
        }
    }
}

TEST(Grt, GenericGroupLikeSeriesFailsDuality)
{
    const QSeries f = character_series(Q, 3, {{W("AB"), Rational(1)}, {W("AAB"), Rational(2)}});
    EXPECT_FALSE(grt_rel_i(f).exact_zero());
}

TEST(Grt, SymbolicWeightTwoForcesZetaTwo)
{
    VerifyOptions opt;
    opt.weight = 2;
    opt.flavor = AssociatorFlavor::padic_kz;
    const IdentityReport r = verify_identity("hexagon", opt);
    EXPECT_EQ(r.status, "constraints");
    ASSERT_EQ(r.constraints.size(), 1u);
    EXPECT_EQ(r.constraints[0], "zeta_p[2] = 0");
}

TEST(LieLeadingTerm, Examples)
{
    const auto two = lie_leading_term(numeric_associator(2), 2);
    EXPECT_NEAR(two.log_coefficient.real(), -1.6449341, 1e-6);
    EXPECT_NEAR(two.lie_coordinate.real(), -1.6449341, 1e-6);

    using SSeries = NCSeries<SymbolRing>;
    const SSeries phi = as<SSeries>(build_associator(AssociatorFlavor::padic_kz, 3, std::nullopt));
    const auto three = lie_leading_term(phi, 3);
    EXPECT_EQ(three.log_coefficient, zeta_sym(ZetaFlavor::padic, Index{3}) * SymbolPoly(-1));
    EXPECT_EQ(three.lie_coordinate, zeta_sym(ZetaFlavor::padic, Index{3}) * SymbolPoly(-1));

    const int n = 5;
    const QSeries a = QSeries::letter(Q, n, Letter::A);
    QSeries bracket = QSeries::letter(Q, n, Letter::B);
    for (int i = 0; i < 3; ++i) {
        bracket = commutator(a, bracket);
    }
    const Rational c(-5, 3);
    const auto four = lie_leading_term(exp_series(bracket * c), 4);
    EXPECT_EQ(four.lie_coordinate, c);
    EXPECT_EQ(four.log_coefficient, c * bracket.coeff(W("AAAB")));
    EXPECT_THROW(lie_leading_term(a, 6), domain_error);
}

// Hilbert series of the reduced 5-strand enveloping algebra:
// 1 / ((1 - 2t)(1 - 3t)).
TEST(Braid, DimensionsMatchHilbertSeries)
{
    const BraidBasis basis(6);
    for (int d = 0; d <= 6; ++d) {
        std::size_t expected = 0;
        for (int i = 0; i <= d; ++i) {
            expected += (std::size_t{1} << i) * static_cast<std::size_t>(std::pow(3, d - i));
        }
        EXPECT_EQ(basis.dimension(d), expected) << "degree " << d;
    }
}

TEST(Braid, LinearRelationsHold)
{
    const auto basis = std::make_shared<const BraidBasis>(2);
    for (int i = 1; i <= 5; ++i) {
        BraidElement<RationalRing> sum(basis, Q);
        for (int j = 1; j <= 5; ++j) {
            if (j != i) {
                sum = sum + BraidElement<RationalRing>::generator(basis, Q, i, j);
            }
        }
        EXPECT_TRUE(sum.terms().empty()) << "row " << i;
    }
}

TEST(Braid, DisjointGeneratorsCommute)
{
    const auto basis = std::make_shared<const BraidBasis>(3);
    using E = BraidElement<RationalRing>;
    const std::vector<std::pair<int, int>> pairs{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}};
    for (const auto& [i, j] : pairs) {
        for (const auto& [k, l] : pairs) {
            if (i == k || i == l || j == k || j == l) {
                continue;
            }
            const E x = E::generator(basis, Q, i, j);
            const E y = E::generator(basis, Q, k, l);
            EXPECT_TRUE((x * y - y * x).terms().empty());
        }
    }
}

// Normal forms are confluent: reduction is idempotent and multiplication
// of normal forms is associative.
TEST(Braid, ReductionConfluent)
{
    const auto basis = std::make_shared<const BraidBasis>(4);
    using E = BraidElement<RationalRing>;
    std::mt19937_64 rng(35);
    std::uniform_int_distribution<int> node(1, 5);
    auto random_element = [&] {
        E e = E::one(basis, Q) * oracle::random_rational(rng);
        for (int t = 0; t < 3; ++t) {
            int i = node(rng);
            int j = node(rng);
            while (j == i) {
                j = node(rng);
            }
            e = e + E::generator(basis, Q, i, j) * oracle::random_rational(rng);
        }
        return e;
    };
    for (int t = 0; t < 20; ++t) {
        const E x = random_element();
        const E y = random_element();
        const E z = random_element();
        EXPECT_EQ(((x * y) * z).terms(), (x * (y * z)).terms());
    }
    for (const auto& rel : basis->quadratic_relations()) {
        EXPECT_TRUE(basis->reduce(rel).empty());
    }
}

} // namespace
