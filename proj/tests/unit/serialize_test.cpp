#include <gtest/gtest.h>

#include "pmzv/serialize.hpp"
#include "pmzv/symbolic.hpp"
#include "pmzv/verify.hpp"

namespace {

using namespace pmzv;
using nlohmann::json;

template <class S>
void expect_round_trip(const S& f)
{
    const json j = series_to_json(f);
    const AnySeries back = series_from_json(j);
    ASSERT_TRUE(std::holds_alternative<S>(back));
    EXPECT_EQ(std::get<S>(back), f);
    // Text form is canonical: dump -> parse -> dump is the identity.
    EXPECT_EQ(series_to_json(back).dump(), j.dump());
    EXPECT_EQ(series_to_json(series_from_json(json::parse(j.dump()))).dump(), j.dump());
}

TEST(Serialize, RationalRoundTrip)
{
    NCSeries<RationalRing> f = NCSeries<RationalRing>::one(RationalRing{}, 4);
    f.set(Word::parse("AB"), Rational(-3, 7));
    f.set(Word::parse("BBAB"), Rational(12));
    expect_round_trip(f);
    const json j = series_to_json(f);
    EXPECT_EQ(j.at("terms").at(0).at("word"), "");
    EXPECT_EQ(j.at("truncation"), 4);
}

TEST(Serialize, SymbolicRoundTrip)
{
    expect_round_trip(g0_symbolic(LiArg::z_conj, 4));
    expect_round_trip(symbolic_associator(tag_padic_kz, 5));
    expect_round_trip(moldova_expand(3).minus);
}

TEST(Serialize, PadicRoundTrip)
{
    const PadicField K(7, 12);
    NCSeries<PadicField> f = NCSeries<PadicField>::one(K, 3);
    f.set(Word::parse("AB"), PadicNumber::from_rational(7, Rational(5, 49), 12));
    f.set(Word::parse("ABB"), PadicNumber::from_rational(7, Rational(-2, 3), 12));
    expect_round_trip(f);
    EXPECT_EQ(series_to_json(f).at("ring").at("p"), 7);
}

TEST(Serialize, ComplexRoundTrip)
{
    expect_round_trip(std::get<NCSeries<ComplexField>>(build_associator(AssociatorFlavor::complex_kz, 4, std::nullopt)));
}

TEST(Serialize, MalformedInputRejected)
{
    NCSeries<RationalRing> f = NCSeries<RationalRing>::one(RationalRing{}, 2);
    f.set(Word::parse("AB"), Rational(1));
    const json good = series_to_json(f);

    json dup = good;
    dup["terms"].push_back({{"word", "AB"}, {"coeff", "2"}});
    EXPECT_THROW(series_from_json(dup), parse_error);

    json deep = good;
    deep["terms"].push_back({{"word", "ABA"}, {"coeff", "2"}});
    EXPECT_THROW(series_from_json(deep), parse_error);

    json ring = good;
    ring["ring"] = {{"name", "quaternion"}};
    EXPECT_THROW(series_from_json(ring), parse_error);

    json letter = good;
    letter["terms"].push_back({{"word", "AC"}, {"coeff", "2"}});
    EXPECT_THROW(series_from_json(letter), parse_error);

    json coeff = good;
    coeff["terms"][1]["coeff"] = "1/";
    EXPECT_THROW(series_from_json(coeff), parse_error);

    EXPECT_THROW(series_from_json(json::array()), parse_error);
    EXPECT_THROW(series_from_json(json{{"terms", json::array()}}), parse_error);
}

} // namespace
