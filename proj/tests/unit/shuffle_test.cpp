#include <gtest/gtest.h>

#include <random>

#include "pmzv/index.hpp"
#include "pmzv/regularization.hpp"
#include "pmzv/shuffle.hpp"
#include "pmzv/symbol_poly.hpp"

#include "../support/properties.hpp"

namespace {

using namespace pmzv;
using oracle::as_map;

Word W(const char* s)
{
    return Word::parse(s);
}

// sum_{0 < n_1 < ... < n_m <= N} prod n_i^{-k_i}, exactly.
Rational truncated_sum(const Index& k, int cutoff)
{
    if (k.depth() == 0) {
        return 1;
    }
    // level[n]: sum over chains of the first d entries whose last element is n.
    std::vector<Rational> level(static_cast<std::size_t>(cutoff) + 1, Rational(0));
    for (int n = 1; n <= cutoff; ++n) {
        level[static_cast<std::size_t>(n)] = 1 / rational_pow(Rational(n), k[0]);
    }
    for (int d = 1; d < k.depth(); ++d) {
        std::vector<Rational> next(level.size(), Rational(0));
        Rational below = 0;
        for (int n = 1; n <= cutoff; ++n) {
            next[static_cast<std::size_t>(n)] = below / rational_pow(Rational(n), k[d]);
            below += level[static_cast<std::size_t>(n)];
        }
        level = std::move(next);
    }
    Rational total = 0;
    for (const Rational& x : level) {
        total += x;
    }
    return total;
}

TEST(IndexWord, Examples)
{
    const SignedWord a = word_of_index(Index{2});
    EXPECT_EQ(a.word, W("AB"));
    EXPECT_EQ(a.sign, -1);
    const SignedWord b = word_of_index(Index{1, 2});
    EXPECT_EQ(b.word, W("ABB"));
    EXPECT_EQ(b.sign, 1);
    const SignedWord c = word_of_index(Index{1, 1, 2});
    EXPECT_EQ(c.word, W("ABBB"));
    EXPECT_EQ(c.sign, -1);
    EXPECT_EQ(word_of_index(Index{3, 1}).word, W("BAAB"));
}

TEST(IndexWord, RoundTripAndConvergence)
{
    for (const Word& w : words_up_to(8)) {
        if (w.empty() || w.back() != Letter::B) {
            EXPECT_TRUE(w.empty() || !is_convergent(w));
            continue;
        }
        const Index i = index_of_word(w);
        EXPECT_EQ(word_of_index(i).word, w);
        EXPECT_EQ(i.weight(), w.weight());
        EXPECT_EQ(i.depth(), w.count(Letter::B));
        EXPECT_EQ(is_convergent(w), i.admissible());
    }
    EXPECT_THROW(index_of_word(W("BA")), domain_error);
}

TEST(IndexWord, AdmissibleIndexCount)
{
    // 2^{w-2} admissible indices of weight w.
    for (int w = 2; w <= 9; ++w) {
        EXPECT_EQ(admissible_indices(w).size(), std::size_t{1} << (w - 2));
    }
}

TEST(IndexWord, ParseAndPrint)
{
    EXPECT_EQ(Index::parse("1,2").str(), "1,2");
    EXPECT_EQ(Index::parse(" 3 , 1 ,2"), (Index{3, 1, 2}));
    EXPECT_THROW(Index::parse("1,,2"), parse_error);
    // Well-formed text with a non-positive entry is a domain violation.
    EXPECT_THROW(Index::parse("0,2"), domain_error);
}

TEST(Shuffle, Examples)
{
    EXPECT_EQ(as_map(shuffle_words(W("ABB"), Word{})), (std::map<Word, Rational>{{W("ABB"), 1}}));
    EXPECT_EQ(as_map(shuffle_words(W("B"), W("AB"))), (std::map<Word, Rational>{{W("BAB"), 1}, {W("ABB"), 2}}));
    EXPECT_EQ(as_map(shuffle_words(W("AB"), W("AB"))), (std::map<Word, Rational>{{W("ABAB"), 2}, {W("AABB"), 4}}));
}

TEST(Shuffle, MatchesBruteForceUpToThreePlusThree)
{
    const auto r = oracle::check_shuffle_oracle(3);
    EXPECT_TRUE(r.pass) << r.first_failure;
    EXPECT_EQ(r.cases, 15 * 15);
}

TEST(Shuffle, CommutativeAssociativeAndCounts)
{
    std::mt19937_64 rng(21);
    const auto words = words_up_to(3);
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    for (int t = 0; t < 50; ++t) {
        const Word u = words[pick(rng)];
        const Word v = words[pick(rng)];
        const Word w = words[pick(rng)];
        EXPECT_EQ(as_map(shuffle_words(u, v)), as_map(shuffle_words(v, u)));
        EXPECT_EQ(as_map(shuffle(shuffle_words(u, v), WordCombination(w))),
                  as_map(shuffle(WordCombination(u), shuffle_words(v, w))));
        const Rational n = shuffle_words(u, v).coefficient_sum();
        EXPECT_EQ(n, Rational(binomial(static_cast<unsigned>(u.weight() + v.weight()), static_cast<unsigned>(u.weight()))));
    }
}

TEST(Shuffle, LyndonExpansionLeadingTerm)
{
    for (const Word& w : words_up_to(7)) {
        if (w.empty()) {
            continue;
        }
        const LyndonShuffleExpansion ex = lyndon_shuffle_expansion(w);
        Integer lead = 1;
        for (const auto& [l, k] : ex.lyndon_powers) {
            lead *= factorial(static_cast<unsigned>(k));
        }
        EXPECT_EQ(ex.product.coeff(w), Rational(lead)) << w;
        for (const auto& [u, c] : ex.product.terms()) {
            EXPECT_EQ(u.weight(), w.weight());
            EXPECT_LE(u, w);
        }
    }
}

TEST(Stuffle, Examples)
{
    for (int a = 1; a <= 4; ++a) {
        for (int b = 1; b <= 4; ++b) {
            IndexCombination expected;
            expected.add(Index{a, b}, 1);
            expected.add(Index{b, a}, 1);
            expected.add(Index{a + b}, 1);
            EXPECT_EQ(as_map(stuffle_indices(Index{a}, Index{b})), as_map(expected));
        }
    }
    EXPECT_EQ(as_map(stuffle_indices(Index{3}, Index{})), (std::map<Index, Rational>{{Index{3}, 1}}));
    const std::map<Index, Rational> expected{
        {Index{1, 1, 2}, 2}, {Index{1, 2, 1}, 1}, {Index{2, 2}, 1}, {Index{1, 3}, 1}};
    EXPECT_EQ(as_map(stuffle_indices(Index{1}, Index{1, 2})), expected);
}

TEST(Stuffle, MatchesSurjectionOracle)
{
    std::mt19937_64 rng(22);
    for (int t = 0; t < 200; ++t) {
        const Index x = oracle::random_index(rng, 3, 4);
        const Index y = oracle::random_index(rng, 3, 4);
        EXPECT_EQ(as_map(stuffle_indices(x, y)), oracle::stuffle_oracle(x, y)) << x << " * " << y;
    }
}

TEST(Stuffle, TruncatedSumsAreMultiplicative)
{
    std::mt19937_64 rng(23);
    for (int t = 0; t < 30; ++t) {
        const Index x = oracle::random_index(rng, 2, 3);
        const Index y = oracle::random_index(rng, 2, 3);
        Rational rhs = 0;
        for (const auto& [k, c] : stuffle_indices(x, y).terms()) {
            rhs += c * truncated_sum(k, 9);
        }
        EXPECT_EQ(truncated_sum(x, 9) * truncated_sum(y, 9), rhs) << x << " * " << y;
    }
}

TEST(Stuffle, AssociativeOnRandomTriples)
{
    const auto r = oracle::check_stuffle_associativity(200, 24);
    EXPECT_TRUE(r.pass) << r.first_failure;
}

TEST(Recovery, Examples)
{
    const SymbolRing S;
    const SymbolPoly zero;
    EXPECT_EQ(scottland_recover(S, {}, zero, zero, 4), NCSeries<SymbolRing>::one(S, 4));

    // Convergent data of weight <= 3 in free symbols.
    std::map<Word, SymbolPoly> known;
    for (const char* w : {"AB", "AAB", "ABB"}) {
        known.emplace(W(w), SymbolPoly(Generator::lambda("c", W(w))));
    }
    const auto f = scottland_recover(S, known, zero, zero, 3);
    EXPECT_EQ(f.coeff(W("BAB")), f.coeff(W("ABB")) * SymbolPoly(-2));
    EXPECT_TRUE(is_group_like(f));

    const SymbolPoly log_z = log_sym(LogArg::z);
    const auto g = scottland_recover(S, {}, log_z, zero, 3);
    EXPECT_EQ(g.coeff(W("AA")), log_z * log_z * SymbolPoly(Rational(1, 2)));
}

TEST(Recovery, AgreesWithCharacterSeries)
{
    const auto r = oracle::check_recovery_matches_character(100, 5, 25);
    EXPECT_TRUE(r.pass) << r.first_failure;
}

TEST(Recovery, InconsistentDataDetected)
{
    const RationalRing Q;
    // f[AB]^2 must equal 2 f[ABAB] + 4 f[AABB].
    const std::map<Word, Rational> known{{W("AB"), 1}, {W("ABAB"), 1}, {W("AABB"), 1}};
    EXPECT_THROW(scottland_recover(Q, known, Rational(0), Rational(0), 4), inconsistent_data_error);
}

} // namespace
