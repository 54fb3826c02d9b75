#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pmzv/errors.hpp"
#include "pmzv/lyndon.hpp"
#include "pmzv/rings.hpp"
#include "pmzv/shuffle.hpp"
#include "pmzv/word.hpp"

namespace pmzv {

inline constexpr int default_truncation = 5;

// Truncated formal power series in the non-commuting letters A and B.
//
// Coefficients are stored sparsely for words of weight <= truncation();
// writes beyond the truncation are dropped. Binary operations require equal
// rings and truncate at the smaller truncation.
template <CoefficientRing R>
class NCSeries {
public:
    using ring_type = R;
    using value_type = typename R::value_type;
    using map_type = std::map<Word, value_type>;

    NCSeries(R ring, int truncation) : ring_(std::move(ring)), trunc_(truncation)
    {
        if (truncation < 0 || truncation > Word::max_weight) {
            throw domain_error("NCSeries: truncation out of range");
        }
    }

    static NCSeries one(const R& ring, int truncation)
    {
        NCSeries s(ring, truncation);
        s.set(Word{}, ring.one());
        return s;
    }
    static NCSeries monomial(const R& ring, int truncation, const Word& w, const value_type& c)
    {
        NCSeries s(ring, truncation);
        s.set(w, c);
        return s;
    }
    static NCSeries letter(const R& ring, int truncation, Letter l)
    {
        return monomial(ring, truncation, Word::letter(l), ring.one());
    }

    [[nodiscard]] const R& ring() const noexcept { return ring_; }
    [[nodiscard]] int truncation() const noexcept { return trunc_; }
    [[nodiscard]] const map_type& terms() const& noexcept { return terms_; }
    [[nodiscard]] map_type terms() && { return std::move(terms_); }

    [[nodiscard]] value_type coeff(const Word& w) const
    {
        auto it = terms_.find(w);
        return it == terms_.end() ? ring_.zero() : it->second;
    }

    void set(const Word& w, const value_type& c)
    {
        if (w.weight() > trunc_) {
            return;
        }
        if (ring_.is_zero(c)) {
            terms_.erase(w);
        } else {
            terms_.insert_or_assign(w, c);
        }
    }

    void add_to(const Word& w, const value_type& c)
    {
        if (w.weight() > trunc_ || ring_.is_zero(c)) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            value_type sum = it->second + c;
            if (ring_.is_zero(sum)) {
                terms_.erase(it);
            } else {
                it->second = std::move(sum);
            }
        }
    }

    [[nodiscard]] NCSeries truncated(int n) const
    {
        NCSeries s(ring_, std::min(n, trunc_));
        for (const auto& [w, c] : terms_) {
            s.set(w, c);
        }
        return s;
    }

    [[nodiscard]] NCSeries homogeneous_part(int n) const
    {
        NCSeries s(ring_, trunc_);
        for (const auto& [w, c] : terms_) {
            if (w.weight() == n) {
                s.set(w, c);
            }
        }
        return s;
    }

    [[nodiscard]] bool is_zero() const
    {
        return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return ring_.is_zero(t.second); });
    }

    // Coefficientwise comparison with ring.equal over all words of weight
    // <= min(truncations).
    [[nodiscard]] bool equals(const NCSeries& o) const
    {
        check_ring(o);
        const int n = std::min(trunc_, o.trunc_);
        auto visit = [&](const NCSeries& x, const NCSeries& y) {
            for (const auto& [w, c] : x.terms_) {
                if (w.weight() <= n && !ring_.equal(c, y.coeff(w))) {
                    return false;
                }
            }
            return true;
        };
        return visit(*this, o) && visit(o, *this);
    }

    void check_ring(const NCSeries& o) const
    {
        if (!(ring_ == o.ring_)) {
            throw ring_mismatch_error("NCSeries: ring mismatch (" + ring_.name() + " vs " + o.ring_.name() + ")");
        }
    }

    NCSeries& operator+=(const NCSeries& o)
    {
        check_ring(o);
        *this = this->truncated(o.trunc_);
        for (const auto& [w, c] : o.terms_) {
            add_to(w, c);
        }
        return *this;
    }
    NCSeries& operator-=(const NCSeries& o)
    {
        check_ring(o);
        *this = this->truncated(o.trunc_);
        for (const auto& [w, c] : o.terms_) {
            add_to(w, -c);
        }
        return *this;
    }
    NCSeries& operator*=(const value_type& s)
    {
        map_type out;
        for (auto& [w, c] : terms_) {
            value_type v = c * s;
            if (!ring_.is_zero(v)) {
                out.emplace(w, std::move(v));
            }
        }
        terms_ = std::move(out);
        return *this;
    }

    friend NCSeries operator+(NCSeries a, const NCSeries& b) { return a += b; }
    friend NCSeries operator-(NCSeries a, const NCSeries& b) { return a -= b; }
    friend NCSeries operator-(NCSeries a)
    {
        for (auto& [w, c] : a.terms_) {
            c = -c;
        }
        return a;
    }
    friend NCSeries operator*(NCSeries a, const value_type& s) { return a *= s; }
    friend NCSeries operator*(const value_type& s, NCSeries a) { return a *= s; }

    // Concatenation product.
    friend NCSeries operator*(const NCSeries& f, const NCSeries& g)
    {
        f.check_ring(g);
        const int n = std::min(f.trunc_, g.trunc_);
        NCSeries out(f.ring_, n);
        for (const auto& [u, cu] : f.terms_) {
            if (u.weight() > n) {
                continue;
            }
            for (const auto& [v, cv] : g.terms_) {
                if (u.weight() + v.weight() > n) {
                    continue;
                }
                value_type t = cu * cv;
                out.add_to(u + v, t);
            }
        }
        return out;
    }

    friend bool operator==(const NCSeries& a, const NCSeries& b) { return a.equals(b); }

private:
    R ring_;
    int trunc_;
    map_type terms_;
};

template <CoefficientRing R>
NCSeries<R> concat_mul(const NCSeries<R>& f, const NCSeries<R>& g)
{
    return f * g;
}

// Multiplicative inverse by the geometric series in f[1]^{-1} f - 1.
template <CoefficientRing R>
NCSeries<R> invert(const NCSeries<R>& f)
{
    const auto& ring = f.ring();
    auto c_inv = ring.inverse(f.coeff(Word{}));
    if (!c_inv) {
        throw domain_error("invert: constant term is not a unit");
    }
    const int n = f.truncation();
    NCSeries<R> x = f * *c_inv;
    x.set(Word{}, ring.zero());
    // 1 - x + x^2 - ..., Horner form.
    NCSeries<R> result = NCSeries<R>::one(ring, n);
    for (int k = 0; k < n; ++k) {
        result = NCSeries<R>::one(ring, n) - x * result;
    }
    return result * *c_inv;
}

// Evaluates f at images of A and B in any algebra with +, * and scalar
// multiplication by R::value_type, via Horner's scheme on the word trie.
template <CoefficientRing R, class Target>
Target evaluate_series(const NCSeries<R>& f, const Target& img_a, const Target& img_b, const Target& unit)
{
    using value_type = typename R::value_type;
    using Map = std::map<Word, value_type>;
    auto rec = [&](auto&& self, const Map& terms) -> Target {
        Map after_a;
        Map after_b;
        Target result = unit * f.ring().zero();
        for (const auto& [w, c] : terms) {
            if (w.empty()) {
                result = result + unit * c;
            } else if (w.front() == Letter::A) {
                after_a.emplace(w.drop_front(), c);
            } else {
                after_b.emplace(w.drop_front(), c);
            }
        }
        if (!after_a.empty()) {
            result = result + img_a * self(self, after_a);
        }
        if (!after_b.empty()) {
            result = result + img_b * self(self, after_b);
        }
        return result;
    };
    return rec(rec, f.terms());
}

// Ring homomorphism A -> img_a, B -> img_b. Images must have zero constant
// term so the weight filtration is respected and truncation is exact.
template <CoefficientRing R>
NCSeries<R> substitute(const NCSeries<R>& f, const NCSeries<R>& img_a, const NCSeries<R>& img_b)
{
    f.check_ring(img_a);
    f.check_ring(img_b);
    const auto& ring = f.ring();
    if (!ring.is_zero(img_a.coeff(Word{})) || !ring.is_zero(img_b.coeff(Word{}))) {
        throw domain_error("substitute: images must have zero constant term");
    }
    const int n = std::min({f.truncation(), img_a.truncation(), img_b.truncation()});
    return evaluate_series(f.truncated(n), img_a.truncated(n), img_b.truncated(n), NCSeries<R>::one(ring, n));
}

template <CoefficientRing R>
NCSeries<R> exp_series(const NCSeries<R>& l)
{
    if constexpr (!R::has_rational_scalars) {
        throw capability_error("exp_series: ring " + l.ring().name() + " lacks rational scalars");
    } else {
        const auto& ring = l.ring();
        if (!ring.is_zero(l.coeff(Word{}))) {
            throw domain_error("exp_series: argument must have zero constant term");
        }
        const int n = l.truncation();
        // 1 + l(1 + l/2(1 + l/3(...)))
        NCSeries<R> result = NCSeries<R>::one(ring, n);
        for (int k = n; k >= 1; --k) {
            result = NCSeries<R>::one(ring, n) + (l * result) * ring.from_rational(Rational(1, k));
        }
        return result;
    }
}

template <CoefficientRing R>
NCSeries<R> log_series(const NCSeries<R>& f)
{
    if constexpr (!R::has_rational_scalars) {
        throw capability_error("log_series: ring " + f.ring().name() + " lacks rational scalars");
    } else {
        const auto& ring = f.ring();
        if (!ring.equal(f.coeff(Word{}), ring.one())) {
            throw domain_error("log_series: argument must have constant term 1");
        }
        const int n = f.truncation();
        NCSeries<R> x = f - NCSeries<R>::one(ring, n);
        x.set(Word{}, ring.zero());
        // sum_{k>=1} (-1)^{k+1} x^k / k
        NCSeries<R> result(ring, n);
        NCSeries<R> power = x;
        for (int k = 1; k <= n; ++k) {
            Rational s(k % 2 == 1 ? 1 : -1, k);
            result += power * ring.from_rational(s);
            power = power * x;
        }
        return result;
    }
}

// Element of the completed tensor square, indexed by word pairs with total
// weight <= truncation.
template <CoefficientRing R>
class TensorSeries {
public:
    using value_type = typename R::value_type;
    using key_type = std::pair<Word, Word>;
    using map_type = std::map<key_type, value_type>;

    TensorSeries(R ring, int truncation) : ring_(std::move(ring)), trunc_(truncation) {}

    [[nodiscard]] const R& ring() const noexcept { return ring_; }
    [[nodiscard]] int truncation() const noexcept { return trunc_; }
    [[nodiscard]] const map_type& terms() const& noexcept { return terms_; }
    [[nodiscard]] map_type terms() && { return std::move(terms_); }

    [[nodiscard]] value_type coeff(const Word& u, const Word& v) const
    {
        auto it = terms_.find({u, v});
        return it == terms_.end() ? ring_.zero() : it->second;
    }

    void add_to(const Word& u, const Word& v, const value_type& c)
    {
        if (u.weight() + v.weight() > trunc_ || ring_.is_zero(c)) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace({u, v}, c);
        if (!inserted) {
            value_type sum = it->second + c;
            if (ring_.is_zero(sum)) {
                terms_.erase(it);
            } else {
                it->second = std::move(sum);
            }
        }
    }

    [[nodiscard]] bool equals(const TensorSeries& o) const
    {
        auto visit = [&](const TensorSeries& x, const TensorSeries& y) {
            for (const auto& [k, c] : x.terms_) {
                if (!ring_.equal(c, y.coeff(k.first, k.second))) {
                    return false;
                }
            }
            return true;
        };
        return visit(*this, o) && visit(o, *this);
    }

private:
    R ring_;
    int trunc_;
    map_type terms_;
};

// Coproduct with A, B primitive: each word maps to the sum over its letter
// subsets I of w|_I (x) w|_{complement of I}.
template <CoefficientRing R>
TensorSeries<R> coproduct(const NCSeries<R>& f)
{
    TensorSeries<R> out(f.ring(), f.truncation());
    for (const auto& [w, c] : f.terms()) {
        const int n = w.weight();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            std::string left;
            std::string right;
            for (int i = 0; i < n; ++i) {
                char ch = w.at(i) == Letter::A ? 'A' : 'B';
                if ((mask >> i) & 1U) {
                    left.push_back(ch);
                } else {
                    right.push_back(ch);
                }
            }
            out.add_to(Word::parse(left), Word::parse(right), c);
        }
    }
    return out;
}

template <CoefficientRing R>
TensorSeries<R> tensor_square(const NCSeries<R>& f)
{
    TensorSeries<R> out(f.ring(), f.truncation());
    for (const auto& [u, cu] : f.terms()) {
        for (const auto& [v, cv] : f.terms()) {
            if (u.weight() + v.weight() <= f.truncation()) {
                typename R::value_type t = cu * cv;
                out.add_to(u, v, t);
            }
        }
    }
    return out;
}

// Constant term 1 and coproduct(f) == f (x) f to the truncation.
template <CoefficientRing R>
bool is_group_like(const NCSeries<R>& f)
{
    if (!f.ring().equal(f.coeff(Word{}), f.ring().one())) {
        return false;
    }
    return coproduct(f).equals(tensor_square(f));
}

template <CoefficientRing R>
bool is_group_like(const NCSeries<R>& f, int n)
{
    return is_group_like(f.truncated(n));
}

// coproduct(x) == x (x) 1 + 1 (x) x.
template <CoefficientRing R>
bool is_primitive(const NCSeries<R>& x)
{
    TensorSeries<R> expected(x.ring(), x.truncation());
    for (const auto& [w, c] : x.terms()) {
        expected.add_to(w, Word{}, c);
        if (!w.empty()) {
            expected.add_to(Word{}, w, c);
        }
    }
    return coproduct(x).equals(expected);
}

// The group-like series whose shuffle character takes the given values on
// Lyndon words (missing entries are zero). Non-Lyndon words are resolved
// through the triangular Lyndon basis of the shuffle algebra.
template <CoefficientRing R>
NCSeries<R> character_series(const R& ring, int truncation, const std::map<Word, typename R::value_type>& assignments)
{
    if constexpr (!R::has_rational_scalars) {
        throw capability_error("character_series: ring " + ring.name() + " lacks rational scalars");
    } else {
        using value_type = typename R::value_type;
        NCSeries<R> f = NCSeries<R>::one(ring, truncation);
        for (int n = 1; n <= truncation; ++n) {
            for (const Word& w : words_of_weight(n)) {
                if (is_lyndon(w)) {
                    auto it = assignments.find(w);
                    if (it != assignments.end()) {
                        f.set(w, it->second);
                    }
                    continue;
                }
                const LyndonShuffleExpansion ex = lyndon_shuffle_expansion(w);
                value_type value = ring.one();
                for (const auto& [l, k] : ex.lyndon_powers) {
                    const value_type cl = f.coeff(l);
                    for (int i = 0; i < k; ++i) {
                        value = value * cl;
                    }
                }
                Rational lead = 0;
                for (const auto& [u, c] : ex.product.terms()) {
                    if (u == w) {
                        lead = c;
                    } else {
                        value = value - f.coeff(u) * ring.from_rational(c);
                    }
                }
                f.set(w, value * ring.from_rational(1 / lead));
            }
        }
        return f;
    }
}

// Values of f on Lyndon words of weight <= truncation.
template <CoefficientRing R>
std::map<Word, typename R::value_type> lyndon_coordinates(const NCSeries<R>& f)
{
    std::map<Word, typename R::value_type> out;
    for (const Word& l : lyndon_words(f.truncation())) {
        auto c = f.coeff(l);
        if (!f.ring().is_zero(c)) {
            out.emplace(l, c);
        }
    }
    return out;
}

template <CoefficientRing R>
NCSeries<R> commutator(const NCSeries<R>& x, const NCSeries<R>& y)
{
    return x * y - y * x;
}

// Standard bracketing P(l) of a Lyndon word, expanded in the free algebra.
template <CoefficientRing R>
NCSeries<R> lyndon_bracket(const R& ring, int truncation, const Word& l)
{
    if (l.weight() == 1) {
        return NCSeries<R>::letter(ring, truncation, l.front());
    }
    auto [u, v] = standard_factorization(l);
    return commutator(lyndon_bracket(ring, truncation, u), lyndon_bracket(ring, truncation, v));
}

// Coordinates of a Lie series in the Lyndon basis {P(l)}. P(l) = l + larger
// words of the same weight, so the smallest surviving word is peeled off
// repeatedly; throws inconsistent_data_error if the input is not Lie.
template <CoefficientRing R>
std::map<Word, typename R::value_type> lyndon_lie_coordinates(const NCSeries<R>& lie)
{
    std::map<Word, typename R::value_type> coords;
    NCSeries<R> rest = lie;
    const auto& ring = lie.ring();
    if (!ring.is_zero(rest.coeff(Word{}))) {
        throw inconsistent_data_error("lyndon_lie_coordinates: nonzero constant term");
    }
    while (!rest.terms().empty()) {
        auto [w, c] = *rest.terms().begin();
        if (ring.equal(c, ring.zero())) {
            rest.set(w, ring.zero());
            continue;
        }
        if (!is_lyndon(w)) {
            throw inconsistent_data_error("lyndon_lie_coordinates: not a Lie element (leading word " + w.str() + ")");
        }
        coords.emplace(w, c);
        rest -= lyndon_bracket(ring, lie.truncation(), w) * c;
        rest.set(w, ring.zero());
    }
    return coords;
}

} // namespace pmzv
