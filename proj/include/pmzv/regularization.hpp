#pragma once

#include <functional>
#include <map>
#include <string>

#include "pmzv/errors.hpp"
#include "pmzv/index.hpp"
#include "pmzv/rings.hpp"
#include "pmzv/series.hpp"
#include "pmzv/shuffle.hpp"
#include "pmzv/word.hpp"

namespace pmzv {

// Extends values on convergent words (start with A, end with B) and the two
// letters to the unique shuffle character on all words.
//
// Words B^r W are resolved through B sh (B^{r-1} W) = r B^r W + words with a
// shorter leading B-run; words W A^s (W starting with A) through
// (W A^{s-1}) sh A = s W A^s + words with a shorter trailing A-run.
template <RationalAlgebra R>
class CharacterExtender {
public:
    using value_type = typename R::value_type;
    using Known = std::function<value_type(const Word&)>;

    CharacterExtender(R ring, Known known, value_type c_a, value_type c_b)
        : ring_(std::move(ring)), known_(std::move(known)), c_a_(std::move(c_a)), c_b_(std::move(c_b))
    {
    }

    value_type operator()(const Word& w)
    {
        if (w.empty()) {
            return ring_.one();
        }
        if (auto it = memo_.find(w); it != memo_.end()) {
            return it->second;
        }
        value_type v = compute(w);
        memo_.emplace(w, v);
        return v;
    }

private:
    value_type compute(const Word& w)
    {
        if (w.weight() == 1) {
            return w.front() == Letter::A ? c_a_ : c_b_;
        }
        if (is_convergent(w)) {
            return known_(w);
        }
        const bool leading_b = w.front() == Letter::B;
        const Word rest = leading_b ? w.drop_front() : w.drop_back();
        const value_type letter = leading_b ? c_b_ : c_a_;
        const WordCombination sh = shuffle_words(leading_b ? Word::letter(Letter::B) : Word::letter(Letter::A), rest);
        value_type acc = letter * (*this)(rest);
        Rational lead = 0;
        for (const auto& [t, c] : sh.terms()) {
            if (t == w) {
                lead = c;
            } else {
                acc = acc - ring_.from_rational(c) * (*this)(t);
            }
        }
        return acc * ring_.from_rational(1 / lead);
    }

    R ring_;
    Known known_;
    value_type c_a_;
    value_type c_b_;
    std::map<Word, value_type> memo_;
};

// Checks shuffle multiplicativity among the convergent words of weight <= n.
template <RationalAlgebra R>
void check_convergent_consistency(const R& ring, const std::map<Word, typename R::value_type>& known, int n)
{
    using value_type = typename R::value_type;
    auto get = [&](const Word& w) {
        auto it = known.find(w);
        return it == known.end() ? ring.zero() : it->second;
    };
    std::vector<Word> conv;
    for (const Word& w : words_up_to(n)) {
        if (is_convergent(w)) {
            conv.push_back(w);
        }
    }
    for (std::size_t i = 0; i < conv.size(); ++i) {
        for (std::size_t j = i; j < conv.size(); ++j) {
            if (conv[i].weight() + conv[j].weight() > n) {
                continue;
            }
            value_type rhs = ring.zero();
            for (const auto& [t, c] : shuffle_words(conv[i], conv[j]).terms()) {
                rhs = rhs + ring.from_rational(c) * get(t);
            }
            if (!ring.equal(get(conv[i]) * get(conv[j]), rhs)) {
                throw inconsistent_data_error("scottland_recover: shuffle relation " + conv[i].str() + " x " +
                                              conv[j].str() + " violated");
            }
        }
    }
}

// Full coefficient series from convergent-word data and letter values.
// With check = false the data is taken as free symbols (used for the zeta
// symbols of the double shuffle generator, which only satisfy shuffle
// relations modulo the relations being generated).
template <RationalAlgebra R>
NCSeries<R> scottland_recover(const R& ring, const std::map<Word, typename R::value_type>& known,
                              const typename R::value_type& c_a, const typename R::value_type& c_b, int n,
                              bool check = true)
{
    if (check) {
        check_convergent_consistency(ring, known, n);
    }
    CharacterExtender<R> ext(
        ring,
        [&](const Word& w) {
            auto it = known.find(w);
            return it == known.end() ? ring.zero() : it->second;
        },
        c_a, c_b);
    NCSeries<R> out(ring, n);
    for (const Word& w : words_up_to(n)) {
        out.set(w, ext(w));
    }
    return out;
}

} // namespace pmzv
