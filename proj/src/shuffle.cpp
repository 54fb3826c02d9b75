#include "pmzv/shuffle.hpp"

#include "pmzv/lyndon.hpp"

namespace pmzv {


// Recursion on the first letters: au sh bv = a(u sh bv) + b(au sh v).
WordCombination shuffle_words(const Word& u, const Word& v)
{
    if (u.empty()) {
        return WordCombination(v);
    }
    if (v.empty()) {
        return WordCombination(u);
    }
    WordCombination out;
    const Word a = u.prefix(1);
    const Word b = v.prefix(1);
    for (const auto& [w, c] : shuffle_words(u.drop_front(), v).terms()) {
        out.add(a + w, c);
    }
    for (const auto& [w, c] : shuffle_words(u, v.drop_front()).terms()) {
        out.add(b + w, c);
    }
    return out;
}

WordCombination shuffle(const WordCombination& x, const WordCombination& y)
{
    WordCombination out;
    for (const auto& [u, cu] : x.terms()) {
        for (const auto& [v, cv] : y.terms()) {
            out += shuffle_words(u, v) * (cu * cv);
        }
    }
    return out;
}

// Recursion on the last entries: (i,a)*(j,b) = ((i)*(j,b),a) + ((i,a)*(j),b) + ((i)*(j),a+b).
IndexCombination stuffle_indices(const Index& i, const Index& j)
{
    if (i.empty()) {
        return IndexCombination(j);
    }
    if (j.empty()) {
        return IndexCombination(i);
    }
    IndexCombination out;
    const Index i0 = i.drop_back();
    const Index j0 = j.drop_back();
    for (const auto& [t, c] : stuffle_indices(i0, j).terms()) {
        out.add(t.appended(i.back()), c);
    }
    for (const auto& [t, c] : stuffle_indices(i, j0).terms()) {
        out.add(t.appended(j.back()), c);
    }
    for (const auto& [t, c] : stuffle_indices(i0, j0).terms()) {
        out.add(t.appended(i.back() + j.back()), c);
    }
    return out;
}

IndexCombination stuffle(const IndexCombination& x, const IndexCombination& y)
{
    IndexCombination out;
    for (const auto& [u, cu] : x.terms()) {
        for (const auto& [v, cv] : y.terms()) {
            out += stuffle_indices(u, v) * (cu * cv);
        }
    }
    return out;
}

LyndonShuffleExpansion lyndon_shuffle_expansion(const Word& w)
{
    LyndonShuffleExpansion ex;
    for (const Word& l : lyndon_factorization(w)) {
        if (!ex.lyndon_powers.empty() && ex.lyndon_powers.back().first == l) {
            ++ex.lyndon_powers.back().second;
        } else {
            ex.lyndon_powers.emplace_back(l, 1);
        }
    }
    ex.product = WordCombination(Word{});
    for (const auto& [l, k] : ex.lyndon_powers) {
        for (int i = 0; i < k; ++i) {
            ex.product = shuffle(ex.product, WordCombination(l));
        }
    }
    return ex;
}

} // namespace pmzv
