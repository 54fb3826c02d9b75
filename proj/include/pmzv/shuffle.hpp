#pragma once

#include <map>
#include <string>
#include <vector>

#include "pmzv/errors.hpp"
#include "pmzv/index.hpp"
#include "pmzv/lincomb.hpp"
#include "pmzv/word.hpp"

namespace pmzv {

using WordCombination = LinearCombination<Word>;
using IndexCombination = LinearCombination<Index>;

// Sum over all order-preserving interleavings of u and v.
WordCombination shuffle_words(const Word& u, const Word& v);
WordCombination shuffle(const WordCombination& x, const WordCombination& y);

// Quasi-shuffle (harmonic) product of indices: interleave the tuples, the
// last entries may also merge by addition.
IndexCombination stuffle_indices(const Index& i, const Index& j);
IndexCombination stuffle(const IndexCombination& x, const IndexCombination& y);

// For a word with Lyndon factorization l1^{i1} ... lk^{ik}: the shuffle
// product l1^{sh i1} sh ... sh lk^{sh ik}. It equals (i1! ... ik!) w plus
// lexicographically smaller words of the same weight.
struct LyndonShuffleExpansion {
    std::vector<std::pair<Word, int>> lyndon_powers;
    WordCombination product;
};
LyndonShuffleExpansion lyndon_shuffle_expansion(const Word& w);

} // namespace pmzv
