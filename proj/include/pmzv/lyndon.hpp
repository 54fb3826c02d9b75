#pragma once

#include <utility>
#include <vector>

#include "pmzv/word.hpp"

namespace pmzv {

// Strictly smaller than each of its proper rotations (A < B).
bool is_lyndon(const Word& w);

// Duval's algorithm: w = l1 l2 ... lk with l1 >= l2 >= ... >= lk Lyndon.
std::vector<Word> lyndon_factorization(const Word& w);

// Lyndon words of weight 1..max_weight in canonical order.
std::vector<Word> lyndon_words(int max_weight);

// Standard factorization l = u v of a Lyndon word of weight >= 2, where v is
// the longest proper Lyndon suffix. The bracketing P(l) = [P(u), P(v)] gives
// the Lyndon basis of the free Lie algebra.
std::pair<Word, Word> standard_factorization(const Word& lyndon);

} // namespace pmzv
