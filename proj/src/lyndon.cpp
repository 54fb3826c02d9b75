#include "pmzv/lyndon.hpp"

#include "pmzv/errors.hpp"

namespace pmzv {

bool is_lyndon(const Word& w)
{
    const int n = w.weight();
    if (n == 0) {
        return false;
    }
    // Lexicographic comparison of same-length words is comparison of bits.
    for (int i = 1; i < n; ++i) {
        const Word rot = w.drop_front(i) + w.prefix(i);
        if (!(w.bits() < rot.bits())) {
            return false;
        }
    }
    return true;
}

std::vector<Word> lyndon_factorization(const Word& w)
{
    std::vector<Word> out;
    const int n = w.weight();
    int i = 0;
    while (i < n) {
        int j = i + 1;
        int k = i;
        while (j < n && w.at(k) <= w.at(j)) {
            k = w.at(k) < w.at(j) ? i : k + 1;
            ++j;
        }
        while (i <= k) {
            out.push_back(w.sub(i, j - k));
            i += j - k;
        }
    }
    return out;
}

std::vector<Word> lyndon_words(int max_weight)
{
    std::vector<Word> out;
    for (int n = 1; n <= max_weight; ++n) {
        for (const Word& w : words_of_weight(n)) {
            if (is_lyndon(w)) {
                out.push_back(w);
            }
        }
    }
    return out;
}

std::pair<Word, Word> standard_factorization(const Word& lyndon)
{
    if (lyndon.weight() < 2 || !is_lyndon(lyndon)) {
        throw domain_error("standard_factorization: not a Lyndon word of weight >= 2");
    }
    for (int i = 1; i < lyndon.weight(); ++i) {
        const Word v = lyndon.drop_front(i);
        if (is_lyndon(v)) {
            return {lyndon.prefix(i), v};
        }
    }
    throw std::logic_error("standard_factorization: unreachable");
}

} // namespace pmzv
