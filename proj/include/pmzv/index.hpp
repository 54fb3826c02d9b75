#pragma once

#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pmzv/word.hpp"

namespace pmzv {

// A multiple-zeta index (k1, ..., km), summed as 0 < n1 < ... < nm.
class Index {
public:
    Index() = default;
    Index(std::initializer_list<int> entries);
    explicit Index(std::vector<int> entries);

    // "1,2" or "(1,2)" or "[1,2]"; the empty string is the empty index.
    static Index parse(std::string_view text);

    [[nodiscard]] const std::vector<int>& entries() const noexcept { return k_; }
    [[nodiscard]] int depth() const noexcept { return static_cast<int>(k_.size()); }
    [[nodiscard]] int weight() const noexcept;
    [[nodiscard]] bool empty() const noexcept { return k_.empty(); }
    // Last entry >= 2; the empty index is not admissible.
    [[nodiscard]] bool admissible() const noexcept { return !k_.empty() && k_.back() >= 2; }

    [[nodiscard]] int operator[](int i) const { return k_.at(static_cast<std::size_t>(i)); }
    [[nodiscard]] int back() const { return k_.back(); }

    [[nodiscard]] Index drop_back() const;
    [[nodiscard]] Index with_back(int k) const;
    [[nodiscard]] Index appended(int k) const;

    // "1,2"
    [[nodiscard]] std::string str() const;

    friend auto operator<=>(const Index&, const Index&) = default;
    friend bool operator==(const Index&, const Index&) = default;

private:
    std::vector<int> k_;
};

std::ostream& operator<<(std::ostream& os, const Index& i);

// Index (k1..km) <-> word A^{km-1}B ... A^{k1-1}B, sign (-1)^m.
struct SignedWord {
    Word word;
    int sign;
};
SignedWord word_of_index(const Index& i);
// Defined on words ending in B (and on the empty word, giving the empty
// index); throws domain_error otherwise.
Index index_of_word(const Word& w);

// Starts with A and ends with B: the words whose coefficients in an
// associator are the convergent zeta values.
bool is_convergent(const Word& w);

// All admissible indices of the given weight, ordered by depth then entries.
std::vector<Index> admissible_indices(int weight);

} // namespace pmzv
