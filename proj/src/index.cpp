#include "pmzv/index.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "pmzv/errors.hpp"

namespace pmzv {

Index::Index(std::initializer_list<int> entries) : Index(std::vector<int>(entries)) {}

Index::Index(std::vector<int> entries) : k_(std::move(entries))
{
    for (int k : k_) {
        if (k < 1) {
            throw domain_error("Index: entries must be positive");
        }
    }
}

Index Index::parse(std::string_view text)
{
    std::string s;
    for (char c : text) {
        if (c != ' ' && c != '(' && c != ')' && c != '[' && c != ']') {
            s.push_back(c);
        }
    }
    std::vector<int> k;
    if (s.empty()) {
        return Index{};
    }
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const std::size_t comma = s.find(',', pos);
        const std::string part = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (part.empty() || part.size() > 4 || part.find_first_not_of("0123456789") != std::string::npos) {
            throw parse_error("Index: malformed entry in '" + std::string(text) + "'");
        }
        k.push_back(std::stoi(part));
        if (comma == std::string::npos) {
            break;
        }
        pos = comma + 1;
    }
    return Index(std::move(k));
}

int Index::weight() const noexcept
{
    return std::accumulate(k_.begin(), k_.end(), 0);
}

Index Index::drop_back() const
{
    return Index(std::vector<int>(k_.begin(), k_.end() - 1));
}

Index Index::with_back(int k) const
{
    std::vector<int> e = k_;
    e.back() = k;
    return Index(std::move(e));
}

Index Index::appended(int k) const
{
    std::vector<int> e = k_;
    e.push_back(k);
    return Index(std::move(e));
}

std::string Index::str() const
{
    std::string s;
    for (std::size_t i = 0; i < k_.size(); ++i) {
        if (i > 0) {
            s.push_back(',');
        }
        s += std::to_string(k_[i]);
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Index& i)
{
    return os << '(' << i.str() << ')';
}

SignedWord word_of_index(const Index& i)
{
    Word w;
    for (int j = i.depth() - 1; j >= 0; --j) {
        w = w + Word::power(Letter::A, i[j] - 1) + Word::letter(Letter::B);
    }
    return {w, i.depth() % 2 == 0 ? 1 : -1};
}

Index index_of_word(const Word& w)
{
    if (w.empty()) {
        return Index{};
    }
    if (w.back() != Letter::B) {
        throw domain_error("index_of_word: word " + w.str() + " does not end in B");
    }
    std::vector<int> blocks;
    int run = 0;
    for (int i = 0; i < w.weight(); ++i) {
        ++run;
        if (w.at(i) == Letter::B) {
            blocks.push_back(run);
            run = 0;
        }
    }
    return Index(std::vector<int>(blocks.rbegin(), blocks.rend()));
}

bool is_convergent(const Word& w)
{
    return w.weight() >= 2 && w.front() == Letter::A && w.back() == Letter::B;
}

namespace {

void compositions(int remaining, std::vector<int>& prefix, std::vector<std::vector<int>>& out)
{
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    for (int k = 1; k <= remaining; ++k) {
        prefix.push_back(k);
        compositions(remaining - k, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Index> admissible_indices(int weight)
{
    std::vector<std::vector<int>> all;
    std::vector<int> prefix;
    compositions(weight, prefix, all);
    std::vector<Index> out;
    for (auto& c : all) {
        if (!c.empty() && c.back() >= 2) {
            out.emplace_back(std::move(c));
        }
    }
    std::sort(out.begin(), out.end(), [](const Index& a, const Index& b) {
        if (a.depth() != b.depth()) {
            return a.depth() < b.depth();
        }
        return a.entries() < b.entries();
    });
    return out;
}

} // namespace pmzv
