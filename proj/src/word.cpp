#include "pmzv/word.hpp"

#include <ostream>

#include "pmzv/errors.hpp"

namespace pmzv {

Word Word::parse(std::string_view letters)
{
    if (letters.size() > static_cast<std::size_t>(max_weight)) {
        throw domain_error("Word: weight exceeds " + std::to_string(max_weight));
    }
    std::uint64_t bits = 0;
    for (char c : letters) {
        bits <<= 1U;
        if (c == 'B') {
            bits |= 1U;
        } else if (c != 'A') {
            throw parse_error("Word: invalid letter '" + std::string(1, c) + "'");
        }
    }
    return {static_cast<std::uint8_t>(letters.size()), bits};
}

Word Word::letter(Letter l) noexcept
{
    return {1, static_cast<std::uint64_t>(l)};
}

Word Word::power(Letter l, int n)
{
    if (n < 0 || n > max_weight) {
        throw domain_error("Word::power: exponent out of range");
    }
    const std::uint64_t bits = l == Letter::B ? ((std::uint64_t{1} << n) - 1) : 0;
    return {static_cast<std::uint8_t>(n), bits};
}

Letter Word::at(int i) const
{
    if (i < 0 || i >= len_) {
        throw std::out_of_range("Word::at");
    }
    return static_cast<Letter>((bits_ >> (len_ - 1 - i)) & 1U);
}

Word Word::sub(int pos, int n) const
{
    if (pos < 0 || n < 0 || pos + n > len_) {
        throw std::out_of_range("Word::sub");
    }
    const int shift = len_ - pos - n;
    const std::uint64_t mask = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    return {static_cast<std::uint8_t>(n), (bits_ >> shift) & mask};
}

int Word::count(Letter l) const noexcept
{
    const int b = __builtin_popcountll(bits_);
    return l == Letter::B ? b : len_ - b;
}

std::string Word::str() const
{
    std::string s;
    s.reserve(len_);
    for (int i = 0; i < len_; ++i) {
        s.push_back(at(i) == Letter::A ? 'A' : 'B');
    }
    return s;
}

Word operator+(const Word& u, const Word& v)
{
    if (u.len_ + v.len_ > Word::max_weight) {
        throw domain_error("Word: weight exceeds " + std::to_string(Word::max_weight));
    }
    return {static_cast<std::uint8_t>(u.len_ + v.len_), (u.bits_ << v.len_) | v.bits_};
}

std::ostream& operator<<(std::ostream& os, const Word& w)
{
    return os << (w.empty() ? std::string("1") : w.str());
}

std::vector<Word> words_of_weight(int weight)
{
    if (weight < 0 || weight > 30) {
        throw domain_error("words_of_weight: weight out of enumerable range");
    }
    std::vector<Word> out;
    out.reserve(std::size_t{1} << weight);
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << weight); ++b) {
        std::string s(static_cast<std::size_t>(weight), 'A');
        for (int i = 0; i < weight; ++i) {
            if ((b >> (weight - 1 - i)) & 1U) {
                s[static_cast<std::size_t>(i)] = 'B';
            }
        }
        out.push_back(Word::parse(s));
    }
    return out;
}

std::vector<Word> words_up_to(int max_weight)
{
    std::vector<Word> out;
    for (int n = 0; n <= max_weight; ++n) {
        auto ws = words_of_weight(n);
        out.insert(out.end(), ws.begin(), ws.end());
    }
    return out;
}

} // namespace pmzv
