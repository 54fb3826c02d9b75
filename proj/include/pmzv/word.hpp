#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace pmzv {

enum class Letter : std::uint8_t { A = 0, B = 1 };

// A monomial in the non-commuting letters A and B.
//
// Stored as a bit string (A = 0, B = 1) with the first letter in the most
// significant position, plus the length. With that layout the defaulted
// comparison orders words by weight first and then lexicographically with
// A < B, which is the canonical iteration order used everywhere.
class Word {
public:
    static constexpr int max_weight = 62;

    constexpr Word() noexcept = default;

    static Word parse(std::string_view letters);
    static Word letter(Letter l) noexcept;
    static Word power(Letter l, int n);

    [[nodiscard]] constexpr int weight() const noexcept { return len_; }
    [[nodiscard]] constexpr bool empty() const noexcept { return len_ == 0; }
    [[nodiscard]] constexpr std::uint64_t bits() const noexcept { return bits_; }

    [[nodiscard]] Letter at(int i) const;
    [[nodiscard]] Letter front() const { return at(0); }
    [[nodiscard]] Letter back() const { return at(len_ - 1); }

    // Letters [pos, pos + n).
    [[nodiscard]] Word sub(int pos, int n) const;
    [[nodiscard]] Word prefix(int n) const { return sub(0, n); }
    [[nodiscard]] Word drop_front(int n = 1) const { return sub(n, len_ - n); }
    [[nodiscard]] Word drop_back(int n = 1) const { return sub(0, len_ - n); }

    [[nodiscard]] int count(Letter l) const noexcept;

    [[nodiscard]] std::string str() const;

    friend Word operator+(const Word& u, const Word& v);

    friend constexpr auto operator<=>(const Word&, const Word&) noexcept = default;
    friend constexpr bool operator==(const Word&, const Word&) noexcept = default;

private:
    constexpr Word(std::uint8_t len, std::uint64_t bits) noexcept : len_(len), bits_(bits) {}

    std::uint8_t len_ = 0;
    std::uint64_t bits_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

// All words of exactly the given weight, in canonical order.
std::vector<Word> words_of_weight(int weight);
// All words of weight <= max_weight, in canonical order (empty word first).
std::vector<Word> words_up_to(int max_weight);

} // namespace pmzv
