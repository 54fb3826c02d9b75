#pragma once

#include <map>
#include <utility>

#include "pmzv/rational.hpp"

namespace pmzv {

// Finite exact-rational linear combination of keys; zero coefficients are
// never stored and iteration follows the key order.
template <class Key>
class LinearCombination {
public:
    using map_type = std::map<Key, Rational>;

    LinearCombination() = default;
    explicit LinearCombination(const Key& k, const Rational& c = 1) { add(k, c); }

    void add(const Key& k, const Rational& c)
    {
        if (c == 0) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    [[nodiscard]] Rational coeff(const Key& k) const
    {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    [[nodiscard]] const map_type& terms() const& noexcept { return terms_; }
    [[nodiscard]] map_type terms() && { return std::move(terms_); }
    [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }

    [[nodiscard]] Rational coefficient_sum() const
    {
        Rational s = 0;
        for (const auto& [k, c] : terms_) {
            s += c;
        }
        return s;
    }

    LinearCombination& operator+=(const LinearCombination& o)
    {
        for (const auto& [k, c] : o.terms_) {
            add(k, c);
        }
        return *this;
    }
    LinearCombination& operator-=(const LinearCombination& o)
    {
        for (const auto& [k, c] : o.terms_) {
            add(k, -c);
        }
        return *this;
    }
    LinearCombination& operator*=(const Rational& s)
    {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_) {
            c *= s;
        }
        return *this;
    }

    friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
    friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
    friend LinearCombination operator*(LinearCombination a, const Rational& s) { return a *= s; }
    friend LinearCombination operator*(const Rational& s, LinearCombination a) { return a *= s; }

    friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

private:
    map_type terms_;
};

} // namespace pmzv
