#pragma once

#include <iosfwd>
#include <string>

#include "pmzv/rational.hpp"

namespace pmzv {

// p-adic number known modulo p^absolute_precision.
//
// Nonzero values are p^v * u with u a unit known modulo p^r (r the relative
// precision). A value with no known nonzero digit is an inexact zero
// O(p^k). Arithmetic propagates precision pessimistically; equality is
// equality modulo p^min(absolute precisions).
class PadicNumber {
public:
    // O(p^absprec).
    PadicNumber(unsigned long p, long absprec);

    static PadicNumber from_rational(unsigned long p, const Rational& q, long absprec);
    static PadicNumber from_integer(unsigned long p, long n, long absprec)
    {
        return from_rational(p, Rational(n), absprec);
    }

    [[nodiscard]] unsigned long prime() const noexcept { return p_; }
    [[nodiscard]] bool is_zero() const noexcept { return rel_ == 0; }
    // For an inexact zero this is its absolute precision.
    [[nodiscard]] long valuation() const noexcept { return val_; }
    [[nodiscard]] long relative_precision() const noexcept { return rel_; }
    [[nodiscard]] long absolute_precision() const noexcept { return val_ + rel_; }
    [[nodiscard]] const Integer& unit() const noexcept { return unit_; }

    // p^v * u with 0 <= u < p^r.
    [[nodiscard]] Rational representative() const;
    [[nodiscard]] PadicNumber with_precision(long absprec) const;

    // "3 + 2*5 + 4*5^2 + O(5^4)", digits in [0, p).
    [[nodiscard]] std::string expansion() const;
    // "<representative>+O(p^k)", parseable by parse().
    [[nodiscard]] std::string str() const;
    static PadicNumber parse(unsigned long p, const std::string& text);

    [[nodiscard]] PadicNumber pow(unsigned long n) const;

    PadicNumber operator-() const;
    friend PadicNumber operator+(const PadicNumber& a, const PadicNumber& b);
    friend PadicNumber operator-(const PadicNumber& a, const PadicNumber& b);
    friend PadicNumber operator*(const PadicNumber& a, const PadicNumber& b);
    friend PadicNumber operator/(const PadicNumber& a, const PadicNumber& b);
    friend bool operator==(const PadicNumber& a, const PadicNumber& b);

private:
    PadicNumber(unsigned long p, long val, long rel, Integer unit);
    void normalize();
    static Integer prime_power(unsigned long p, long e);

    unsigned long p_;
    long val_;
    long rel_;
    Integer unit_;
};

std::ostream& operator<<(std::ostream& os, const PadicNumber& x);

bool is_prime(unsigned long n);
// v_p of a nonzero rational.
long padic_valuation(unsigned long p, const Rational& q);

// Teichmuller representative of a unit (for p = 2: the sign +-1 making
// u / omega = 1 mod 4).
PadicNumber teichmuller(const PadicNumber& unit);

// Iwasawa-type logarithm with branch log(p) = branch:
//   z = p^v * omega * u,  log z = v * branch + sum_{n>=1} (-1)^{n+1} (u-1)^n / n.
PadicNumber padic_log(const PadicNumber& z, const PadicNumber& branch);

// floor(log_p n) for n >= 1.
long floor_log(unsigned long p, long n);

} // namespace pmzv
