#include "pmzv/padic.hpp"

#include <algorithm>
#include <ostream>

#include "pmzv/errors.hpp"

namespace pmzv {

namespace {

void check_same_prime(const PadicNumber& a, const PadicNumber& b)
{
    if (a.prime() != b.prime()) {
        throw ring_mismatch_error("p-adic numbers over different primes");
    }
}

// v_p(n) for a nonzero integer, and strips those factors.
long strip(unsigned long p, Integer& n)
{
    if (n == 0) {
        return 0;
    }
    Integer pz(p);
    return static_cast<long>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
}

} // namespace

long floor_log(unsigned long p, long n)
{
    long k = 0;
    for (long m = n; m >= static_cast<long>(p); m /= static_cast<long>(p)) {
        ++k;
    }
    return k;
}

Integer PadicNumber::prime_power(unsigned long p, long e)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, static_cast<unsigned long>(std::max(0L, e)));
    return r;
}

PadicNumber::PadicNumber(unsigned long p, long absprec) : p_(p), val_(absprec), rel_(0), unit_(0) {}

PadicNumber::PadicNumber(unsigned long p, long val, long rel, Integer unit)
    : p_(p), val_(val), rel_(rel), unit_(std::move(unit))
{
    normalize();
}

void PadicNumber::normalize()
{
    if (rel_ <= 0) {
        val_ += rel_;
        rel_ = 0;
        unit_ = 0;
        return;
    }
    const Integer mod = prime_power(p_, rel_);
    mpz_mod(unit_.get_mpz_t(), unit_.get_mpz_t(), mod.get_mpz_t());
    if (unit_ == 0) {
        val_ += rel_;
        rel_ = 0;
        return;
    }
    const long k = strip(p_, unit_);
    val_ += k;
    rel_ -= k;
}

PadicNumber PadicNumber::from_rational(unsigned long p, const Rational& q, long absprec)
{
    if (q == 0) {
        return PadicNumber(p, absprec);
    }
    Integer num = q.get_num();
    Integer den = q.get_den();
    const long v = strip(p, num) - strip(p, den);
    const long rel = absprec - v;
    if (rel <= 0) {
        return PadicNumber(p, absprec);
    }
    const Integer mod = prime_power(p, rel);
    Integer inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
    return PadicNumber(p, v, rel, Integer(num * inv));
}

Rational PadicNumber::representative() const
{
    if (is_zero()) {
        return 0;
    }
    if (val_ >= 0) {
        return Rational(unit_ * prime_power(p_, val_));
    }
    return Rational(unit_, prime_power(p_, -val_));
}

PadicNumber PadicNumber::with_precision(long absprec) const
{
    if (absprec >= absolute_precision()) {
        return *this;
    }
    if (is_zero() || absprec <= val_) {
        return PadicNumber(p_, absprec);
    }
    return PadicNumber(p_, val_, absprec - val_, unit_);
}

std::string PadicNumber::expansion() const
{
    const std::string ps = std::to_string(p_);
    std::string s;
    Integer u = unit_;
    long e = val_;
    const Integer pz(p_);
    while (u != 0) {
        Integer d;
        mpz_fdiv_qr(u.get_mpz_t(), d.get_mpz_t(), u.get_mpz_t(), pz.get_mpz_t());
        if (d != 0) {
            if (!s.empty()) {
                s += " + ";
            }
            s += d.get_str();
            if (e == 1) {
                s += "*" + ps;
            } else if (e != 0) {
                s += "*" + ps + "^" + std::to_string(e);
            }
        }
        ++e;
    }
    if (!s.empty()) {
        s += " + ";
    }
    return s + "O(" + ps + "^" + std::to_string(absolute_precision()) + ")";
}

std::string PadicNumber::str() const
{
    return to_string(representative()) + "+O(" + std::to_string(p_) + "^" + std::to_string(absolute_precision()) + ")";
}

PadicNumber PadicNumber::parse(unsigned long p, const std::string& text)
{
    const auto at = text.find("+O(");
    if (at == std::string::npos || text.back() != ')') {
        // A bare rational is read at the default working precision.
        return from_rational(p, parse_rational(text), 30);
    }
    const Rational rep = parse_rational(text.substr(0, at));
    const std::string big = text.substr(at + 3, text.size() - at - 4);
    const auto caret = big.find('^');
    if (caret == std::string::npos || big.substr(0, caret) != std::to_string(p)) {
        throw parse_error("PadicNumber: malformed precision term in '" + text + "'");
    }
    long k = 0;
    try {
        k = std::stol(big.substr(caret + 1));
    } catch (const std::exception&) {
        throw parse_error("PadicNumber: malformed precision term in '" + text + "'");
    }
    return from_rational(p, rep, k);
}

PadicNumber PadicNumber::pow(unsigned long n) const
{
    PadicNumber result = from_integer(p_, 1, std::max(rel_, 1L));
    if (n == 0) {
        return result;
    }
    PadicNumber base = *this;
    bool first = true;
    while (n > 0) {
        if ((n & 1U) != 0U) {
            result = first ? base : result * base;
            first = false;
        }
        n >>= 1U;
        if (n > 0) {
            base = base * base;
        }
    }
    return result;
}

PadicNumber PadicNumber::operator-() const
{
    if (is_zero()) {
        return *this;
    }
    return PadicNumber(p_, val_, rel_, Integer(-unit_));
}

PadicNumber operator+(const PadicNumber& a, const PadicNumber& b)
{
    check_same_prime(a, b);
    const long absprec = std::min(a.absolute_precision(), b.absolute_precision());
    const long v = std::min(a.val_, b.val_);
    if (v >= absprec) {
        return PadicNumber(a.p_, absprec);
    }
    const Integer x = a.unit_ * PadicNumber::prime_power(a.p_, a.val_ - v) +
                      b.unit_ * PadicNumber::prime_power(a.p_, b.val_ - v);
    return PadicNumber(a.p_, v, absprec - v, x);
}

PadicNumber operator-(const PadicNumber& a, const PadicNumber& b)
{
    return a + (-b);
}

PadicNumber operator*(const PadicNumber& a, const PadicNumber& b)
{
    check_same_prime(a, b);
    if (a.is_zero() || b.is_zero()) {
        return PadicNumber(a.p_, a.val_ + b.val_);
    }
    return PadicNumber(a.p_, a.val_ + b.val_, std::min(a.rel_, b.rel_), Integer(a.unit_ * b.unit_));
}

PadicNumber operator/(const PadicNumber& a, const PadicNumber& b)
{
    check_same_prime(a, b);
    if (b.is_zero()) {
        throw domain_error("PadicNumber: division by an element with no known nonzero digit");
    }
    if (a.is_zero()) {
        return PadicNumber(a.p_, a.val_ - b.val_);
    }
    const long rel = std::min(a.rel_, b.rel_);
    const Integer mod = PadicNumber::prime_power(a.p_, rel);
    Integer inv;
    mpz_invert(inv.get_mpz_t(), b.unit_.get_mpz_t(), mod.get_mpz_t());
    return PadicNumber(a.p_, a.val_ - b.val_, rel, Integer(a.unit_ * inv));
}

bool operator==(const PadicNumber& a, const PadicNumber& b)
{
    return (a - b).is_zero();
}

std::ostream& operator<<(std::ostream& os, const PadicNumber& x)
{
    return os << x.str();
}

bool is_prime(unsigned long n)
{
    if (n < 2) {
        return false;
    }
    for (unsigned long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

long padic_valuation(unsigned long p, const Rational& q)
{
    if (q == 0) {
        throw domain_error("padic_valuation: zero has infinite valuation");
    }
    Integer num = q.get_num();
    Integer den = q.get_den();
    return strip(p, num) - strip(p, den);
}

PadicNumber teichmuller(const PadicNumber& unit)
{
    if (unit.is_zero() || unit.valuation() != 0) {
        throw domain_error("teichmuller: argument must be a unit");
    }
    const unsigned long p = unit.prime();
    const long n = unit.relative_precision();
    if (p == 2) {
        const Integer m4 = unit.unit() % 4;
        return PadicNumber::from_integer(p, m4 == 1 ? 1 : -1, n);
    }
    Integer mod;
    mpz_ui_pow_ui(mod.get_mpz_t(), p, static_cast<unsigned long>(n));
    Integer w = unit.unit();
    const Integer pz(p);
    // w <- w^p converges to the root of unity congruent to u, one digit per step.
    for (long i = 0; i < n; ++i) {
        mpz_powm(w.get_mpz_t(), w.get_mpz_t(), pz.get_mpz_t(), mod.get_mpz_t());
    }
    return PadicNumber::from_rational(p, Rational(w), n);
}

PadicNumber padic_log(const PadicNumber& z, const PadicNumber& branch)
{
    if (z.is_zero()) {
        throw domain_error("padic_log: zero argument");
    }
    const unsigned long p = z.prime();
    const long v = z.valuation();
    const long rel = z.relative_precision();
    const PadicNumber u0 = PadicNumber::from_rational(p, Rational(z.unit()), rel);
    const PadicNumber u = u0 / teichmuller(u0);
    const PadicNumber x = u - PadicNumber::from_integer(p, 1, rel);
    PadicNumber sum(p, rel);
    if (!x.is_zero()) {
        const long vx = x.valuation();
        const long target = x.absolute_precision();
        PadicNumber power = x;
        int quiet = 0;
        for (long n = 1;; ++n) {
            const PadicNumber inv_n = PadicNumber::from_rational(
                p, Rational(n % 2 == 1 ? 1 : -1, n), padic_valuation(p, Rational(1, n)) + target + 2);
            const PadicNumber term = power * inv_n;
            sum = sum + term;
            const long tv = term.is_zero() ? target : term.valuation();
            quiet = tv >= target ? quiet + 1 : 0;
            // n*vx - floor(log_p n) bounds every later term from below and is nondecreasing.
            if (quiet >= 10 && n * vx - floor_log(p, n) >= target) {
                break;
            }
            power = power * x;
        }
        sum = sum.with_precision(target);
    }
    PadicNumber result = sum;
    if (v != 0) {
        result = result + PadicNumber::from_integer(p, v, branch.absolute_precision() + 64) * branch;
    }
    return result;
}

} // namespace pmzv
