#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <optional>
#include <string>

#include "pmzv/errors.hpp"
#include "pmzv/padic.hpp"
#include "pmzv/rational.hpp"
#include "pmzv/symbol_poly.hpp"

namespace pmzv {

// Coefficient-ring contract used by the series types. A ring object
// identifies the ring (and carries its parameters, e.g. the prime); values
// use the ordinary arithmetic operators.
template <class R>
concept CoefficientRing = std::equality_comparable<R> &&
    requires(const R& r, const typename R::value_type& x, long n) {
        { R::has_rational_scalars } -> std::convertible_to<bool>;
        { r.zero() } -> std::same_as<typename R::value_type>;
        { r.one() } -> std::same_as<typename R::value_type>;
        { r.from_integer(n) } -> std::same_as<typename R::value_type>;
        { r.is_zero(x) } -> std::same_as<bool>;
        { r.equal(x, x) } -> std::same_as<bool>;
        { r.name() } -> std::convertible_to<std::string>;
        { r.format(x) } -> std::convertible_to<std::string>;
        { r.inverse(x) } -> std::same_as<std::optional<typename R::value_type>>;
    };

template <class R>
concept RationalAlgebra = CoefficientRing<R> && R::has_rational_scalars &&
    requires(const R& r, const Rational& q) {
        { r.from_rational(q) } -> std::same_as<typename R::value_type>;
    };

struct RationalRing {
    using value_type = Rational;
    static constexpr bool has_rational_scalars = true;

    [[nodiscard]] value_type zero() const { return 0; }
    [[nodiscard]] value_type one() const { return 1; }
    [[nodiscard]] value_type from_integer(long n) const { return n; }
    [[nodiscard]] value_type from_rational(const Rational& q) const { return q; }
    [[nodiscard]] bool is_zero(const value_type& x) const { return x == 0; }
    [[nodiscard]] bool equal(const value_type& a, const value_type& b) const { return a == b; }
    [[nodiscard]] std::string name() const { return "rational"; }
    [[nodiscard]] std::string format(const value_type& x) const { return to_string(x); }
    [[nodiscard]] value_type parse(const std::string& s) const { return parse_rational(s); }
    [[nodiscard]] std::optional<value_type> inverse(const value_type& x) const
    {
        if (x == 0) {
            return std::nullopt;
        }
        return 1 / x;
    }

    friend bool operator==(const RationalRing&, const RationalRing&) = default;
};

// The integers: a ring without rational scalars, so exp/log and the
// character construction refuse it.
struct IntegerRing {
    using value_type = Integer;
    static constexpr bool has_rational_scalars = false;

    [[nodiscard]] value_type zero() const { return 0; }
    [[nodiscard]] value_type one() const { return 1; }
    [[nodiscard]] value_type from_integer(long n) const { return n; }
    [[nodiscard]] bool is_zero(const value_type& x) const { return x == 0; }
    [[nodiscard]] bool equal(const value_type& a, const value_type& b) const { return a == b; }
    [[nodiscard]] std::string name() const { return "integer"; }
    [[nodiscard]] std::string format(const value_type& x) const { return to_string(x); }
    [[nodiscard]] std::optional<value_type> inverse(const value_type& x) const
    {
        if (x == 1 || x == -1) {
            return x;
        }
        return std::nullopt;
    }

    friend bool operator==(const IntegerRing&, const IntegerRing&) = default;
};

struct SymbolRing {
    using value_type = SymbolPoly;
    static constexpr bool has_rational_scalars = true;

    [[nodiscard]] value_type zero() const { return {}; }
    [[nodiscard]] value_type one() const { return SymbolPoly(1); }
    [[nodiscard]] value_type from_integer(long n) const { return SymbolPoly(n); }
    [[nodiscard]] value_type from_rational(const Rational& q) const { return SymbolPoly(q); }
    [[nodiscard]] bool is_zero(const value_type& x) const { return x.is_zero(); }
    [[nodiscard]] bool equal(const value_type& a, const value_type& b) const { return a == b; }
    [[nodiscard]] std::string name() const { return "symbolic"; }
    [[nodiscard]] std::string format(const value_type& x) const { return x.str(); }
    [[nodiscard]] value_type parse(const std::string& s) const { return SymbolPoly::parse(s); }
    [[nodiscard]] std::optional<value_type> inverse(const value_type& x) const
    {
        if (!x.is_constant() || x.is_zero()) {
            return std::nullopt;
        }
        return SymbolPoly(1 / x.constant_term());
    }

    friend bool operator==(const SymbolRing&, const SymbolRing&) = default;
};

// Q_p at a fixed absolute precision.
struct PadicField {
    unsigned long p = 5;
    long precision = 30;

    PadicField() = default;
    PadicField(unsigned long prime, long prec) : p(prime), precision(prec)
    {
        if (!is_prime(prime)) {
            throw domain_error("PadicField: " + std::to_string(prime) + " is not prime");
        }
        if (prec < 1) {
            throw domain_error("PadicField: precision must be positive");
        }
    }

    using value_type = PadicNumber;
    static constexpr bool has_rational_scalars = true;

    [[nodiscard]] value_type zero() const { return PadicNumber(p, precision); }
    [[nodiscard]] value_type one() const { return PadicNumber::from_integer(p, 1, precision); }
    [[nodiscard]] value_type from_integer(long n) const { return PadicNumber::from_integer(p, n, precision); }
    [[nodiscard]] value_type from_rational(const Rational& q) const
    {
        return PadicNumber::from_rational(p, q, precision);
    }
    [[nodiscard]] bool is_zero(const value_type& x) const { return x.is_zero(); }
    [[nodiscard]] bool equal(const value_type& a, const value_type& b) const { return a == b; }
    [[nodiscard]] std::string name() const
    {
        return "padic(" + std::to_string(p) + "," + std::to_string(precision) + ")";
    }
    [[nodiscard]] std::string format(const value_type& x) const { return x.str(); }
    [[nodiscard]] value_type parse(const std::string& s) const { return PadicNumber::parse(p, s); }
    [[nodiscard]] std::optional<value_type> inverse(const value_type& x) const
    {
        if (x.is_zero()) {
            return std::nullopt;
        }
        return one() / x;
    }

    friend bool operator==(const PadicField&, const PadicField&) = default;
};

using Complex = std::complex<double>;

// Double-precision complex numbers. Only exact zeros are dropped from
// storage; equal() compares with the explicit absolute tolerance carried by
// the ring object.
struct ComplexField {
    double tolerance = 1e-9;

    using value_type = Complex;
    static constexpr bool has_rational_scalars = true;

    [[nodiscard]] value_type zero() const { return {0.0, 0.0}; }
    [[nodiscard]] value_type one() const { return {1.0, 0.0}; }
    [[nodiscard]] value_type from_integer(long n) const { return {static_cast<double>(n), 0.0}; }
    [[nodiscard]] value_type from_rational(const Rational& q) const { return {q.get_d(), 0.0}; }
    [[nodiscard]] bool is_zero(const value_type& x) const { return x == value_type{}; }
    [[nodiscard]] bool equal(const value_type& a, const value_type& b) const
    {
        return std::abs(a - b) <= tolerance;
    }
    [[nodiscard]] std::string name() const { return "complex"; }
    [[nodiscard]] std::string format(const value_type& x) const;
    [[nodiscard]] value_type parse(const std::string& s) const;
    [[nodiscard]] std::optional<value_type> inverse(const value_type& x) const
    {
        if (x == value_type{}) {
            return std::nullopt;
        }
        return 1.0 / x;
    }

    // Tolerance is evaluation context, not ring identity.
    friend bool operator==(const ComplexField&, const ComplexField&) { return true; }
};

std::string format_complex(const Complex& x);
Complex parse_complex(const std::string& text);

inline std::string ComplexField::format(const value_type& x) const { return format_complex(x); }
inline ComplexField::value_type ComplexField::parse(const std::string& s) const { return parse_complex(s); }

} // namespace pmzv
