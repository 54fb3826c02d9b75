#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pmzv/index.hpp"
#include "pmzv/rational.hpp"
#include "pmzv/word.hpp"

namespace pmzv {

enum class GeneratorKind : std::uint8_t { zeta, li, log, lambda };
enum class ZetaFlavor : std::uint8_t { complex, padic, padic_deligne };
enum class LiFlavor : std::uint8_t { plain, dagger, minus };
enum class LiArg : std::uint8_t { z, z_pow_p, z_conj };
enum class LogArg : std::uint8_t { z, z_pow_p, z_conj, one_minus_z, one_minus_z_conj, abs_z_sq };

// A commuting generator of the symbolic coefficient ring.
//
//   zeta[2,3]  zeta_p[2,3]  zetaDe_p[2]      zeta symbols
//   Li[1,2](z) Lidag[2](z^p) Liminus[3](zbar) polylog symbols
//   log(z) log(z^p) log(zbar) log(1-z) log(1-zbar) log|z|^2
//   lambda_KZ{AAB}                            free character coordinates
//
// Indices are held through their word encoding, so the whole generator is a
// trivially comparable value.
class Generator {
public:
    static Generator zeta(ZetaFlavor flavor, const Index& index);
    static Generator li(LiFlavor flavor, const Index& index, LiArg arg);
    static Generator log(LogArg arg);
    // Tags are 1..8 characters from [A-Za-z0-9].
    static Generator lambda(std::string_view tag, const Word& word);

    [[nodiscard]] GeneratorKind kind() const noexcept { return kind_; }
    [[nodiscard]] ZetaFlavor zeta_flavor() const noexcept { return static_cast<ZetaFlavor>(flavor_); }
    [[nodiscard]] LiFlavor li_flavor() const noexcept { return static_cast<LiFlavor>(flavor_); }
    [[nodiscard]] LiArg li_arg() const noexcept { return static_cast<LiArg>(arg_); }
    [[nodiscard]] LogArg log_arg() const noexcept { return static_cast<LogArg>(arg_); }
    [[nodiscard]] Index index() const { return index_of_word(word_); }
    [[nodiscard]] const Word& word() const noexcept { return word_; }
    [[nodiscard]] std::string tag() const;

    [[nodiscard]] int weight() const noexcept;
    [[nodiscard]] std::string str() const;

    friend auto operator<=>(const Generator&, const Generator&) = default;
    friend bool operator==(const Generator&, const Generator&) = default;

private:
    GeneratorKind kind_ = GeneratorKind::log;
    std::uint8_t flavor_ = 0;
    std::uint8_t arg_ = 0;
    std::uint64_t tag_ = 0;
    Word word_;
};

// Sorted by generator, exponents >= 1.
using Monomial = std::vector<std::pair<Generator, int>>;

Monomial monomial_product(const Monomial& a, const Monomial& b);
int monomial_weight(const Monomial& m);
std::string monomial_str(const Monomial& m);

// Exact-rational polynomial in commuting generators.
class SymbolPoly {
public:
    using term_map = std::map<Monomial, Rational>;

    SymbolPoly() = default;
    SymbolPoly(const Rational& c);  // NOLINT: constants embed implicitly
    SymbolPoly(long c) : SymbolPoly(Rational(c)) {}  // NOLINT
    SymbolPoly(int c) : SymbolPoly(Rational(c)) {}  // NOLINT
    explicit SymbolPoly(const Generator& g, int exponent = 1);

    static SymbolPoly parse(std::string_view text);

    [[nodiscard]] const term_map& terms() const& noexcept { return terms_; }
    [[nodiscard]] term_map terms() && { return std::move(terms_); }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const noexcept;
    [[nodiscard]] Rational constant_term() const;
    [[nodiscard]] Rational coeff(const Monomial& m) const;
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }

    // nullopt for the zero polynomial or for mixed weights.
    [[nodiscard]] std::optional<int> homogeneous_weight() const;
    [[nodiscard]] bool contains(const std::function<bool(const Generator&)>& pred) const;
    [[nodiscard]] std::vector<Generator> generators() const;

    void add_term(const Monomial& m, const Rational& c);

    // Replaces each generator g by rule(g) when it returns a value.
    [[nodiscard]] SymbolPoly substitute(const std::function<std::optional<SymbolPoly>(const Generator&)>& rule) const;

    // Evaluates in any commutative ring with rational scalars.
    template <class T, class FromRational, class Value>
    T evaluate(FromRational&& from_rational, Value&& value) const
    {
        T total = from_rational(Rational(0));
        std::map<Generator, T> cache;
        for (const auto& [m, c] : terms_) {
            T term = from_rational(c);
            for (const auto& [g, e] : m) {
                auto it = cache.find(g);
                if (it == cache.end()) {
                    it = cache.emplace(g, value(g)).first;
                }
                for (int i = 0; i < e; ++i) {
                    term = term * it->second;
                }
            }
            total = total + term;
        }
        return total;
    }

    [[nodiscard]] std::string str() const;

    SymbolPoly& operator+=(const SymbolPoly& o);
    SymbolPoly& operator-=(const SymbolPoly& o);
    SymbolPoly& operator*=(const SymbolPoly& o);
    SymbolPoly& operator*=(const Rational& s);

    friend SymbolPoly operator+(SymbolPoly a, const SymbolPoly& b) { return a += b; }
    friend SymbolPoly operator-(SymbolPoly a, const SymbolPoly& b) { return a -= b; }
    friend SymbolPoly operator*(const SymbolPoly& a, const SymbolPoly& b);
    friend SymbolPoly operator*(SymbolPoly a, const Rational& s) { return a *= s; }
    friend SymbolPoly operator*(const Rational& s, SymbolPoly a) { return a *= s; }
    friend SymbolPoly operator-(SymbolPoly a);

    friend bool operator==(const SymbolPoly&, const SymbolPoly&) = default;

private:
    term_map terms_;
};

SymbolPoly pow(const SymbolPoly& base, int exponent);
std::ostream& operator<<(std::ostream& os, const SymbolPoly& q);

// Shorthands.
SymbolPoly zeta_sym(ZetaFlavor flavor, const Index& index);
SymbolPoly li_sym(LiFlavor flavor, const Index& index, LiArg arg);
SymbolPoly log_sym(LogArg arg);
SymbolPoly lambda_sym(std::string_view tag, const Word& word);

// d/dz of a polynomial in Li/log symbols, split by rational-function factor:
//   result = over_z / z + over_one_minus_z / (1 - z) + over_zp * z^{p-1}/(1 - z^p).
// Zeta and lambda generators are constants. The prime enters through the
// chain rule for z^p arguments. The polylog symbols produced are not
// canonicalized.
struct ZDerivative {
    SymbolPoly over_z;
    SymbolPoly over_one_minus_z;
    SymbolPoly over_zp;

    [[nodiscard]] bool is_zero() const noexcept
    {
        return over_z.is_zero() && over_one_minus_z.is_zero() && over_zp.is_zero();
    }
};

ZDerivative formal_derivative(const SymbolPoly& q, const Rational& p);
// The z^p-free case; throws domain_error if a z^p generator is present.
ZDerivative formal_derivative(const SymbolPoly& q);

} // namespace pmzv
