#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "pmzv/errors.hpp"
#include "pmzv/rational.hpp"
#include "pmzv/rings.hpp"

namespace pmzv {

// Monomial in the five free generators X12, X13, X14, X23, X24 (digits
// 0..4, first letter most significant).
struct BraidWord {
    std::uint8_t degree = 0;
    std::uint32_t code = 0;

    friend auto operator<=>(const BraidWord&, const BraidWord&) = default;
    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

using BraidVector = std::vector<std::pair<BraidWord, Rational>>;

// Truncated enveloping algebra of the pure sphere 5-braid Lie algebra.
//
// X_{i,5} (i <= 4) and X_{3,4} are eliminated with the linear relations
// sum_{j != i} X_{i,j} = 0. The quadratic relations [X_{i,j}, X_{k,l}] = 0
// ({i,j}, {k,l} disjoint) span a two-sided ideal whose degree-d part is
// echelonized with the largest monomial as pivot; non-pivot monomials form
// the standard basis and every pivot monomial has a fixed normal form.
class BraidBasis {
public:
    static constexpr int free_generators = 5;
    static constexpr int max_supported_degree = 6;

    explicit BraidBasis(int max_degree);

    [[nodiscard]] int max_degree() const noexcept { return max_degree_; }
    // Dimension of the degree-d component of the quotient.
    [[nodiscard]] std::size_t dimension(int degree) const;
    [[nodiscard]] std::size_t rank(int degree) const;

    [[nodiscard]] bool is_standard(const BraidWord& w) const;
    // Normal form of a monomial as a combination of standard monomials.
    [[nodiscard]] BraidVector normal_form(const BraidWord& w) const;

    // X_{i,j} in the free generators; i != j in 1..5, order irrelevant.
    [[nodiscard]] BraidVector generator(int i, int j) const;

    // The quadratic relations in the free generators.
    [[nodiscard]] const std::vector<BraidVector>& quadratic_relations() const noexcept { return relations_; }

    // Reduces a free-algebra vector of a single degree to normal form.
    [[nodiscard]] BraidVector reduce(const BraidVector& v) const;

    static BraidWord concat(const BraidWord& a, const BraidWord& b);
    static std::string word_str(const BraidWord& w);

private:
    int max_degree_;
    std::vector<BraidVector> relations_;
    // Per degree: pivot monomial code -> normal form.
    std::vector<std::map<std::uint32_t, BraidVector>> pivots_;
};

// Element of the truncated enveloping algebra with coefficients in R,
// always stored in normal form.
template <CoefficientRing R>
class BraidElement {
public:
    using value_type = typename R::value_type;
    using map_type = std::map<BraidWord, value_type>;

    BraidElement(std::shared_ptr<const BraidBasis> basis, R ring) : basis_(std::move(basis)), ring_(std::move(ring)) {}

    static BraidElement one(std::shared_ptr<const BraidBasis> basis, const R& ring)
    {
        BraidElement e(std::move(basis), ring);
        e.terms_.emplace(BraidWord{}, ring.one());
        return e;
    }

    static BraidElement generator(std::shared_ptr<const BraidBasis> basis, const R& ring, int i, int j)
    {
        BraidElement e(basis, ring);
        for (const auto& [w, c] : basis->generator(i, j)) {
            e.add(w, ring.from_rational(c));
        }
        return e;
    }

    [[nodiscard]] const map_type& terms() const& noexcept { return terms_; }
    [[nodiscard]] map_type terms() && { return std::move(terms_); }
    [[nodiscard]] const R& ring() const noexcept { return ring_; }
    [[nodiscard]] int truncation() const noexcept { return basis_->max_degree(); }

    [[nodiscard]] value_type coeff(const BraidWord& w) const
    {
        auto it = terms_.find(w);
        return it == terms_.end() ? ring_.zero() : it->second;
    }

    friend BraidElement operator+(BraidElement a, const BraidElement& b)
    {
        for (const auto& [w, c] : b.terms_) {
            a.add(w, c);
        }
        return a;
    }
    friend BraidElement operator-(BraidElement a, const BraidElement& b)
    {
        for (const auto& [w, c] : b.terms_) {
            a.add(w, -c);
        }
        return a;
    }
    friend BraidElement operator*(BraidElement a, const value_type& s)
    {
        map_type out;
        for (auto& [w, c] : a.terms_) {
            value_type v = c * s;
            if (!a.ring_.is_zero(v)) {
                out.emplace(w, std::move(v));
            }
        }
        a.terms_ = std::move(out);
        return a;
    }

    // Product in the free algebra followed by per-degree reduction.
    friend BraidElement operator*(const BraidElement& x, const BraidElement& y)
    {
        BraidElement out(x.basis_, x.ring_);
        const int n = x.basis_->max_degree();
        for (const auto& [u, cu] : x.terms_) {
            for (const auto& [v, cv] : y.terms_) {
                if (u.degree + v.degree > n) {
                    continue;
                }
                const value_type c = cu * cv;
                const BraidWord w = BraidBasis::concat(u, v);
                if (x.basis_->is_standard(w)) {
                    out.add(w, c);
                } else {
                    for (const auto& [s, q] : x.basis_->normal_form(w)) {
                        out.add(s, c * x.ring_.from_rational(q));
                    }
                }
            }
        }
        return out;
    }

private:
    void add(const BraidWord& w, const value_type& c)
    {
        if (ring_.is_zero(c)) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            value_type s = it->second + c;
            if (ring_.is_zero(s)) {
                terms_.erase(it);
            } else {
                it->second = std::move(s);
            }
        }
    }

    std::shared_ptr<const BraidBasis> basis_;
    R ring_;
    map_type terms_;
};

} // namespace pmzv
