#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pmzv/braid.hpp"
#include "pmzv/errors.hpp"
#include "pmzv/rings.hpp"
#include "pmzv/series.hpp"

namespace pmzv {

// Grothendieck-Teichmuller pair (c, g); for the pairs used here g is
// group-like with vanishing letter coefficients.
template <CoefficientRing R>
struct GTPair {
    typename R::value_type c;
    NCSeries<R> g;
};

// f(sA, Phi^{-1} (sB) Phi).
template <CoefficientRing R>
NCSeries<R> conj_scaling(const NCSeries<R>& f, const NCSeries<R>& phi, const typename R::value_type& s)
{
    const auto& ring = f.ring();
    const int n = std::min(f.truncation(), phi.truncation());
    const auto a = NCSeries<R>::letter(ring, n, Letter::A) * s;
    const auto b = NCSeries<R>::letter(ring, n, Letter::B) * s;
    return substitute(f, a, invert(phi) * b * phi);
}

// Solves x = left * conj_scaling(g, x, s)^{-1}. The weight-n part of the
// right side only involves x below weight n - 1 because g has no letter
// terms, so one sweep over the weights is exact.
template <CoefficientRing R>
NCSeries<R> twisted_solve(const NCSeries<R>& left, const NCSeries<R>& g, const typename R::value_type& s)
{
    left.check_ring(g);
    const auto& ring = g.ring();
    if (!ring.is_zero(g.coeff(Word::letter(Letter::A))) || !ring.is_zero(g.coeff(Word::letter(Letter::B)))) {
        throw domain_error("twisted_solve: series must have vanishing letter coefficients");
    }
    const int n = std::min(left.truncation(), g.truncation());
    NCSeries<R> x = NCSeries<R>::one(ring, n);
    for (int k = 1; k <= n; ++k) {
        const NCSeries<R> xk = x.truncated(k);
        const NCSeries<R> rhs = left.truncated(k) * invert(conj_scaling(g.truncated(k), xk, s));
        for (const auto& [w, c] : rhs.terms()) {
            if (w.weight() == k) {
                x.set(w, c);
            }
        }
    }
    return x;
}

// (c2, g2) o (c1, g1) = (c1 c2, g2 * g1(A/c2, g2^{-1} (B/c2) g2)).
template <CoefficientRing R>
GTPair<R> gt_compose(const GTPair<R>& p2, const GTPair<R>& p1)
{
    const auto& ring = p2.g.ring();
    auto inv = ring.inverse(p2.c);
    if (!inv) {
        throw domain_error("gt_compose: scalar is not invertible");
    }
    return {p1.c * p2.c, p2.g * conj_scaling(p1.g, p2.g, *inv)};
}

template <CoefficientRing R>
GTPair<R> gt_invert(const GTPair<R>& x)
{
    const auto& ring = x.g.ring();
    auto inv = ring.inverse(x.c);
    if (!inv) {
        throw domain_error("gt_invert: scalar is not invertible");
    }
    return {*inv, twisted_solve(NCSeries<R>::one(ring, x.g.truncation()), x.g, x.c)};
}

template <CoefficientRing R>
bool gt_equal(const GTPair<R>& x, const GTPair<R>& y)
{
    return x.g.ring().equal(x.c, y.c) && x.g == y.g;
}

// A -> A/p, B -> Phi_De^{-1} (B/p) Phi_De.
template <RationalAlgebra R>
NCSeries<R> frobenius_substitution(const NCSeries<R>& f, const NCSeries<R>& phi_de, long p)
{
    return conj_scaling(f, phi_de, f.ring().from_rational(Rational(1, p)));
}

// A -> -A, B -> Phi^-^{-1} (-B) Phi^-.
template <CoefficientRing R>
NCSeries<R> infinity_substitution(const NCSeries<R>& f, const NCSeries<R>& phi_minus)
{
    return conj_scaling(f, phi_minus, f.ring().from_integer(-1));
}

// A -> tA, B -> Phi^{-1} (tB) Phi with t = 2 pi i in the complex case.
template <CoefficientRing R>
NCSeries<R> period_substitution(const NCSeries<R>& f, const NCSeries<R>& phi, const typename R::value_type& two_pi_i)
{
    return conj_scaling(f, phi, two_pi_i);
}

// Phi_De from Phi_KZ(A,B) = Phi_De * Phi_KZ(A/p, Phi_De^{-1} (B/p) Phi_De).
template <RationalAlgebra R>
NCSeries<R> solve_deligne_from_kz(const NCSeries<R>& phi_kz, long p)
{
    return twisted_solve(phi_kz, phi_kz, phi_kz.ring().from_rational(Rational(1, p)));
}

// Phi^- from Phi_KZ(A,B) = Phi^- * Phi_KZ(-A, Phi^-^{-1} (-B) Phi^-).
template <CoefficientRing R>
NCSeries<R> solve_minus_from_kz(const NCSeries<R>& phi_kz)
{
    return twisted_solve(phi_kz, phi_kz, phi_kz.ring().from_integer(-1));
}

// Nonzero coefficients of a residual, labelled by word.
template <CoefficientRing R>
struct Residual {
    std::string relation;
    std::vector<std::pair<std::string, typename R::value_type>> entries;

    [[nodiscard]] bool exact_zero() const noexcept { return entries.empty(); }
};

template <CoefficientRing R>
Residual<R> series_residual(std::string name, const NCSeries<R>& r)
{
    Residual<R> out{std::move(name), {}};
    for (const auto& [w, c] : r.terms()) {
        if (!r.ring().is_zero(c)) {
            out.entries.emplace_back(w.empty() ? std::string("1") : w.str(), c);
        }
    }
    return out;
}

template <CoefficientRing R>
struct GrtReport {
    Residual<R> rel0;
    Residual<R> rel_i;
    Residual<R> rel_ii;
    Residual<R> rel_iii;
};

// exp(l) with l of positive weight, or 1 when the ring lacks rational scalars
// but l is zero.
template <CoefficientRing R>
NCSeries<R> exp_or_one(const NCSeries<R>& l)
{
    if (l.is_zero()) {
        return NCSeries<R>::one(l.ring(), l.truncation());
    }
    return exp_series(l);
}

// (0): log Phi has no letter terms and is primitive.
template <RationalAlgebra R>
Residual<R> grt_rel0(const NCSeries<R>& phi)
{
    const NCSeries<R> l = log_series(phi);
    Residual<R> out{"rel0", {}};
    const auto& ring = phi.ring();
    for (Letter x : {Letter::A, Letter::B}) {
        const auto c = l.coeff(Word::letter(x));
        if (!ring.is_zero(c)) {
            out.entries.emplace_back(Word::letter(x).str(), c);
        }
    }
    TensorSeries<R> expected(ring, l.truncation());
    for (const auto& [w, c] : l.terms()) {
        expected.add_to(w, Word{}, c);
        if (!w.empty()) {
            expected.add_to(Word{}, w, c);
        }
    }
    const TensorSeries<R> delta = coproduct(l);
    auto label = [](const Word& u, const Word& v) {
        return (u.empty() ? std::string("1") : u.str()) + "|" + (v.empty() ? std::string("1") : v.str());
    };
    for (const auto& [k, c] : delta.terms()) {
        const auto d = c - expected.coeff(k.first, k.second);
        if (!ring.is_zero(d)) {
            out.entries.emplace_back(label(k.first, k.second), d);
        }
    }
    for (const auto& [k, c] : expected.terms()) {
        if (delta.terms().count(k) == 0 && !ring.is_zero(c)) {
            out.entries.emplace_back(label(k.first, k.second), -c);
        }
    }
    return out;
}

// (i): Phi(A,B) Phi(B,A) - 1.
template <CoefficientRing R>
Residual<R> grt_rel_i(const NCSeries<R>& phi)
{
    const auto& ring = phi.ring();
    const int n = phi.truncation();
    const auto a = NCSeries<R>::letter(ring, n, Letter::A);
    const auto b = NCSeries<R>::letter(ring, n, Letter::B);
    return series_residual("rel_i", phi * substitute(phi, b, a) - NCSeries<R>::one(ring, n));
}

// (ii): e^{mu A/2} Phi(C,A) e^{mu C/2} Phi(B,C) e^{mu B/2} Phi(A,B) - 1 with
// C = -A-B. mu = 0 is the defining relation of GRT_1; the complex KZ
// associator satisfies the twisted form with mu = 2 pi i instead.
template <RationalAlgebra R>
Residual<R> grt_rel_ii(const NCSeries<R>& phi, const typename R::value_type& mu)
{
    const auto& ring = phi.ring();
    const int n = phi.truncation();
    const auto a = NCSeries<R>::letter(ring, n, Letter::A);
    const auto b = NCSeries<R>::letter(ring, n, Letter::B);
    const auto c = -(a + b);
    const auto half = ring.from_rational(Rational(1, 2)) * mu;
    const auto lhs = exp_or_one(a * half) * substitute(phi, c, a) * exp_or_one(c * half) * substitute(phi, b, c) *
                     exp_or_one(b * half) * phi;
    return series_residual("rel_ii", lhs - NCSeries<R>::one(ring, n));
}

template <CoefficientRing R>
BraidElement<R> evaluate_in_braids(const NCSeries<R>& phi, const std::shared_ptr<const BraidBasis>& basis, int i1,
                                   int j1, int i2, int j2)
{
    const auto& ring = phi.ring();
    return evaluate_series(phi, BraidElement<R>::generator(basis, ring, i1, j1),
                           BraidElement<R>::generator(basis, ring, i2, j2), BraidElement<R>::one(basis, ring));
}

// (iii): the five-term pentagon product minus 1 in the reduced braid algebra.
template <CoefficientRing R>
Residual<R> grt_rel_iii(const NCSeries<R>& phi, const std::shared_ptr<const BraidBasis>& basis)
{
    if (basis->max_degree() < phi.truncation()) {
        throw domain_error("grt_rel_iii: braid basis degree below series truncation");
    }
    const NCSeries<R> f = phi.truncated(basis->max_degree());
    const auto p1 = evaluate_in_braids(f, basis, 1, 2, 2, 3);
    const auto p2 = evaluate_in_braids(f, basis, 3, 4, 4, 5);
    const auto p3 = evaluate_in_braids(f, basis, 5, 1, 1, 2);
    const auto p4 = evaluate_in_braids(f, basis, 2, 3, 3, 4);
    const auto p5 = evaluate_in_braids(f, basis, 4, 5, 5, 1);
    const auto prod = p1 * p2 * p3 * p4 * p5 - BraidElement<R>::one(basis, phi.ring());
    Residual<R> out{"rel_iii", {}};
    for (const auto& [w, c] : prod.terms()) {
        if (static_cast<int>(w.degree) <= phi.truncation() && !phi.ring().is_zero(c)) {
            out.entries.emplace_back(BraidBasis::word_str(w), c);
        }
    }
    return out;
}

template <RationalAlgebra R>
GrtReport<R> verify_grt_relations(const NCSeries<R>& phi, const typename R::value_type& mu,
                                  const std::shared_ptr<const BraidBasis>& basis)
{
    return {grt_rel0(phi), grt_rel_i(phi), grt_rel_ii(phi, mu), grt_rel_iii(phi, basis)};
}

// Coefficient of A^{m-1}B in log Phi and the (ad A)^{m-1}(B) coordinate of
// log Phi in the Lyndon-Lie basis (the bracket has leading word A^{m-1}B).
template <RationalAlgebra R>
struct LieLeadingTerm {
    typename R::value_type log_coefficient;
    typename R::value_type lie_coordinate;
};

template <RationalAlgebra R>
LieLeadingTerm<R> lie_leading_term(const NCSeries<R>& phi, int m)
{
    if (m < 1 || m > phi.truncation()) {
        throw domain_error("lie_leading_term: m out of range");
    }
    const NCSeries<R> l = log_series(phi);
    const Word w = Word::power(Letter::A, m - 1) + Word::letter(Letter::B);
    const auto coords = lyndon_lie_coordinates(l);
    auto it = coords.find(w);
    return {l.coeff(w), it == coords.end() ? phi.ring().zero() : it->second};
}

} // namespace pmzv
