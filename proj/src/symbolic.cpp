#include "pmzv/symbolic.hpp"

#include "pmzv/lyndon.hpp"

namespace pmzv {

std::string flavor_name(AssociatorFlavor f)
{
    switch (f) {
    case AssociatorFlavor::complex_kz: return "complex_KZ";
    case AssociatorFlavor::padic_kz: return "padic_KZ";
    case AssociatorFlavor::padic_deligne: return "padic_Deligne";
    case AssociatorFlavor::minus_kz: return "minus_KZ";
    case AssociatorFlavor::symbolic_lambda: return "symbolic_lambda";
    }
    return "";
}

AssociatorFlavor parse_flavor(std::string_view name)
{
    for (AssociatorFlavor f : {AssociatorFlavor::complex_kz, AssociatorFlavor::padic_kz,
                               AssociatorFlavor::padic_deligne, AssociatorFlavor::minus_kz,
                               AssociatorFlavor::symbolic_lambda}) {
        if (name == flavor_name(f)) {
            return f;
        }
    }
    throw parse_error("unknown associator flavor '" + std::string(name) + "'");
}

SymSeries symbolic_associator(std::string_view tag, int n)
{
    std::map<Word, SymbolPoly> values;
    for (const Word& l : lyndon_words(n)) {
        if (l.weight() >= 2) {
            values.emplace(l, lambda_sym(tag, l));
        }
    }
    return character_series(SymbolRing{}, n, values);
}

SymbolPoly lambda_to_zeta(const SymbolPoly& q, std::string_view tag, ZetaFlavor flavor)
{
    return q.substitute([&](const Generator& g) -> std::optional<SymbolPoly> {
        if (g.kind() != GeneratorKind::lambda || g.tag() != tag) {
            return std::nullopt;
        }
        const Index i = index_of_word(g.word());
        const Rational sign = i.depth() % 2 == 0 ? 1 : -1;
        return zeta_sym(flavor, i) * sign;
    });
}

namespace {

LogArg log_arg_of(LiArg arg)
{
    switch (arg) {
    case LiArg::z: return LogArg::z;
    case LiArg::z_pow_p: return LogArg::z_pow_p;
    case LiArg::z_conj: return LogArg::z_conj;
    }
    return LogArg::z;
}

Rational depth_sign(const Index& i)
{
    return i.depth() % 2 == 0 ? 1 : -1;
}

Rational inv_pow(long p, int k)
{
    return rational_pow(Rational(p), -k);
}

} // namespace

SymSeries g0_symbolic(LiArg arg, int n)
{
    std::map<Word, SymbolPoly> values;
    for (const Word& l : lyndon_words(n)) {
        if (l == Word::letter(Letter::A)) {
            values.emplace(l, log_sym(log_arg_of(arg)));
        } else {
            const Index i = index_of_word(l);
            values.emplace(l, li_sym(LiFlavor::plain, i, arg) * depth_sign(i));
        }
    }
    return character_series(SymbolRing{}, n, values);
}

SymbolPoly signed_coefficient(const SymSeries& f, const Index& i)
{
    const SignedWord sw = word_of_index(i);
    if (sw.word.weight() > f.truncation()) {
        throw domain_error("signed_coefficient: index weight exceeds truncation");
    }
    return f.coeff(sw.word) * Rational(sw.sign);
}

// ------------------------------------------------------------ canonicalizer

const SymSeries& Canonicalizer::g0(LiArg arg, int weight)
{
    auto it = g0_cache_.find(arg);
    if (it == g0_cache_.end() || it->second.truncation() < weight) {
        g0_cache_.insert_or_assign(arg, g0_symbolic(arg, std::max(weight, 4)));
        it = g0_cache_.find(arg);
    }
    return it->second;
}

std::optional<SymbolPoly> Canonicalizer::rewrite(const Generator& g)
{
    switch (g.kind()) {
    case GeneratorKind::lambda:
        return std::nullopt;
    case GeneratorKind::log:
        if (g.log_arg() == LogArg::z_pow_p && ctx_.p) {
            return log_sym(LogArg::z) * Rational(*ctx_.p);
        }
        if (g.log_arg() == LogArg::abs_z_sq) {
            return log_sym(LogArg::z) + log_sym(LogArg::z_conj);
        }
        return std::nullopt;
    case GeneratorKind::zeta: {
        auto it = ctx_.zeta_series.find(g.zeta_flavor());
        if (it == ctx_.zeta_series.end()) {
            return std::nullopt;
        }
        return (*this)(signed_coefficient(it->second, g.index()));
    }
    case GeneratorKind::li: {
        const Index i = g.index();
        switch (g.li_flavor()) {
        case LiFlavor::plain:
            if (is_lyndon(g.word())) {
                return std::nullopt;
            }
            // Words ending in B expand into Lyndon Li symbols only.
            return signed_coefficient(g0(g.li_arg(), g.word().weight()), i);
        case LiFlavor::dagger:
            if (!ctx_.dagger || g.li_arg() != LiArg::z) {
                return std::nullopt;
            }
            return (*this)(signed_coefficient(*ctx_.dagger, i));
        case LiFlavor::minus:
            if (!ctx_.minus || g.li_arg() != LiArg::z) {
                return std::nullopt;
            }
            return (*this)(signed_coefficient(*ctx_.minus, i));
        }
    }
    }
    return std::nullopt;
}

SymbolPoly Canonicalizer::operator()(const SymbolPoly& q)
{
    return q.substitute([&](const Generator& g) -> std::optional<SymbolPoly> {
        if (auto it = memo_.find(g); it != memo_.end()) {
            return it->second;
        }
        auto r = rewrite(g);
        if (!r) {
            return std::nullopt;
        }
        memo_.emplace(g, *r);
        return r;
    });
}

SymSeries Canonicalizer::operator()(const SymSeries& f)
{
    SymSeries out(f.ring(), f.truncation());
    for (const auto& [w, c] : f.terms()) {
        out.set(w, (*this)(c));
    }
    return out;
}

SymbolPoly canonicalize(const SymbolPoly& q, const SymbolContext& ctx)
{
    Canonicalizer c(ctx);
    return c(q);
}

SymbolContext PadicSymbolic::context() const
{
    SymbolContext ctx;
    ctx.p = p;
    ctx.zeta_series.emplace(ZetaFlavor::padic, phi_kz);
    ctx.zeta_series.emplace(ZetaFlavor::padic_deligne, phi_de);
    ctx.dagger = dagger;
    return ctx;
}

SymbolContext HodgeSymbolic::context() const
{
    SymbolContext ctx;
    ctx.zeta_series.emplace(ZetaFlavor::complex, phi_kz);
    ctx.minus = minus;
    return ctx;
}

PadicSymbolic czech_expand(long p, int n)
{
    if (!is_prime(static_cast<unsigned long>(p))) {
        throw domain_error("czech_expand: p must be prime");
    }
    SymSeries phi_kz = symbolic_associator(tag_padic_kz, n);
    SymSeries phi_de = solve_deligne_from_kz(phi_kz, p);
    SymSeries g0_z = g0_symbolic(LiArg::z, n);
    SymSeries g0_zp = g0_symbolic(LiArg::z_pow_p, n);
    SymSeries dagger = g0_z * invert(frobenius_substitution(g0_zp, phi_de, p));
    SymbolContext ctx;
    ctx.p = p;
    Canonicalizer canon(ctx);
    dagger = canon(dagger);
    return {p, n, std::move(phi_kz), std::move(phi_de), std::move(g0_z), canon(g0_zp), std::move(dagger)};
}

HodgeSymbolic moldova_expand(int n)
{
    SymSeries phi_kz = symbolic_associator(tag_complex_kz, n);
    SymSeries phi_minus = solve_minus_from_kz(phi_kz);
    SymSeries g0_z = g0_symbolic(LiArg::z, n);
    SymSeries g0_zbar = g0_symbolic(LiArg::z_conj, n);
    SymSeries minus = g0_z * invert(infinity_substitution(g0_zbar, phi_minus));
    return {n, std::move(phi_kz), std::move(phi_minus), std::move(g0_z), std::move(g0_zbar), std::move(minus)};
}

// ---------------------------------------------------------------- KZ checks

namespace {

struct SeriesDerivative {
    SymSeries over_z;
    SymSeries over_one_minus_z;
    SymSeries over_zp;
};

SeriesDerivative differentiate(const SymSeries& g, std::optional<long> p)
{
    const int n = g.truncation();
    SeriesDerivative d{SymSeries(g.ring(), n), SymSeries(g.ring(), n), SymSeries(g.ring(), n)};
    for (const auto& [w, c] : g.terms()) {
        const ZDerivative dc = p ? formal_derivative(c, Rational(*p)) : formal_derivative(c);
        d.over_z.set(w, dc.over_z);
        d.over_one_minus_z.set(w, dc.over_one_minus_z);
        d.over_zp.set(w, dc.over_zp);
    }
    return d;
}

} // namespace

KZResidual verify_kz_equation(const SymSeries& g, const SymbolContext& ctx)
{
    Canonicalizer canon(ctx);
    const SymSeries h = canon(g);
    const int n = h.truncation();
    const SymbolRing ring;
    const auto a = SymSeries::letter(ring, n, Letter::A);
    const auto b = SymSeries::letter(ring, n, Letter::B);
    const SeriesDerivative d = differentiate(h, ctx.p);
    return {canon(d.over_z - a * h), canon(d.over_one_minus_z + b * h), canon(d.over_zp)};
}

KZResidual verify_princeton_equation(const SymSeries& g, const SymSeries& phi_de, long p, const SymbolContext& ctx)
{
    SymbolContext c = ctx;
    c.p = p;
    Canonicalizer canon(c);
    const SymSeries h = canon(g);
    const int n = h.truncation();
    const SymbolRing ring;
    const auto a = SymSeries::letter(ring, n, Letter::A);
    const auto b = SymSeries::letter(ring, n, Letter::B);
    const SymSeries conj_b = invert(phi_de) * b * phi_de;
    const SeriesDerivative d = differentiate(h, p);
    return {canon(d.over_z - a * h + h * a), canon(d.over_one_minus_z + b * h), canon(d.over_zp - h * conj_b)};
}

// ------------------------------------------------------------- closed forms

namespace closed_form {

SymbolPoly zeta_regularized(ZetaFlavor flavor, const Index& i)
{
    if (i.admissible()) {
        return zeta_sym(flavor, i);
    }
    if (i == Index{1}) {
        return {};
    }
    throw domain_error("zeta_regularized: only zeta(1) is resolved here, got (" + i.str() + ")");
}

SymbolPoly deligne_depth1(long p, int k)
{
    return zeta_sym(ZetaFlavor::padic, Index{k}) * (1 - inv_pow(p, k));
}

SymbolPoly deligne_depth2(long p, int a, int b)
{
    const ZetaFlavor f = ZetaFlavor::padic;
    auto z = [&](int k) { return zeta_regularized(f, Index{k}); };
    const Rational top = inv_pow(p, a + b);
    SymbolPoly r = zeta_sym(f, Index{a, b}) * (1 - top);
    r -= z(a) * z(b) * (inv_pow(p, b) - top);
    for (int s = 0; s <= a - 1; ++s) {
        const Rational sign = s % 2 == 0 ? 1 : -1;
        r -= z(a - s) * z(b + s) * (sign * (inv_pow(p, a - s) - top) * Rational(binomial(b - 1 + s, b - 1)));
    }
    const Rational sign_a = a % 2 == 0 ? 1 : -1;
    for (int s = 0; s <= b - 1; ++s) {
        r -= z(a + s) * z(b - s) * (sign_a * (inv_pow(p, b - s) - top) * Rational(binomial(a - 1 + s, a - 1)));
    }
    return r;
}

SymbolPoly dagger_depth1(long p, int k)
{
    return li_sym(LiFlavor::plain, Index{k}, LiArg::z) - li_sym(LiFlavor::plain, Index{k}, LiArg::z_pow_p) * inv_pow(p, k);
}

SymbolPoly dagger_depth2(long p, int a, int b)
{
    auto li = [](const Index& i, LiArg arg) { return li_sym(LiFlavor::plain, i, arg); };
    auto z = [](int k) { return zeta_regularized(ZetaFlavor::padic, Index{k}); };
    const Rational top = inv_pow(p, a + b);
    SymbolPoly r = li(Index{a, b}, LiArg::z) - li(Index{a, b}, LiArg::z_pow_p) * top;
    r -= z(a) * li(Index{b}, LiArg::z_pow_p) * (inv_pow(p, b) - top);
    for (int s = 0; s <= a - 1; ++s) {
        const Rational sign = s % 2 == 0 ? 1 : -1;
        const SymbolPoly brace = li(Index{b + s}, LiArg::z) - li(Index{b + s}, LiArg::z_pow_p) * inv_pow(p, b + s);
        r -= li(Index{a - s}, LiArg::z_pow_p) * brace * (sign * inv_pow(p, a - s) * Rational(binomial(b - 1 + s, s)));
    }
    const Rational sign_a = a % 2 == 0 ? 1 : -1;
    for (int s = 0; s <= b - 1; ++s) {
        r -= z(a + s) * li(Index{b - s}, LiArg::z_pow_p) *
             (sign_a * Rational(binomial(a - 1 + s, a - 1)) * (inv_pow(p, b - s) - top));
    }
    return r;
}

namespace {

Rational sgn(int e)
{
    return e % 2 == 0 ? 1 : -1;
}

// (log|z|^2)^e / e!
SymbolPoly log_power(int e)
{
    return pow(log_sym(LogArg::abs_z_sq), e) * Rational(1, factorial(static_cast<unsigned>(e)));
}

} // namespace

SymbolPoly minus_depth1(int k)
{
    SymbolPoly r = li_sym(LiFlavor::plain, Index{k}, LiArg::z);
    for (int a = 0; a <= k - 1; ++a) {
        r -= log_power(a) * li_sym(LiFlavor::plain, Index{k - a}, LiArg::z_conj) * sgn(k - a);
    }
    return r;
}

SymbolPoly minus_depth2(int a, int b)
{
    auto li = [](const Index& i, LiArg arg) { return li_sym(LiFlavor::plain, i, arg); };
    auto z = [](int k) { return zeta_regularized(ZetaFlavor::complex, Index{k}); };
    SymbolPoly r = li(Index{a, b}, LiArg::z);
    for (int s_r = 0; s_r <= a - 1; ++s_r) {
        for (int s = 0; s <= s_r; ++s) {
            SymbolPoly brace = li(Index{b + s}, LiArg::z);
            for (int w = 0; w <= b + s - 1; ++w) {
                brace -= log_power(w) * li(Index{b + s - w}, LiArg::z_conj) * sgn(b + s + w);
            }
            r -= log_power(s_r - s) * li(Index{a - s_r}, LiArg::z_conj) * brace *
                 (sgn(a + s_r + s) * Rational(binomial(b - 1 + s, s)));
        }
    }
    for (int u = 0; u <= b - 1; ++u) {
        SymbolPoly bracket = li(Index{a, b - u}, LiArg::z_conj) * sgn(a + b + u);
        bracket += z(a) * li(Index{b - u}, LiArg::z_conj) * (sgn(b + u) - sgn(a + b + u));
        for (int v = 0; v <= b - u - 1; ++v) {
            bracket += z(a + v) * li(Index{b - u - v}, LiArg::z_conj) *
                       ((sgn(a + b + u + v) - sgn(b + u)) * Rational(binomial(a + v - 1, a - 1)));
        }
        r -= log_power(u) * bracket;
    }
    return r;
}

} // namespace closed_form

} // namespace pmzv
