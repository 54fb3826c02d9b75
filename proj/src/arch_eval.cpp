#include "pmzv/arch_eval.hpp"

#include <cmath>
#include <map>

#include "pmzv/errors.hpp"
#include "pmzv/lyndon.hpp"
#include "pmzv/symbolic.hpp"

namespace pmzv {

namespace {

constexpr long mzv_cutoff = 100000;
constexpr int mzv_max_weight = 8;
constexpr int mzv_max_depth = 4;

// Tail sum_{M < n_1 < ... < n_r} prod n_i^{-t_i} and an error estimate.
std::pair<long double, long double> mzv_tail(const std::vector<int>& t, long double M)
{
    const int r = static_cast<int>(t.size());
    if (r == 0) {
        return {1.0L, 0.0L};
    }
    if (r == 1) {
        const long double s = t[0];
        const long double tail = std::pow(M, 1 - s) / (s - 1) - std::pow(M, -s) / 2 + s * std::pow(M, -s - 1) / 12 -
                                 s * (s + 1) * (s + 2) * std::pow(M, -s - 3) / 720;
        // Next Euler-Maclaurin term.
        const long double err = s * (s + 1) * (s + 2) * (s + 3) * (s + 4) * std::pow(M, -s - 5) / 30240;
        return {tail, err};
    }
    int weight = 0;
    for (int k : t) {
        weight += k;
    }
    long double den = 1;
    int suffix = 0;
    for (int i = r - 1; i >= 0; --i) {
        suffix += t[static_cast<std::size_t>(i)];
        den *= static_cast<long double>(suffix - (r - i));
    }
    const long double tail = std::pow(M, static_cast<long double>(r - weight)) / den;
    // The sum and the integral differ at relative order 1/M per variable.
    return {tail, tail * static_cast<long double>(r * weight) / M};
}

Complex conj_of(const Complex& x)
{
    return std::conj(x);
}

Complex numeric_generator(const Generator& g, Complex z)
{
    switch (g.kind()) {
    case GeneratorKind::zeta:
        if (g.zeta_flavor() != ZetaFlavor::complex) {
            throw capability_error("evaluate_numeric: p-adic zeta symbol " + g.str());
        }
        return mzv_numeric(g.index()).value;
    case GeneratorKind::lambda: {
        if (g.tag() != tag_complex_kz) {
            throw capability_error("evaluate_numeric: no numeric value for " + g.str());
        }
        const Index i = index_of_word(g.word());
        const Complex v = mzv_numeric(i).value;
        return i.depth() % 2 == 0 ? v : -v;
    }
    case GeneratorKind::li: {
        if (g.li_flavor() != LiFlavor::plain || g.li_arg() == LiArg::z_pow_p) {
            throw capability_error("evaluate_numeric: no numeric value for " + g.str());
        }
        const Complex v = mpl_numeric(g.index(), z).value;
        return g.li_arg() == LiArg::z ? v : conj_of(v);
    }
    case GeneratorKind::log:
        switch (g.log_arg()) {
        case LogArg::z:
            return std::log(z);
        case LogArg::z_conj:
            return conj_of(std::log(z));
        case LogArg::one_minus_z:
            return std::log(1.0 - z);
        case LogArg::one_minus_z_conj:
            return conj_of(std::log(1.0 - z));
        case LogArg::abs_z_sq:
            return 2.0 * std::log(std::abs(z));
        case LogArg::z_pow_p:
            break;
        }
        break;
    }
    throw capability_error("evaluate_numeric: no numeric value for " + g.str());
}

void check_disk(Complex z, const char* who)
{
    if (!(std::abs(z) < 1.0)) {
        throw domain_error(std::string(who) + ": requires |z| < 1");
    }
}

void check_punctured_disk(Complex z, const char* who)
{
    check_disk(z, who);
    if (z == Complex{}) {
        throw domain_error(std::string(who) + ": requires z != 0");
    }
}

} // namespace

NumericValue mzv_numeric(const Index& index)
{
    if (!index.admissible()) {
        throw domain_error("mzv_numeric: index (" + index.str() + ") is not admissible");
    }
    if (index.weight() > mzv_max_weight || index.depth() > mzv_max_depth) {
        throw domain_error("mzv_numeric: index (" + index.str() + ") beyond weight 8 / depth 4");
    }
    const std::vector<int>& k = index.entries();
    const int m = index.depth();
    std::vector<long double> z(static_cast<std::size_t>(m + 1), 0.0L);
    z[0] = 1.0L;
    for (long n = 1; n <= mzv_cutoff; ++n) {
        const long double inv = 1.0L / static_cast<long double>(n);
        for (int j = m; j >= 1; --j) {
            long double f = 1.0L;
            for (int e = 0; e < k[static_cast<std::size_t>(j - 1)]; ++e) {
                f *= inv;
            }
            z[static_cast<std::size_t>(j)] += z[static_cast<std::size_t>(j - 1)] * f;
        }
    }
    const long double M = mzv_cutoff;
    long double value = 0;
    long double err = static_cast<long double>(mzv_cutoff) * 1e-19L;
    for (int j = 0; j <= m; ++j) {
        const std::vector<int> suffix(k.begin() + j, k.end());
        const auto [tail, terr] = mzv_tail(suffix, M);
        value += z[static_cast<std::size_t>(j)] * tail;
        err += z[static_cast<std::size_t>(j)] * terr;
    }
    return {Complex(static_cast<double>(value), 0.0), static_cast<double>(err) + 1e-15};
}

NumericValue mpl_numeric(const Index& index, Complex z)
{
    if (index.empty()) {
        throw domain_error("mpl_numeric: empty index");
    }
    check_disk(z, "mpl_numeric");
    const int m = index.depth();
    const double r = std::abs(z);
    std::vector<Complex> inner(static_cast<std::size_t>(m), Complex{});
    inner[0] = 1.0;
    Complex sum{};
    Complex power = z;
    double rn = r;
    for (long n = 1;; ++n) {
        const double inv = 1.0 / static_cast<double>(n);
        auto inv_pow = [&](int k) { return std::pow(inv, k); };
        sum += power * inner[static_cast<std::size_t>(m - 1)] * inv_pow(index[m - 1]);
        for (int j = m - 1; j >= 1; --j) {
            inner[static_cast<std::size_t>(j)] += inner[static_cast<std::size_t>(j - 1)] * inv_pow(index[j - 1]);
        }
        // Later terms are bounded by r^{n'} (1 + log n')^{m-1}, a sequence
        // with ratio at most q from here on.
        const double ln = 1.0 + std::log(static_cast<double>(n));
        const double q = r * std::pow((1.0 + std::log(static_cast<double>(n + 1))) / ln, m - 1);
        if (q < 1.0) {
            const double tail = rn * std::pow(ln, m - 1) * q / (1.0 - q);
            if (tail < 1e-17 || r == 0.0) {
                return {sum, tail + static_cast<double>(n) * 1e-16 * std::max(1.0, std::abs(sum))};
            }
        }
        power *= z;
        rn *= r;
    }
}

Complex sv_polylog(int k, Complex z)
{
    if (k < 1) {
        throw domain_error("sv_polylog: k must be positive");
    }
    check_punctured_disk(z, "sv_polylog");
    const double L = 2.0 * std::log(std::abs(z));
    Complex r = mpl_numeric(Index{k}, z).value;
    double lp = 1.0;  // L^a / a!
    for (int a = 0; a <= k - 1; ++a) {
        const double sign = (k - a) % 2 == 0 ? 1.0 : -1.0;
        r -= sign * lp * std::conj(mpl_numeric(Index{k - a}, z).value);
        lp *= L / (a + 1);
    }
    return r;
}

Rational bernoulli(int n)
{
    if (n < 0) {
        throw domain_error("bernoulli: negative order");
    }
    std::vector<Rational> b(static_cast<std::size_t>(n + 1));
    b[0] = 1;
    // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1.
    for (int m = 1; m <= n; ++m) {
        Rational s = 0;
        for (int j = 0; j < m; ++j) {
            s += Rational(binomial(m + 1, j)) * b[static_cast<std::size_t>(j)];
        }
        b[static_cast<std::size_t>(m)] = -s / Rational(m + 1);
    }
    return b[static_cast<std::size_t>(n)];
}

double zagier_P(int k, Complex z)
{
    if (k < 1) {
        throw domain_error("zagier_P: k must be positive");
    }
    check_punctured_disk(z, "zagier_P");
    const double L = 2.0 * std::log(std::abs(z));
    Complex s{};
    double lp = 1.0;
    for (int a = 0; a <= k - 1; ++a) {
        s += bernoulli(a).get_d() * lp * mpl_numeric(Index{k - a}, z).value;
        lp *= L / (a + 1);
    }
    return k % 2 == 1 ? s.real() : s.imag();
}

Complex bernoulli_sum(int k, Complex z)
{
    check_punctured_disk(z, "bernoulli_sum");
    const double L = 2.0 * std::log(std::abs(z));
    Complex s{};
    double lp = 1.0;
    for (int i = 0; i <= k - 1; ++i) {
        s += bernoulli(i).get_d() * lp * sv_polylog(k - i, z);
        lp *= L / (i + 1);
    }
    return 0.5 * s;
}

Complex evaluate_numeric(const SymbolPoly& q, Complex z)
{
    return q.evaluate<Complex>([](const Rational& c) { return Complex(c.get_d(), 0.0); },
                               [z](const Generator& g) { return numeric_generator(g, z); });
}

Complex numeric_depth2_book_check(int a, int b, Complex z)
{
    if (a < 1 || b < 2) {
        throw domain_error("numeric_depth2_book_check: requires a >= 1 and b >= 2");
    }
    check_punctured_disk(z, "numeric_depth2_book_check");
    const HodgeSymbolic hs = moldova_expand(a + b);
    Canonicalizer canon(hs.context());
    const SymbolPoly symbolic = canon(li_sym(LiFlavor::minus, Index{a, b}, LiArg::z));
    return evaluate_numeric(closed_form::minus_depth2(a, b), z) - evaluate_numeric(symbolic, z);
}

NCSeries<ComplexField> numeric_associator(int n, double tolerance)
{
    std::map<Word, Complex> values;
    for (const Word& l : lyndon_words(n)) {
        if (l.weight() < 2) {
            continue;
        }
        const Index i = index_of_word(l);
        const Complex v = mzv_numeric(i).value;
        values.emplace(l, i.depth() % 2 == 0 ? v : -v);
    }
    return character_series(ComplexField{tolerance}, n, values);
}

double max_abs_coefficient(const NCSeries<ComplexField>& f)
{
    double m = 0.0;
    for (const auto& [w, c] : f.terms()) {
        m = std::max(m, std::abs(c));
    }
    return m;
}

} // namespace pmzv
