#include "pmzv/padic_eval.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "pmzv/errors.hpp"

namespace pmzv {

namespace {

void check_disk(const PadicNumber& z, const char* who)
{
    if (!z.is_zero() && z.valuation() <= 0) {
        throw domain_error(std::string(who) + ": argument must satisfy |z|_p < 1");
    }
}

// True once n v - K log_p n >= target and the bound is increasing from n on.
bool tail_bound_holds(unsigned long p, long n, long v, int weight, long target)
{
    const double lp = std::log(static_cast<double>(p));
    if (static_cast<double>(n) * static_cast<double>(v) * lp < weight) {
        return false;
    }
    const double bound = static_cast<double>(n * v) - weight * std::log(static_cast<double>(n)) / lp;
    return bound >= static_cast<double>(target) + 1e-9;
}

PadicSeriesValue nested_sum(const Index& index, const PadicNumber& z, long target, bool prime_to_p, const char* who)
{
    if (index.empty()) {
        throw domain_error(std::string(who) + ": empty index");
    }
    check_disk(z, who);
    const unsigned long p = z.prime();
    if (z.is_zero()) {
        return {PadicNumber(p, target), 0};
    }
    const long v = z.valuation();
    const int weight = index.weight();
    const int m = index.depth();
    // Inverse powers 1/n^k are lifted to this absolute precision; the
    // propagated precision of the sum is what gets certified.
    const long inner_prec = target + 8 + weight * floor_log(p, std::max<long>(2, target / v + 64));

    std::vector<PadicNumber> inner(static_cast<std::size_t>(m), PadicNumber(p, inner_prec));
    inner[0] = PadicNumber::from_integer(p, 1, inner_prec);
    PadicNumber sum(p, target);
    PadicNumber power = z;
    int quiet = 0;
    long n = 1;
    for (;; ++n) {
        const bool used = !prime_to_p || n % static_cast<long>(p) != 0;
        const Integer nn(n);
        auto inverse_power = [&](int k) {
            Integer d;
            mpz_pow_ui(d.get_mpz_t(), nn.get_mpz_t(), static_cast<unsigned long>(k));
            return PadicNumber::from_rational(p, Rational(Integer(1), d), inner_prec);
        };
        if (used) {
            const PadicNumber term = power * inner[static_cast<std::size_t>(m - 1)] * inverse_power(index[m - 1]);
            sum = sum + term;
            const bool small = term.is_zero() || term.valuation() >= target;
            quiet = small ? quiet + 1 : 0;
        }
        for (int j = m - 1; j >= 1; --j) {
            inner[static_cast<std::size_t>(j)] =
                inner[static_cast<std::size_t>(j)] + inner[static_cast<std::size_t>(j - 1)] * inverse_power(index[j - 1]);
        }
        if (quiet >= 10 && tail_bound_holds(p, n, v, weight, target)) {
            break;
        }
        power = power * z;
    }
    if (sum.absolute_precision() > target) {
        sum = sum.with_precision(target);
    }
    return {sum, n};
}

} // namespace

PadicSeriesValue padic_mpl(const Index& index, const PadicNumber& z, long target)
{
    return nested_sum(index, z, target, false, "padic_mpl");
}

PadicSeriesValue padic_mpl_prime_to_p(const Index& index, const PadicNumber& z, long target)
{
    return nested_sum(index, z, target, true, "padic_mpl_prime_to_p");
}

PadicSeriesValue padic_polylog(int k, const PadicNumber& z, long target)
{
    if (k < 1) {
        throw domain_error("padic_polylog: k must be positive");
    }
    return nested_sum(Index{k}, z, target, false, "padic_polylog");
}

PadicSeriesValue padic_li_dagger(int k, const PadicNumber& z, long target)
{
    if (k < 1) {
        throw domain_error("padic_li_dagger: k must be positive");
    }
    return nested_sum(Index{k}, z, target, true, "padic_li_dagger");
}

PadicSeriesValue padic_mpl2(int a, int b, const PadicNumber& z, long target)
{
    if (a < 1 || b < 1) {
        throw domain_error("padic_mpl2: entries must be positive");
    }
    return nested_sum(Index{a, b}, z, target, false, "padic_mpl2");
}

PadicNumber lift_for_series(unsigned long p, const Rational& z, int weight, long target)
{
    if (z == 0) {
        return PadicNumber(p, target);
    }
    const long v = padic_valuation(p, z);
    const long cutoff = std::max<long>(2, target / std::max<long>(1, v) + 64);
    return PadicNumber::from_rational(p, z, target + 8 + weight * floor_log(p, cutoff));
}

bool DaggerReport::pass() const
{
    return !samples.empty() && std::all_of(samples.begin(), samples.end(), [](const DaggerSample& s) { return s.pass; });
}

DaggerReport verify_dagger_numeric(const std::vector<unsigned long>& primes, int max_k, int points,
                                 long working_precision, long required_digits, std::uint64_t seed)
{
    DaggerReport report{working_precision, required_digits, {}};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-999, 999);
    std::uniform_int_distribution<long> den(1, 999);
    std::uniform_int_distribution<int> val(1, 3);
    for (unsigned long p : primes) {
        for (int k = 1; k <= max_k; ++k) {
            for (int i = 0; i < points; ++i) {
                long a = 0;
                while (a == 0 || a % static_cast<long>(p) == 0) {
                    a = num(rng);
                }
                long b = 0;
                while (b == 0 || b % static_cast<long>(p) == 0) {
                    b = den(rng);
                }
                Rational z = Rational(a, b);
                z.canonicalize();
                const int v = val(rng);
                for (int e = 0; e < v; ++e) {
                    z *= static_cast<long>(p);
                }
                const PadicNumber zp = lift_for_series(p, z, k, working_precision);
                const PadicNumber zpp = lift_for_series(p, rational_pow(z, static_cast<int>(p)), k, working_precision);
                const PadicNumber dagger = padic_li_dagger(k, zp, working_precision).value;
                const PadicNumber lhs = padic_polylog(k, zp, working_precision).value;
                const PadicNumber rhs = padic_polylog(k, zpp, working_precision).value;
                const PadicNumber pk = PadicNumber::from_rational(p, rational_pow(Rational(static_cast<long>(p)), k),
                                                                  working_precision + 64);
                const PadicNumber diff = dagger - (lhs - rhs / pk);
                const long digits = diff.is_zero() ? diff.absolute_precision() : diff.valuation();
                report.samples.push_back({p, k, z, digits, digits >= required_digits});
            }
        }
    }
    return report;
}

} // namespace pmzv
