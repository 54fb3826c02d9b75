#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pmzv/index.hpp"
#include "pmzv/padic.hpp"
#include "pmzv/rational.hpp"

namespace pmzv {

// A truncated p-adic series value. value.absolute_precision() is the
// certified precision: every omitted term has valuation >= target and the
// summed terms carry their propagated precision.
struct PadicSeriesValue {
    PadicNumber value;
    long terms = 0;
};

// Li_{k_1..k_m}(z) = sum_{0<n_1<...<n_m} z^{n_m} / (n_1^{k_1} ... n_m^{k_m})
// on the open unit disk. The inner sums are accumulated incrementally so the
// cost is linear in the cutoff. Throws domain_error when |z|_p >= 1 or the
// index is empty.
PadicSeriesValue padic_mpl(const Index& index, const PadicNumber& z, long target);
// Same series restricted to outer indices n_m prime to p.
PadicSeriesValue padic_mpl_prime_to_p(const Index& index, const PadicNumber& z, long target);

PadicSeriesValue padic_polylog(int k, const PadicNumber& z, long target);
PadicSeriesValue padic_li_dagger(int k, const PadicNumber& z, long target);
PadicSeriesValue padic_mpl2(int a, int b, const PadicNumber& z, long target);

// Lifts an exact rational with enough guard digits that the series for an
// index of the given weight loses nothing below target.
PadicNumber lift_for_series(unsigned long p, const Rational& z, int weight, long target);

// Depth-1 check of Li^dag_k(z) = Li_k(z) - p^{-k} Li_k(z^p) on random points
// p^v * a/b of the disk.
struct DaggerSample {
    unsigned long p = 0;
    int k = 0;
    Rational z;
    long digits = 0;  // valuation of the difference, capped by its precision
    bool pass = false;
};

struct DaggerReport {
    long working_precision = 0;
    long required_digits = 0;
    std::vector<DaggerSample> samples;
    [[nodiscard]] bool pass() const;
};

DaggerReport verify_dagger_numeric(const std::vector<unsigned long>& primes, int max_k, int points,
                                 long working_precision, long required_digits, std::uint64_t seed);

} // namespace pmzv
