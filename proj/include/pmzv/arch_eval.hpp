#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "pmzv/index.hpp"
#include "pmzv/rational.hpp"
#include "pmzv/rings.hpp"
#include "pmzv/series.hpp"
#include "pmzv/symbol_poly.hpp"

namespace pmzv {

struct NumericValue {
    Complex value;
    double error_bound = 0.0;
};

// zeta(k_1..k_m), 0 < n_1 < ... < n_m, for admissible indices of weight <= 8
// and depth <= 4. Splits the summation region at a cutoff M:
//   zeta(k) = sum_j Z_M(k_1..k_j) T_M(k_{j+1}..k_m)
// with Z_M the exact nested sum over n_i <= M and T_M the tail over n_i > M;
// depth-1 tails by Euler-Maclaurin, deeper tails by the iterated integral
// M^{r-|t|} / prod_i (t_i + ... + t_r - (r - i + 1)).
NumericValue mzv_numeric(const Index& index);

// Li_{k_1..k_m}(z) for |z| < 1 by the nested series, inner sums accumulated.
NumericValue mpl_numeric(const Index& index, Complex z);

// Li^-_k(z) = Li_k(z) - sum_{a<k} (-1)^{k-a} (log|z|^2)^a / a! Li_{k-a}(zbar),
// for 0 < |z| < 1.
Complex sv_polylog(int k, Complex z);

// P_k(z) = Re_k sum_{a<k} B_a / a! (log|z|^2)^a Li_{k-a}(z); Re_k is the real
// part for odd k and the imaginary part for even k.
double zagier_P(int k, Complex z);

// B_n with t/(e^t - 1) = sum B_n t^n / n!.
Rational bernoulli(int n);

// (1/2) sum_{i<k} B_i / i! (log|z|^2)^i Li^-_{k-i}(z).
Complex bernoulli_sum(int k, Complex z);

// Numeric values for symbol generators at a point: zeta symbols of the
// complex flavor, lambda_KZ coordinates, plain Li and log symbols at z and
// zbar (principal branch). Throws capability_error for p-adic symbols.
Complex evaluate_numeric(const SymbolPoly& q, Complex z);

// Depth-2 closed form for Li^-_{a,b} minus the Hodge-side symbolic coefficient, both
// evaluated at z.
Complex numeric_depth2_book_check(int a, int b, Complex z);

// Phi_KZ with complex coefficients from the numeric zeta values of the
// Lyndon words of weight 2..n.
NCSeries<ComplexField> numeric_associator(int n, double tolerance = 1e-6);

// Largest coefficient modulus of a complex series.
double max_abs_coefficient(const NCSeries<ComplexField>& f);

} // namespace pmzv
