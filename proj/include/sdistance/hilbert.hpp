#pragma once

#include <vector>

#include "sdistance/rational.hpp"

namespace sdist {

/// Rational-function Hilbert series: numerator polynomial over
/// (1 - t^denom_period)^denom_exponent.
struct HilbertSeries {
    std::vector<BigInt> numerator;  // numerator[j] is the coefficient of t^j
    long denom_exponent = 1;
    long denom_period = 1;

    /// Coefficient of t^m of the power-series expansion, computed by
    /// truncated series division (independent of any closed form).
    BigInt coefficient(long m) const;
};

/// c_k(r,j) = sum_{l=0}^{j} (-1)^{j-l} binom(kr+1, j-l)
///            prod_{i=0}^{k-1} binom(r+i+l, r)/binom(r+i, r).
/// The alternating sum of rationals is always an integer.
BigInt c_coefficient(long k, long r, long j);

/// Hilbert series of the Pluecker-embedded Grassmannian Gr(k,n):
/// N_k(n-k; t) / (1-t)^{k(n-k)+1}. The numerator coefficients are
/// c_k(n-k, j) for 0 <= j <= (n-k-1)(k-1).
HilbertSeries grassmannian_hilbert_series(long k, long n);

/// Hilbert function of the Pluecker-embedded Gr(k,n) at degree m, by the
/// closed-form binomial sum H(m) = sum_j c_k(n-k, j) binom(k(n-k)+m-j, m-j).
BigInt hilbert_value(long k, long n, long m);

/// Same value via expansion of the series by truncated division; the two
/// routes are cross-checked in tests.
BigInt hilbert_value_series(long k, long n, long m);

/// sum_{i=1}^{s} H_{Gr(k,n)}(2i): the exact finite-n Fubini-Study bound.
BigInt hilbert_even_sum(long k, long n, long s);

/// Leading coefficient of the n^{2ks} asymptotics of the even-degree sum:
/// prod_{j=1}^{2s} (j-1)!/(j+k-1)!.
Rational fs_leading_coefficient(long k, long s);

}  // namespace sdist
