#pragma once

#include "sdistance/exact_scalar.hpp"
#include "sdistance/partition.hpp"

namespace sdist {

/// alpha_{k,n} of the projection-embedding Hilbert polynomial, per the
/// three-case closed form (n even with k <= n/2 - 1, n odd, n = 2k).
/// Requires 1 <= k <= n/2; callers with k > n/2 must dualize first.
Rational alpha_coefficient(long k, long n);

/// A_{lambda,k} = prod_{i=1}^{k} Gamma(n - 2k + 1 + lambda_i + (k-i)/2).
ExactScalar gamma_product_A(const Partition& lambda, long k, long n);

/// B_{lambda,k} = prod_{i<j} Gamma(l_i - l_j + (j-i+1)/2) / Gamma(l_i - l_j + (j-i)/2).
ExactScalar gamma_product_B(const Partition& lambda, long k);

/// d(k,n) = alpha_{k,n} * sum_lambda A_{lambda,k} B_{lambda,k} C_{lambda,k};
/// all sqrt(pi) factors must cancel, and the result is asserted rational.
/// Defined for 1 <= k <= n-1, with d(k,n) := d(n-k,n) when k > n/2.
Rational d_kn(long k, long n);

/// Exact leading term of the chordal s-distance bound:
/// d(k,n) / (k(n-k))! * s^{k(n-k)}.
Rational chordal_leading_term(long k, long n, long s);

struct LeadingTermReport {
    long k = 0;
    long n = 0;
    Rational d_kn;           // pi-free by construction
    long dim = 0;            // k(n-k)
    Rational leading_coeff;  // d_kn / dim!
};

LeadingTermReport leading_term_report(long k, long n);

}  // namespace sdist
