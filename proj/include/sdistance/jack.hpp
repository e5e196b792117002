#pragma once

#include "sdistance/sympoly.hpp"

namespace sdist {

/// Laplace-Beltrami-type eigenoperator
///   E = sum_i x_i^2 d^2/dx_i^2 + (2/alpha) sum_{i != j} x_i^2/(x_i-x_j) d/dx_i
/// applied to a symmetric polynomial in the monomial basis. Jack polynomials
/// are its eigenfunctions; on m_mu it acts triangularly, producing m_mu plus
/// dominance-lower terms.
SymPoly apply_eigenoperator(const SymPoly& f, const Rational& alpha);

/// Eigenvalue of E on J_lambda in num_vars variables:
///   sum_i lambda_i (lambda_i - 1) + (2/alpha) sum_i (num_vars - i) lambda_i.
Rational eigenoperator_eigenvalue(const Partition& lambda, const Rational& alpha, long num_vars);

/// Monic Jack polynomial P_lambda^(alpha) (coefficient of m_lambda is 1),
/// expanded in monomial symmetric polynomials over num_vars variables.
/// Computed by the triangular eigenfunction recursion over dominance order.
SymPoly jack_monic(const Partition& lambda, const Rational& alpha, long num_vars);

/// Scale factor c_lambda(alpha) = prod_{cells s} (alpha * arm(s) + leg(s) + 1)
/// relating the J- and P-normalizations: J_lambda = c_lambda(alpha) P_lambda.
Rational jack_hook_scale(const Partition& lambda, const Rational& alpha);

/// Jack polynomial J_lambda^(alpha) in the J-normalization (the coefficient
/// of m_{(1^w)} for w = |lambda| is w!), expanded in monomials.
SymPoly jack_in_monomials(const Partition& lambda, const Rational& alpha, long num_vars);

/// Coefficients C_{lambda,k} of the expansion of prod_{i<j <= k}(x_i + x_j)
/// in the monic Jack basis at alpha = 2 over k variables. The support
/// consists of partitions of k(k-1)/2 with at most k parts dominated by the
/// staircase delta_k; the staircase itself carries coefficient 1.
std::map<Partition, Rational> jack_expansion_coeffs(long k);

}  // namespace sdist
