#include "sdistance/leading.hpp"

#include "sdistance/jack.hpp"

namespace sdist {

Rational alpha_coefficient(long k, long n) {
    if (k < 1 || 2 * k > n)
        throw std::domain_error("alpha_coefficient: need 1 <= k <= n/2 (dualize first)");
    if (n == 2 * k) {
        BigInt denom = 1;
        for (long i = 1; i <= k; ++i)
            for (long j = i + 1; j <= k; ++j) denom *= BigInt(j - i) * (2 * k - j - i);
        return Rational(int_pow(2, k * (k - 1) + 1), denom);
    }
    if (n % 2 == 0) {
        BigInt denom = 1;
        for (long i = 1; i <= k; ++i)
            for (long j = i + 1; j <= n / 2; ++j) denom *= BigInt(j - i) * (n - j - i);
        return Rational(int_pow(2, k * (n - k - 1)), denom);
    }
    BigInt denom = 1;
    for (long i = 1; i <= k; ++i)
        for (long j = i + 1; j <= (n - 1) / 2; ++j) denom *= BigInt(j - i) * (n - i - j);
    for (long i = 1; i <= k; ++i) denom *= (n - 2 * i);
    return Rational(int_pow(2, k * (n - k)), denom);
}

ExactScalar gamma_product_A(const Partition& lambda, long k, long n) {
    ExactScalar prod(Rational(1), 0);
    for (long i = 1; i <= k; ++i) {
        // argument n - 2k + 1 + lambda_i + (k-i)/2, in half-integer units
        long two_x = 2 * (n - 2 * k + 1 + lambda.part(i - 1)) + (k - i);
        prod *= gamma_half(two_x);
    }
    return prod;
}

ExactScalar gamma_product_B(const Partition& lambda, long k) {
    ExactScalar prod(Rational(1), 0);
    for (long i = 1; i <= k; ++i)
        for (long j = i + 1; j <= k; ++j) {
            long diff = lambda.part(i - 1) - lambda.part(j - 1);
            prod *= gamma_ratio_half_shift(2 * diff, j - i + 1, j - i);
        }
    return prod;
}

Rational d_kn(long k, long n) {
    if (k < 1 || k > n - 1) throw std::domain_error("d_kn: need 1 <= k <= n-1");
    if (2 * k > n) return d_kn(n - k, n);

    bool first = true;
    Rational acc = 0;
    int grade = 0;
    for (const auto& [lambda, c] : jack_expansion_coeffs(k)) {
        ExactScalar term = gamma_product_A(lambda, k, n) * gamma_product_B(lambda, k) * c;
        if (term.is_zero()) continue;
        if (first) {
            grade = term.sqrt_pi_exp();
            first = false;
        } else if (term.sqrt_pi_exp() != grade) {
            throw std::logic_error("d_kn: mixed sqrt(pi) grades in Gamma-product sum");
        }
        acc += term.coeff();
    }
    ExactScalar total(acc, first ? 0 : grade);
    // the final pi-power must be zero; anything else is a normalization bug
    Rational result = (total * alpha_coefficient(k, n)).as_rational();
    if (result <= 0) throw std::logic_error("d_kn: non-positive value");
    return result;
}

Rational chordal_leading_term(long k, long n, long s) {
    if (s < 1) throw std::domain_error("chordal_leading_term: s must be >= 1");
    const long dim = k * (n - k);
    return d_kn(k, n) / Rational(factorial(dim)) * Rational(int_pow(BigInt(s), dim));
}

LeadingTermReport leading_term_report(long k, long n) {
    LeadingTermReport r;
    r.k = k;
    r.n = n;
    r.d_kn = d_kn(k, n);
    r.dim = k * (n - k);
    r.leading_coeff = r.d_kn / Rational(factorial(r.dim));
    return r;
}

}  // namespace sdist
