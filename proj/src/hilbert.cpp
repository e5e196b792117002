#include "sdistance/hilbert.hpp"

#include <algorithm>

namespace sdist {

BigInt HilbertSeries::coefficient(long m) const {
    if (m < 0) return 0;
    // a_m = N_m - sum_{i>=1} D_{p i} a_{m - p i}, where D is the expanded
    // denominator (1-t^p)^e with D_0 = 1.
    std::vector<BigInt> a(m + 1);
    for (long t = 0; t <= m; ++t) {
        BigInt v = t < static_cast<long>(numerator.size()) ? numerator[t] : BigInt(0);
        for (long i = 1; i <= denom_exponent && i * denom_period <= t; ++i) {
            BigInt d = binomial(denom_exponent, i);
            if (i % 2) d = -d;
            v -= d * a[t - i * denom_period];
        }
        a[t] = v;
    }
    return a[m];
}

BigInt c_coefficient(long k, long r, long j) {
    if (k < 1 || r < 0 || j < 0) throw std::domain_error("c_coefficient: bad arguments");
    Rational total = 0;
    for (long l = 0; l <= j; ++l) {
        Rational prod = binomial(k * r + 1, j - l);
        if ((j - l) % 2) prod = -prod;
        for (long i = 0; i < k; ++i)
            prod *= Rational(binomial(r + i + l, r), binomial(r + i, r));
        total += prod;
    }
    if (!is_integer(total)) throw std::logic_error("c_coefficient: non-integer value");
    return numerator(total);
}

HilbertSeries grassmannian_hilbert_series(long k, long n) {
    if (k < 1 || k > n) throw std::domain_error("grassmannian_hilbert_series: need 1 <= k <= n");
    const long r = n - k;
    const long deg = std::max(0L, (r - 1) * (k - 1));
    HilbertSeries hs;
    hs.denom_exponent = k * (n - k) + 1;
    hs.denom_period = 1;
    hs.numerator.reserve(deg + 1);
    for (long j = 0; j <= deg; ++j) hs.numerator.push_back(c_coefficient(k, r, j));
    return hs;
}

BigInt hilbert_value(long k, long n, long m) {
    if (k < 1 || k > n) throw std::domain_error("hilbert_value: need 1 <= k <= n");
    if (m < 0) return 0;
    const long r = n - k;
    const long deg = std::max(0L, (r - 1) * (k - 1));
    const long dim = k * (n - k);
    BigInt total = 0;
    for (long j = 0; j <= std::min(deg, m); ++j)
        total += c_coefficient(k, r, j) * binomial(dim + m - j, m - j);
    return total;
}

BigInt hilbert_value_series(long k, long n, long m) {
    return grassmannian_hilbert_series(k, n).coefficient(m);
}

BigInt hilbert_even_sum(long k, long n, long s) {
    if (s < 1) throw std::domain_error("hilbert_even_sum: s must be >= 1");
    BigInt total = 0;
    for (long i = 1; i <= s; ++i) total += hilbert_value(k, n, 2 * i);
    return total;
}

Rational fs_leading_coefficient(long k, long s) {
    if (k < 1 || s < 1) throw std::domain_error("fs_leading_coefficient: need k,s >= 1");
    Rational prod = 1;
    for (long j = 1; j <= 2 * s; ++j) prod *= Rational(factorial(j - 1), factorial(j + k - 1));
    return prod;
}

}  // namespace sdist
