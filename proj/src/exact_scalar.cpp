#include "sdistance/exact_scalar.hpp"

namespace sdist {

ExactScalar gamma_half(long two_x) {
    if (two_x <= 0) throw std::domain_error("gamma_half: Gamma pole or non-positive argument");
    if (two_x % 2 == 0) {
        // Gamma(m) = (m-1)!
        return ExactScalar(Rational(factorial(two_x / 2 - 1)), 0);
    }
    // two_x = 2m+1: Gamma(m + 1/2) = (2m)! / (4^m m!) * sqrt(pi)
    long m = (two_x - 1) / 2;
    Rational c(factorial(2 * m), int_pow(4, m) * factorial(m));
    return ExactScalar(c, 1);
}

ExactScalar gamma_ratio_half_shift(long two_x, long num_shift_halves, long den_shift_halves) {
    long num = two_x + num_shift_halves;
    long den = two_x + den_shift_halves;
    if (num <= 0 || den <= 0)
        throw std::domain_error("gamma_ratio_half_shift: Gamma pole in numerator or denominator");
    return gamma_half(num) / gamma_half(den);
}

}  // namespace sdist
