#pragma once

#include "sdistance/rational.hpp"

namespace sdist {

/// Element of the Q-module spanned by powers of sqrt(pi): value = coeff * sqrt(pi)^sqrt_pi_exp.
///
/// Gamma at half-integer arguments lives in Q*sqrt(pi), and products of such
/// values accumulate integer powers of sqrt(pi). A power of 2 would mean a
/// genuine factor of pi, which is not representable as a rational; the
/// exponent slot is therefore allowed to wander outside {-1,0,1} only while a
/// Gamma product is being accumulated, and consumers assert it returns to 0
/// (or +-1 for single ratios) at the end.
class ExactScalar {
public:
    ExactScalar() : coeff_(0), sqrt_pi_exp_(0) {}
    explicit ExactScalar(Rational c, int sqrt_pi_exp = 0)
        : coeff_(std::move(c)), sqrt_pi_exp_(sqrt_pi_exp) {
        if (coeff_ == 0) sqrt_pi_exp_ = 0;
    }

    const Rational& coeff() const { return coeff_; }
    int sqrt_pi_exp() const { return sqrt_pi_exp_; }
    bool is_zero() const { return coeff_ == 0; }

    ExactScalar operator*(const ExactScalar& o) const {
        return ExactScalar(coeff_ * o.coeff_, sqrt_pi_exp_ + o.sqrt_pi_exp_);
    }
    ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }

    ExactScalar operator/(const ExactScalar& o) const {
        if (o.coeff_ == 0) throw std::domain_error("ExactScalar: division by zero");
        return ExactScalar(coeff_ / o.coeff_, sqrt_pi_exp_ - o.sqrt_pi_exp_);
    }

    ExactScalar operator*(const Rational& q) const { return ExactScalar(coeff_ * q, sqrt_pi_exp_); }

    bool operator==(const ExactScalar& o) const {
        return coeff_ == o.coeff_ && sqrt_pi_exp_ == o.sqrt_pi_exp_;
    }

    /// The rational value; throws unless all sqrt(pi) factors have cancelled.
    Rational as_rational() const {
        if (!is_zero() && sqrt_pi_exp_ != 0)
            throw std::logic_error("ExactScalar: residual sqrt(pi) power " +
                                   std::to_string(sqrt_pi_exp_));
        return coeff_;
    }

    std::string str() const {
        std::string s = rat_to_string(coeff_);
        if (sqrt_pi_exp_ == 0 || coeff_ == 0) return s;
        return s + "*sqrt(pi)^" + std::to_string(sqrt_pi_exp_);
    }

private:
    Rational coeff_;
    int sqrt_pi_exp_;
};

/// Gamma(two_x/2) for positive integer two_x: Gamma(m) = (m-1)! at integers,
/// Gamma(m + 1/2) = (2m)!/(4^m m!) * sqrt(pi) at half-integers.
ExactScalar gamma_half(long two_x);

/// Gamma(two_x/2 + num_shift_halves/2) / Gamma(two_x/2 + den_shift_halves/2).
/// Both arguments must be strictly positive; the result carries sqrt_pi_exp
/// in {-1,0,1} depending on the parities.
ExactScalar gamma_ratio_half_shift(long two_x, long num_shift_halves, long den_shift_halves);

}  // namespace sdist
