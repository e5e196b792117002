#pragma once

#include <map>

#include "sdistance/partition.hpp"
#include "sdistance/rational.hpp"

namespace sdist {

/// Homogeneous symmetric polynomial in `num_vars` variables, stored in the
/// monomial basis: coeffs maps a partition lambda (<= num_vars parts, weight
/// = degree) to the coefficient of m_lambda. Zero coefficients are dropped.
class SymPoly {
public:
    SymPoly(long degree, long num_vars) : degree_(degree), num_vars_(num_vars) {
        if (num_vars < 1) throw std::invalid_argument("SymPoly: num_vars must be positive");
        if (degree < 0) throw std::invalid_argument("SymPoly: negative degree");
    }

    long degree() const { return degree_; }
    long num_vars() const { return num_vars_; }
    const std::map<Partition, Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Rational coeff(const Partition& p) const {
        auto it = coeffs_.find(p);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    void add_term(const Partition& p, const Rational& c) {
        if (c == 0) return;
        if (p.weight() != degree_)
            throw std::invalid_argument("SymPoly: term weight does not match degree");
        if (static_cast<long>(p.length()) > num_vars_)
            throw std::invalid_argument("SymPoly: partition longer than num_vars");
        auto [it, inserted] = coeffs_.emplace(p, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    SymPoly& operator+=(const SymPoly& o) {
        for (const auto& [p, c] : o.coeffs_) add_term(p, c);
        return *this;
    }

    SymPoly& scale(const Rational& q) {
        if (q == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& [p, c] : coeffs_) c *= q;
        return *this;
    }

    SymPoly scaled(const Rational& q) const {
        SymPoly r = *this;
        r.scale(q);
        return r;
    }

    bool operator==(const SymPoly& o) const {
        return degree_ == o.degree_ && coeffs_ == o.coeffs_;
    }

    /// Value at x_1 = ... = x_num_vars = 1: each m_lambda contributes the
    /// number of distinct rearrangements of lambda padded to num_vars slots.
    Rational evaluate_at_ones() const;

private:
    long degree_;
    long num_vars_;
    std::map<Partition, Rational> coeffs_;
};

/// Monomial-basis expansion of prod_{1 <= i < j <= k} (x_i + x_j) over k
/// variables; degree k(k-1)/2. The empty product (k = 1) is the constant 1.
SymPoly product_offdiag_expand(long k);

/// Number of distinct permutations of lambda padded with zeros to num_vars
/// slots (the orbit size of the monomial m_lambda counts).
BigInt orbit_size(const Partition& lambda, long num_vars);

}  // namespace sdist
