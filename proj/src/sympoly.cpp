#include "sdistance/sympoly.hpp"

#include <algorithm>
#include <functional>

namespace sdist {

BigInt orbit_size(const Partition& lambda, long num_vars) {
    if (static_cast<long>(lambda.length()) > num_vars)
        throw std::invalid_argument("orbit_size: partition longer than num_vars");
    // num_vars! / (prod over multiplicities, zeros included)
    BigInt denom = factorial(num_vars - static_cast<long>(lambda.length()));
    size_t i = 0;
    while (i < lambda.length()) {
        size_t j = i;
        while (j < lambda.length() && lambda.part(j) == lambda.part(i)) ++j;
        denom *= factorial(static_cast<long>(j - i));
        i = j;
    }
    return factorial(num_vars) / denom;
}

Rational SymPoly::evaluate_at_ones() const {
    Rational total = 0;
    for (const auto& [p, c] : coeffs_) total += c * Rational(orbit_size(p, num_vars_));
    return total;
}

SymPoly product_offdiag_expand(long k) {
    if (k < 1) throw std::domain_error("product_offdiag_expand: k must be >= 1");
    // Expand factor by factor on dense exponent vectors, then sort exponents
    // to collect monomial-basis coefficients.
    std::map<std::vector<long>, Rational> raw;
    raw[std::vector<long>(k, 0)] = 1;
    for (long i = 0; i < k; ++i) {
        for (long j = i + 1; j < k; ++j) {
            std::map<std::vector<long>, Rational> next;
            for (const auto& [e, c] : raw) {
                auto ei = e;
                ++ei[i];
                next[ei] += c;
                auto ej = e;
                ++ej[j];
                next[ej] += c;
            }
            raw = std::move(next);
        }
    }
    SymPoly out(k * (k - 1) / 2, k);
    for (const auto& [e, c] : raw) {
        auto sorted = e;
        std::sort(sorted.begin(), sorted.end(), std::greater<>());
        if (sorted == e) out.add_term(Partition(sorted), c);
    }
    return out;
}

}  // namespace sdist
