#include "sdistance/jack.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <tuple>

namespace sdist {

namespace {

using ExpVec = std::vector<long>;

// All distinct permutations of lambda padded with zeros to num_vars slots.
std::vector<ExpVec> orbit(const Partition& lambda, long num_vars) {
    ExpVec v(num_vars, 0);
    for (size_t i = 0; i < lambda.length(); ++i) v[i] = lambda.part(i);
    std::sort(v.begin(), v.end());
    std::vector<ExpVec> out;
    do {
        out.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace

SymPoly apply_eigenoperator(const SymPoly& f, const Rational& alpha) {
    if (alpha <= 0) throw std::domain_error("apply_eigenoperator: alpha must be positive");
    const long n = f.num_vars();
    const Rational two_over_alpha = Rational(2) / alpha;
    std::map<ExpVec, Rational> raw;

    for (const auto& [mu, cmu] : f.coeffs()) {
        for (const auto& a : orbit(mu, n)) {
            // x_i^2 d^2/dx_i^2 is diagonal on monomials
            long diag = 0;
            for (long e : a) diag += e * (e - 1);
            if (diag != 0) raw[a] += cmu * diag;

            // The pair terms of the first-order part. For exponents p > q at
            // positions (i,j), the combined contribution of x^a and its
            // (i,j)-swap is p(x_i^p x_j^q + x_i^q x_j^p)
            // + (p-q) sum_{r=q+1}^{p-1} x_i^r x_j^{p+q-r}, all times 2/alpha;
            // visiting only the a with a_i > a_j counts each swap pair once.
            for (long i = 0; i < n; ++i) {
                for (long j = i + 1; j < n; ++j) {
                    const long p = a[i], q = a[j];
                    if (p == q) {
                        if (p > 0) raw[a] += cmu * two_over_alpha * p;
                        continue;
                    }
                    if (p < q) continue;
                    ExpVec b = a;
                    raw[b] += cmu * two_over_alpha * p;
                    b[i] = q;
                    b[j] = p;
                    raw[b] += cmu * two_over_alpha * p;
                    for (long r = q + 1; r <= p - 1; ++r) {
                        b[i] = r;
                        b[j] = p + q - r;
                        raw[b] += cmu * two_over_alpha * (p - q);
                    }
                }
            }
        }
    }

    SymPoly out(f.degree(), n);
    for (const auto& [e, c] : raw) {
        if (c == 0) continue;
        if (std::is_sorted(e.begin(), e.end(), std::greater<>())) out.add_term(Partition(e), c);
    }
    return out;
}

Rational eigenoperator_eigenvalue(const Partition& lambda, const Rational& alpha, long num_vars) {
    Rational d = 0;
    for (size_t i = 0; i < lambda.length(); ++i) {
        long li = lambda.part(i);
        d += li * (li - 1);
        d += Rational(2) / alpha * Rational((num_vars - static_cast<long>(i) - 1) * li);
    }
    return d;
}

namespace {

// E(m_mu), memoized: the same columns are reused across every J_lambda with
// mu in its dominance interval.
const SymPoly& eig_column(const Partition& mu, const Rational& alpha, long num_vars) {
    static std::mutex mutex;
    static std::map<std::tuple<Partition, Rational, long>, SymPoly> memo;
    std::lock_guard<std::mutex> lock(mutex);
    const auto key = std::make_tuple(mu, alpha, num_vars);
    auto it = memo.find(key);
    if (it == memo.end()) {
        SymPoly m(mu.weight(), num_vars);
        m.add_term(mu, 1);
        it = memo.emplace(key, apply_eigenoperator(m, alpha)).first;
    }
    return it->second;
}

}  // namespace

SymPoly jack_monic(const Partition& lambda, const Rational& alpha, long num_vars) {
    if (static_cast<long>(lambda.length()) > num_vars)
        throw std::invalid_argument("jack_monic: lambda has more parts than num_vars");

    static std::mutex memo_mutex;
    static std::map<std::tuple<Partition, Rational, long>, SymPoly> memo;
    const auto key = std::make_tuple(lambda, alpha, num_vars);
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }

    // support of P_lambda: partitions dominated by lambda, at most num_vars parts
    std::vector<Partition> support = enumerate_dominated_by(num_vars, lambda);
    // decreasing lex refines dominance, so this order is solve-compatible

    std::map<Partition, SymPoly> op_columns;  // E(m_mu) for mu in support
    for (const auto& mu : support) op_columns.emplace(mu, eig_column(mu, alpha, num_vars));

    const Rational d_lambda = eigenoperator_eigenvalue(lambda, alpha, num_vars);
    std::map<Partition, Rational> c;
    c[lambda] = 1;
    for (const auto& nu : support) {
        if (nu == lambda) continue;
        Rational rhs = 0;
        for (const auto& [mu, cmu] : c) {
            if (mu == nu) continue;
            rhs += cmu * op_columns.at(mu).coeff(nu);
        }
        const Rational d_nu = eigenoperator_eigenvalue(nu, alpha, num_vars);
        if (d_nu == d_lambda)
            throw std::logic_error("jack_monic: eigenvalue collision on dominance interval");
        c[nu] = rhs / (d_lambda - d_nu);
    }

    SymPoly out(lambda.weight(), num_vars);
    for (const auto& [mu, cmu] : c) out.add_term(mu, cmu);
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        memo.emplace(key, out);
    }
    return out;
}

Rational jack_hook_scale(const Partition& lambda, const Rational& alpha) {
    // conjugate part lengths give the leg counts
    std::vector<long> conj;
    if (!lambda.empty()) {
        conj.assign(lambda.part(0), 0);
        for (size_t i = 0; i < lambda.length(); ++i)
            for (long j = 0; j < lambda.part(i); ++j) ++conj[j];
    }
    Rational c = 1;
    for (size_t i = 0; i < lambda.length(); ++i) {
        for (long j = 0; j < lambda.part(i); ++j) {
            long arm = lambda.part(i) - j - 1;
            long leg = conj[j] - static_cast<long>(i) - 1;
            c *= alpha * arm + leg + 1;
        }
    }
    return c;
}

SymPoly jack_in_monomials(const Partition& lambda, const Rational& alpha, long num_vars) {
    return jack_monic(lambda, alpha, num_vars).scaled(jack_hook_scale(lambda, alpha));
}

std::map<Partition, Rational> jack_expansion_coeffs(long k) {
    if (k < 1) throw std::domain_error("jack_expansion_coeffs: k must be >= 1");
    const Rational alpha(2);
    SymPoly residual = product_offdiag_expand(k);
    std::map<Partition, Rational> coeffs;
    for (const auto& lambda : enumerate_dominated_by(k, staircase(k))) {
        Rational c = residual.coeff(lambda);
        if (c == 0) continue;
        coeffs[lambda] = c;
        residual += jack_monic(lambda, alpha, k).scaled(-c);
    }
    if (!residual.is_zero())
        throw std::logic_error("jack_expansion_coeffs: triangular elimination left a residual");
    return coeffs;
}

}  // namespace sdist
