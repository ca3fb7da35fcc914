#include "koszulkit/series.hpp"

namespace koszulkit {

TruncatedSeries::TruncatedSeries(std::uint32_t cut, std::vector<mpz_class> c)
    : cutoff(cut), coefficients(std::move(c)) {
    if (coefficients.size() != static_cast<std::size_t>(cutoff) + 1)
        throw InputError("TruncatedSeries: coefficient count must be cutoff + 1");
}

TruncatedSeries expand(const RationalSeries& r, std::uint32_t cutoff) {
    if (r.denominator.empty() || r.denominator[0] == 0)
        throw InputError("expand: denominator constant term must be nonzero");
    std::vector<mpq_class> c(cutoff + 1);
    mpq_class d0(r.denominator[0]);
    for (std::uint32_t k = 0; k <= cutoff; ++k) {
        mpq_class acc = k < r.numerator.size() ? mpq_class(r.numerator[k]) : mpq_class(0);
        for (std::uint32_t i = 1; i <= k && i < r.denominator.size(); ++i)
            acc -= mpq_class(r.denominator[i]) * c[k - i];
        c[k] = acc / d0;
    }
    std::vector<mpz_class> out(cutoff + 1);
    for (std::uint32_t k = 0; k <= cutoff; ++k) {
        if (c[k].get_den() != 1)
            throw InputError("expand: series is not integral at t^" + std::to_string(k));
        out[k] = c[k].get_num();
    }
    return TruncatedSeries(cutoff, std::move(out));
}

bool pq_one_check(const TruncatedSeries& p, const IntPoly& q) {
    for (std::uint32_t n = 0; n <= p.cutoff; ++n) {
        mpz_class acc = 0;
        for (std::uint32_t i = 0; i <= n && i < q.size(); ++i) acc += q[i] * p.at(n - i);
        if (acc != (n == 0 ? 1 : 0)) return false;
    }
    return true;
}

int mobius(std::uint64_t n) {
    if (n == 0) throw InputError("mobius(0) is undefined");
    int factors = 0;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        ++factors;
    }
    if (n > 1) ++factors;
    return factors % 2 ? -1 : 1;
}

std::vector<int> mobius_sieve(std::uint64_t n) {
    std::vector<int> mu(n + 1, 1);
    std::vector<bool> composite(n + 1, false);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (!composite[i]) {
            primes.push_back(i);
            mu[i] = -1;
        }
        for (std::uint64_t p : primes) {
            if (i * p > n) break;
            composite[i * p] = true;
            if (i % p == 0) {
                mu[i * p] = 0;
                break;
            }
            mu[i * p] = -mu[i];
        }
    }
    return mu;
}

namespace {

// a_n with a_n = sum_{d|n} d N_d, from t P'/P: n p_n = sum_{k=1..n} a_k p_{n-k}.
std::vector<mpz_class> log_derivative_coeffs(const TruncatedSeries& p) {
    if (p.coefficients.empty() || p.at(0) != 1)
        throw InputError("lie dims: series must start with constant term 1");
    std::uint32_t n_max = p.cutoff;
    std::vector<mpz_class> a(n_max + 1);
    for (std::uint32_t n = 1; n <= n_max; ++n) {
        mpz_class acc = n * p.at(n);
        for (std::uint32_t k = 1; k < n; ++k) acc -= a[k] * p.at(n - k);
        a[n] = acc;
    }
    return a;
}

}  // namespace

LieDims lie_dims_from_series(const TruncatedSeries& p) {
    std::vector<mpz_class> a = log_derivative_coeffs(p);
    LieDims out;
    out.values.resize(p.cutoff);
    for (std::uint32_t j = 1; j <= p.cutoff; ++j) {
        mpz_class acc = 0;
        for (std::uint32_t d = 1; d <= j; ++d) {
            if (j % d) continue;
            int mu = mobius(j / d);
            if (mu) acc += mu * a[d];
        }
        mpz_class q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), acc.get_mpz_t(), mpz_class(j).get_mpz_t());
        if (r != 0 || q < 0)
            throw InputError("lie dims: input is not the series of an enveloping algebra (N_" +
                             std::to_string(j) + " fails)");
        out.values[j - 1] = q;
    }
    return out;
}

LieDims lie_dims_closed_form(std::uint32_t s, std::uint32_t jmax) {
    if (jmax < 3) throw InputError("lie_dims_closed_form: jmax must be >= 3");
    // power sums of the roots of t^2 - (s+1) t + 1, by integer recurrence
    std::vector<mpz_class> ps(jmax + 1);
    ps[0] = 2;
    ps[1] = s + 1;
    for (std::uint32_t k = 2; k <= jmax; ++k) ps[k] = (s + 1) * ps[k - 1] - ps[k - 2];
    LieDims out;
    out.values.resize(jmax);
    for (std::uint32_t j = 3; j <= jmax; ++j) {
        mpz_class acc = 0;
        for (std::uint32_t k = 1; k <= j; ++k) {
            if (j % k) continue;
            int mu = mobius(j / k);
            if (mu) acc += mu * ps[k];
        }
        mpz_class q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), acc.get_mpz_t(), mpz_class(j).get_mpz_t());
        if (r != 0 || q < 0) throw InternalError("closed-form N_j not a nonnegative integer");
        out.values[j - 1] = q;
    }
    // j = 1, 2 come from the general Witt inversion of the full series
    RationalSeries ym{{1}, {}};
    // (1 - t^2)(1 - (s+1) t + t^2)
    IntPoly d1{1, 0, -1}, d2{1, -static_cast<long>(s + 1), 1};
    IntPoly den(4 + 1, 0);
    for (std::size_t i = 0; i < d1.size(); ++i)
        for (std::size_t k = 0; k < d2.size(); ++k) den[i + k] += d1[i] * d2[k];
    ym.denominator = den;
    LieDims low = lie_dims_from_series(expand(ym, 2));
    out.values[0] = low.values[0];
    out.values[1] = low.values[1];
    return out;
}

mpq_class growth_ratio(const TruncatedSeries& p, std::uint32_t n) {
    if (n == 0 || n > p.cutoff) throw InputError("growth_ratio: index out of range");
    if (p.at(n - 1) == 0) throw InputError("growth_ratio: division by zero coefficient");
    mpq_class q(p.at(n), p.at(n - 1));
    q.canonicalize();
    return q;
}

TruncatedSeries reconstruct_from_lie_dims(const LieDims& dims, std::uint32_t cutoff) {
    std::vector<mpz_class> acc(cutoff + 1);
    acc[0] = 1;
    for (std::uint32_t j = 1; j <= dims.jmax() && j <= cutoff; ++j) {
        if (dims.at(j) == 0) continue;
        // multiply by (1 - t^j)^{-N_j}: coefficients C(N_j - 1 + k, k) at t^{jk}
        std::vector<mpz_class> factor(cutoff + 1);
        mpz_class binom = 1;
        factor[0] = 1;
        for (std::uint32_t k = 1; j * k <= cutoff; ++k) {
            binom = binom * (dims.at(j) - 1 + k) / k;
            factor[j * k] = binom;
        }
        std::vector<mpz_class> next(cutoff + 1);
        for (std::uint32_t i = 0; i <= cutoff; ++i) {
            if (acc[i] == 0) continue;
            for (std::uint32_t k = 0; i + k <= cutoff; ++k)
                if (factor[k] != 0) next[i + k] += acc[i] * factor[k];
        }
        acc = std::move(next);
    }
    return TruncatedSeries(cutoff, std::move(acc));
}

}  // namespace koszulkit
