#ifndef KOSZULKIT_SERIES_HPP
#define KOSZULKIT_SERIES_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "koszulkit/field.hpp"

namespace koszulkit {

/// Integer polynomial by ascending coefficients; trailing zeros allowed.
using IntPoly = std::vector<mpz_class>;

/// Exact integer power series truncated at `cutoff` (inclusive).
struct TruncatedSeries {
    std::uint32_t cutoff = 0;
    std::vector<mpz_class> coefficients;  // size cutoff + 1

    TruncatedSeries() = default;
    TruncatedSeries(std::uint32_t cut, std::vector<mpz_class> c);
    const mpz_class& at(std::uint32_t n) const { return coefficients.at(n); }
    bool operator==(const TruncatedSeries&) const = default;
};

/// A rational generating function num/den with den(0) != 0.
struct RationalSeries {
    IntPoly numerator;
    IntPoly denominator;
};

/// Graded Lie algebra dimensions N_1..N_jmax.
struct LieDims {
    std::vector<mpz_class> values;  // values[j-1] = N_j
    std::uint32_t jmax() const { return static_cast<std::uint32_t>(values.size()); }
    const mpz_class& at(std::uint32_t j) const { return values.at(j - 1); }
    bool operator==(const LieDims&) const = default;
};

/// Power-series expansion of num/den through t^cutoff by the denominator's
/// linear recurrence. Throws InputError if den(0) = 0 or the expansion is
/// not integral.
TruncatedSeries expand(const RationalSeries& r, std::uint32_t cutoff);

/// True iff p(t) * q(t) = 1 + O(t^{cutoff+1}).
bool pq_one_check(const TruncatedSeries& p, const IntPoly& q);

/// Moebius function; 0 on non-squarefree n, else (-1)^{#prime factors}.
int mobius(std::uint64_t n);

/// mobius(1..n) by sieve.
std::vector<int> mobius_sieve(std::uint64_t n);

/// Witt inversion: recovers N_j from an enveloping-algebra series with
/// p_0 = 1 via a_n = n p_n - sum a_k p_{n-k} and Moebius inversion of
/// a_n = sum_{d|n} d N_d. Throws InputError when some N_j is negative or
/// non-integral (the input is not an enveloping series).
LieDims lie_dims_from_series(const TruncatedSeries& p);

/// Closed form for the Yang-Mills N_j via the integer power sums
/// p_k = t1^k + t2^k of the roots of t^2 - (s+1) t + 1:
///   p_0 = 2, p_1 = s+1, p_k = (s+1) p_{k-1} - p_{k-2},
///   N_j = (1/j) sum_{k|j} mu(j/k) p_k      (valid for j > 2).
/// Entries j = 1, 2 are filled from the series route: the closed form
/// misses the (1-t^2)^{-1} factor there, so its naive j = 2 value lands
/// one below the true one (5 vs 6 for s = 3).
LieDims lie_dims_closed_form(std::uint32_t s, std::uint32_t jmax);

/// p_n / p_{n-1} as an exact rational.
mpq_class growth_ratio(const TruncatedSeries& p, std::uint32_t n);

/// Expansion of prod_j (1 - t^j)^{-N_j} through t^cutoff; the PBW
/// reconstruction oracle.
TruncatedSeries reconstruct_from_lie_dims(const LieDims& dims, std::uint32_t cutoff);

}  // namespace koszulkit

#endif
