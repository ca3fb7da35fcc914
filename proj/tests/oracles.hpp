// Test-only oracles, deliberately independent of the library's elimination
// and series code paths.
#ifndef KOSZULKIT_TEST_ORACLES_HPP
#define KOSZULKIT_TEST_ORACLES_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "koszulkit/sparse.hpp"

namespace oracles {

// Plain textbook Gaussian elimination over Q with division and partial
// pivoting on a dense matrix.
inline std::uint64_t dense_rank_q(std::vector<std::vector<mpq_class>> a) {
    if (a.empty()) return 0;
    std::size_t nr = a.size(), nc = a[0].size();
    std::uint64_t rank = 0;
    for (std::size_t col = 0; col < nc && rank < nr; ++col) {
        std::size_t piv = rank;
        while (piv < nr && a[piv][col] == 0) ++piv;
        if (piv == nr) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t i = rank + 1; i < nr; ++i) {
            if (a[i][col] == 0) continue;
            mpq_class f = a[i][col] / a[rank][col];
            for (std::size_t j = col; j < nc; ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

inline std::vector<std::vector<mpq_class>> densify(const koszulkit::SparseMatrix& m) {
    std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
    for (const auto& e : m.entries()) a[e.row][e.col] = e.value;
    return a;
}

// Yang-Mills relator rows for the Euclidean metric in s+1 generators,
// written out directly from the commutator expansion:
//   r_nu = sum_lambda (lambda lambda nu + nu lambda lambda - 2 lambda nu lambda).
inline std::vector<koszulkit::SparseVecQ> ym_relator_rows_euclid(std::uint32_t s) {
    std::uint32_t g = s + 1;
    auto idx = [g](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
        return (a * g + b) * g + c;
    };
    std::vector<koszulkit::SparseVecQ> rows;
    for (std::uint32_t nu = 0; nu < g; ++nu) {
        koszulkit::SparseVecQ row;
        for (std::uint32_t lam = 0; lam < g; ++lam) {
            row.emplace_back(idx(lam, lam, nu), 1);
            row.emplace_back(idx(nu, lam, lam), 1);
            row.emplace_back(idx(lam, nu, lam), -2);
        }
        rows.push_back(koszulkit::normalize_sparse_vec(std::move(row)));
    }
    return rows;
}

// Coefficients of num/den as a power series, by naive convolution solving.
inline std::vector<mpq_class> series_oracle(const std::vector<long>& num,
                                            const std::vector<long>& den, std::size_t cutoff) {
    std::vector<mpq_class> c(cutoff + 1);
    for (std::size_t k = 0; k <= cutoff; ++k) {
        mpq_class acc = k < num.size() ? mpq_class(num[k]) : mpq_class(0);
        for (std::size_t i = 1; i <= k && i < den.size(); ++i) acc -= mpq_class(den[i]) * c[k - i];
        c[k] = acc / den[0];
    }
    return c;
}

}  // namespace oracles

#endif
