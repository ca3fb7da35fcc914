#include "koszulkit/exactlin.hpp"

#include <algorithm>
#include <map>

namespace koszulkit {

namespace {

// Canonical RREF of a row collection over Q; returns (rows, pivots).
std::pair<std::vector<SparseVecQ>, std::vector<std::uint32_t>> rref_q(
    const std::vector<SparseVecQ>& rows, std::uint32_t ambient) {
    EchelonBasis<QOps> eb(QOps{}, ambient);
    for (const auto& r : rows) eb.insert(convert_row(QOps{}, r));
    eb.make_rref();
    return {eb.rows(), eb.pivots_sorted()};
}

// Kernel vectors of the row space given by canonical RREF rows: one vector
// per non-pivot column j, with x_j = 1 and x_pivot = -R[pivot][j].
std::vector<SparseVecQ> kernel_from_rref(const std::vector<SparseVecQ>& rref,
                                         const std::vector<std::uint32_t>& pivots,
                                         std::uint32_t ambient) {
    std::vector<bool> is_piv(ambient, false);
    for (auto c : pivots) is_piv[c] = true;
    std::map<std::uint32_t, SparseVecQ> per_free;
    for (std::uint32_t j = 0; j < ambient; ++j)
        if (!is_piv[j]) per_free[j].emplace_back(j, 1);
    for (std::size_t i = 0; i < rref.size(); ++i) {
        std::uint32_t piv = pivots[i];
        for (std::size_t k = 1; k < rref[i].size(); ++k) {
            const auto& [j, v] = rref[i][k];
            if (!is_piv[j]) per_free[j].emplace_back(piv, -v);
        }
    }
    std::vector<SparseVecQ> out;
    out.reserve(per_free.size());
    for (auto& [j, vec] : per_free) out.push_back(normalize_sparse_vec(std::move(vec)));
    return out;
}

std::uint64_t rank_mod_p(const SparseMatrix& m, std::uint64_t p) {
    ZpOps ops(p);
    EchelonBasis<ZpOps> eb(ops, m.cols());
    for (const auto& r : m.row_vectors()) eb.insert(convert_row(ops, r));
    return eb.size();
}

}  // namespace

Subspace Subspace::full(std::uint32_t ambient) {
    std::vector<SparseVecQ> rows(ambient);
    std::vector<std::uint32_t> pivots(ambient);
    for (std::uint32_t i = 0; i < ambient; ++i) {
        rows[i] = {{i, mpq_class(1)}};
        pivots[i] = i;
    }
    return adopt_rref(std::move(rows), std::move(pivots), ambient);
}

Subspace Subspace::from_spanning_rows(std::vector<SparseVecQ> rows, std::uint32_t ambient) {
    for (auto& r : rows) r = normalize_sparse_vec(std::move(r));
    auto [rref, pivots] = rref_q(rows, ambient);
    return adopt_rref(std::move(rref), std::move(pivots), ambient);
}

Subspace Subspace::adopt_rref(std::vector<SparseVecQ> rows, std::vector<std::uint32_t> pivots,
                              std::uint32_t ambient) {
    Subspace s(ambient);
    s.basis_ = std::move(rows);
    s.pivots_ = std::move(pivots);
    return s;
}

bool Subspace::contains(const SparseVecQ& v) const {
    for (const auto& [c, val] : v) {
        (void)val;
        if (c >= ambient_) throw InputError("vector ambient mismatch");
    }
    EchelonBasis<QOps> eb(QOps{}, ambient_);
    for (const auto& r : basis_) eb.insert_reduced(r);
    return eb.reduce(convert_row(QOps{}, normalize_sparse_vec(v))).empty();
}

bool Subspace::contains_subspace(const Subspace& u) const {
    if (u.ambient_ != ambient_) throw InputError("ambient mismatch");
    EchelonBasis<QOps> eb(QOps{}, ambient_);
    for (const auto& r : basis_) eb.insert_reduced(r);
    for (const auto& r : u.basis_)
        if (!eb.reduce(r).empty()) return false;
    return true;
}

bool Subspace::operator==(const Subspace& other) const {
    return ambient_ == other.ambient_ && pivots_ == other.pivots_ && basis_ == other.basis_;
}

std::uint64_t rank(const SparseMatrix& m, const FieldSpec& f) {
    if (f.is_modular()) return rank_mod_p(m, f.prime);
    EchelonBasis<QOps> eb(QOps{}, m.cols());
    for (const auto& r : m.row_vectors()) eb.insert(convert_row(QOps{}, r));
    return eb.size();
}

Subspace kernel_basis(const SparseMatrix& m, const FieldSpec& f) {
    if (!f.is_modular()) {
        auto [rref, pivots] = rref_q(m.row_vectors(), m.cols());
        auto kv = kernel_from_rref(rref, pivots, m.cols());
        return Subspace::from_spanning_rows(std::move(kv), m.cols());
    }
    ZpOps ops(f.prime);
    EchelonBasis<ZpOps> eb(ops, m.cols());
    for (const auto& r : m.row_vectors()) eb.insert(convert_row(ops, r));
    eb.make_rref();
    std::vector<SparseVecQ> rref;
    rref.reserve(eb.rows().size());
    for (const auto& row : eb.rows()) {
        SparseVecQ q;
        q.reserve(row.size());
        for (const auto& [c, v] : row) q.emplace_back(c, ops.to_mpq(v));
        rref.push_back(std::move(q));
    }
    auto kv = kernel_from_rref(rref, eb.pivots_sorted(), m.cols());
    // canonicalize over F_p, then lift
    EchelonBasis<ZpOps> keb(ops, m.cols());
    for (const auto& r : kv) keb.insert(convert_row(ops, r));
    keb.make_rref();
    std::vector<SparseVecQ> krows;
    for (const auto& row : keb.rows()) {
        SparseVecQ q;
        for (const auto& [c, v] : row) q.emplace_back(c, ops.to_mpq(v));
        krows.push_back(std::move(q));
    }
    return Subspace::adopt_rref(std::move(krows), keb.pivots_sorted(), m.cols());
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
    if (u.ambient() != v.ambient()) throw InputError("subspace_sum: ambient mismatch");
    std::vector<SparseVecQ> rows = u.basis();
    rows.insert(rows.end(), v.basis().begin(), v.basis().end());
    return Subspace::from_spanning_rows(std::move(rows), u.ambient());
}

Subspace annihilator(const Subspace& u) {
    SparseMatrix m = SparseMatrix::from_rows(u.basis(), u.ambient());
    return kernel_basis(m, FieldSpec::exact());
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
    if (u.ambient() != v.ambient()) throw InputError("subspace_intersect: ambient mismatch");
    return annihilator(subspace_sum(annihilator(u), annihilator(v)));
}

bool contains(const Subspace& u, const SparseVecQ& w) { return u.contains(w); }

std::uint64_t bareiss_rank(const SparseMatrix& m, std::uint64_t max_cells) {
    const std::uint64_t nr = m.rows(), nc = m.cols();
    if (nr * nc > max_cells)
        throw ResourceLimit("bareiss_rank: matrix too large for the dense exact path");
    std::vector<mpz_class> a(nr * nc);
    {
        // clear denominators row by row; scaling rows keeps the rank
        std::uint64_t i = 0;
        for (const auto& rv : m.row_vectors()) {
            mpz_class l = 1;
            for (const auto& [c, v] : rv) {
                (void)c;
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
            }
            for (const auto& [c, v] : rv) {
                mpq_class scaled = v * l;
                a[i * nc + c] = scaled.get_num();
            }
            ++i;
        }
    }
    mpz_class prev = 1;
    std::uint64_t rank_found = 0;
    for (std::uint64_t col = 0; col < nc && rank_found < nr; ++col) {
        std::uint64_t piv = rank_found;
        while (piv < nr && a[piv * nc + col] == 0) ++piv;
        if (piv == nr) continue;
        if (piv != rank_found)
            for (std::uint64_t j = col; j < nc; ++j)
                std::swap(a[piv * nc + j], a[rank_found * nc + j]);
        const std::uint64_t k = rank_found;
        for (std::uint64_t i = k + 1; i < nr; ++i) {
            for (std::uint64_t j = col + 1; j < nc; ++j) {
                mpz_class t = a[i * nc + j] * a[k * nc + col] - a[i * nc + col] * a[k * nc + j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i * nc + j] = std::move(t);
            }
            a[i * nc + col] = 0;
        }
        prev = a[k * nc + col];
        ++rank_found;
    }
    return rank_found;
}

CertifiedRank certified_rank(const SparseMatrix& m, const PrimePair& primes) {
    CertifiedRank out;
    bool degenerate = false;
    std::uint64_t r1 = 0, r2 = 0;
    try {
        r1 = rank_mod_p(m, primes.p1);
        r2 = rank_mod_p(m, primes.p2);
    } catch (const ModularDegeneracy&) {
        degenerate = true;
    }
    if (!degenerate && r1 == r2) {
        out.value = r1;
        out.path = "modular(" + std::to_string(primes.p1) + "," + std::to_string(primes.p2) + ")";
        return out;
    }
    out.value = rank(m, FieldSpec::exact());
    out.escalated = true;
    out.path = "exact";
    return out;
}

}  // namespace koszulkit
