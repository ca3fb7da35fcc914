#ifndef KOSZULKIT_EXACTLIN_HPP
#define KOSZULKIT_EXACTLIN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "koszulkit/elim.hpp"
#include "koszulkit/field.hpp"
#include "koszulkit/sparse.hpp"

namespace koszulkit {

/// A sub-vector-space of a coordinate space, stored as its unique reduced
/// row-echelon basis over Q. Two subspaces are equal iff their bases are
/// identical entry for entry.
class Subspace {
  public:
    Subspace() = default;
    explicit Subspace(std::uint32_t ambient) : ambient_(ambient) {}

    static Subspace zero(std::uint32_t ambient) { return Subspace(ambient); }
    static Subspace full(std::uint32_t ambient);
    static Subspace from_spanning_rows(std::vector<SparseVecQ> rows, std::uint32_t ambient);

    std::uint32_t ambient() const { return ambient_; }
    std::uint32_t dim() const { return static_cast<std::uint32_t>(basis_.size()); }
    const std::vector<SparseVecQ>& basis() const { return basis_; }
    const std::vector<std::uint32_t>& pivot_cols() const { return pivots_; }

    bool contains(const SparseVecQ& v) const;
    bool contains_subspace(const Subspace& u) const;
    bool operator==(const Subspace& other) const;
    bool operator!=(const Subspace& other) const { return !(*this == other); }

    /// Internal: adopt rows already in canonical reduced echelon form.
    static Subspace adopt_rref(std::vector<SparseVecQ> rows, std::vector<std::uint32_t> pivots,
                               std::uint32_t ambient);

  private:
    std::uint32_t ambient_ = 0;
    std::vector<SparseVecQ> basis_;
    std::vector<std::uint32_t> pivots_;
};

/// Row rank over the requested field. Modular mode computes the rank over
/// F_p, which never exceeds the rational rank; it throws ModularDegeneracy
/// when the prime divides a denominator of the input.
std::uint64_t rank(const SparseMatrix& m, const FieldSpec& f);

/// Canonical basis of the right null space { x : m x = 0 }. In modular mode
/// the basis is the canonical F_p one with entries lifted to [0, p).
Subspace kernel_basis(const SparseMatrix& m, const FieldSpec& f);

Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const Subspace& u, const Subspace& v);

/// Covectors vanishing on u, in dual coordinates; an involution.
Subspace annihilator(const Subspace& u);

bool contains(const Subspace& u, const SparseVecQ& w);

/// Exact rank by dense fraction-free (Bareiss) elimination over Z after
/// clearing row denominators. The escalation path for certified ranks;
/// guarded against large inputs.
std::uint64_t bareiss_rank(const SparseMatrix& m, std::uint64_t max_cells = 16'000'000);

/// Certificate-grade rank: two independent ~60-bit primes must agree,
/// otherwise the computation escalates to the exact path.
struct CertifiedRank {
    std::uint64_t value = 0;
    bool escalated = false;
    std::string path;  // "modular(p1,p2)" or "exact"
};
CertifiedRank certified_rank(const SparseMatrix& m, const PrimePair& primes);

}  // namespace koszulkit

#endif
