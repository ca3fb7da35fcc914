#ifndef KOSZULKIT_ALGEBRA_HPP
#define KOSZULKIT_ALGEBRA_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "koszulkit/exactlin.hpp"
#include "koszulkit/tensor.hpp"
#include "koszulkit/tower.hpp"

namespace koszulkit {

/// An invertible symmetric rational metric together with its inverse.
struct Metric {
    DenseQ g;
    DenseQ g_inv;

    explicit Metric(DenseQ m);
    std::size_t dim() const { return g.rows(); }
};

/// A presentation A(E, R) of an N-homogeneous algebra.
struct Presentation {
    std::vector<std::string> generator_names;
    std::uint32_t degree = 2;  // homogeneity degree N
    RelatorSpace relators;     // canonical echelon representative of R
    /// The independent input relators in input order; used wherever a
    /// distinguished (non-echelon) basis of R is wanted.
    std::vector<TensorVector> defining_relators;
    std::string label;
    std::optional<Metric> metric;

    std::uint32_t generator_count() const {
        return static_cast<std::uint32_t>(generator_names.size());
    }

    /// Canonicalizes the relators; dependent input relators are dropped and
    /// listed in relators.dropped_dependent().
    static Presentation make(std::vector<std::string> names, std::uint32_t N,
                             const std::vector<TensorVector>& relators, std::string label = {},
                             std::optional<Metric> metric = std::nullopt);
};

/// The dual presentation A(E*, R_perp) on dual generators.
Presentation dual_presentation(const Presentation& p);

/// True iff every relator of `sub` lies in the ideal generated by `quot`,
/// tested in degree N_sub.
bool quotient_check(const RelatorSpace& sub, const RelatorSpace& quot);

/// Degree-n data of the graded algebra: the ideal slice, its codimension,
/// and the standard-word section (non-pivot words in degree-lexicographic
/// order).
struct GradedComponent {
    std::uint32_t degree = 0;
    Subspace ideal_slice;
    std::uint64_t dim = 0;
    std::vector<std::uint32_t> standard_words;
};

enum class Side { left, right };

struct AlgebraConfig {
    std::uint32_t cutoff = 8;          // hard degree guard for dimension work
    std::uint32_t section_cutoff = 6;  // guard for exact sections and matrices
    std::uint64_t seed = kDefaultSeed;
    enum class Strategy { modular, exact, verify };
    Strategy strategy = Strategy::verify;

    static AlgebraConfig defaults_for(std::uint32_t gens);
};

/// A graded algebra with memoized per-degree data. Components are immutable
/// once computed; the memo caches tolerate concurrent readers (one coarse
/// lock guards all lazily built state).
class GradedAlgebra {
  public:
    explicit GradedAlgebra(Presentation p);
    GradedAlgebra(Presentation p, AlgebraConfig cfg);

    const Presentation& presentation() const { return pres_; }
    const AlgebraConfig& config() const { return cfg_; }
    PrimePair primes() const { return primes_; }
    std::uint32_t gens() const { return pres_.generator_count(); }
    std::uint32_t relation_degree() const { return pres_.degree; }

    /// dim A_n = g^n - dim I_n, computed by the configured field strategy.
    std::uint64_t graded_dim(std::uint32_t n);
    /// Which arithmetic produced graded_dim(n): "modular(p1,p2)" or "exact".
    std::string dim_path(std::uint32_t n);

    std::uint64_t ideal_dim(std::uint32_t n);

    const GradedComponent& standard_section(std::uint32_t n);

    /// Standard-word indices of A_n (no Subspace materialization).
    const std::vector<std::uint32_t>& standard_words(std::uint32_t n);

    /// Coordinates of v modulo I_n on the standard words of its degree.
    SparseVecQ project(const TensorVector& v);

    /// Coordinates of a single word (given by index) of degree n.
    const SparseVecQ& project_word(std::uint32_t n, std::uint64_t word_idx);

    /// Projection matrix E^(x)n -> A_n in standard coordinates.
    SparseMatrix projection_matrix(std::uint32_t n);

    /// Matrix of x -> gen*x (left) or x -> x*gen (right), A_n -> A_{n+1},
    /// in standard-word coordinates.
    SparseMatrix mult_matrix(Side side, std::uint32_t generator, std::uint32_t n);

    /// Exact for degrees within the section guard, two-prime modular above.
    bool ideal_membership(const TensorVector& v);

    /// Canonical basis of the dual Koszul slice J_k (exact).
    std::vector<TensorVector> dual_slice_basis(std::uint32_t k);
    std::uint64_t dual_slice_dim(std::uint32_t k);

    /// Smallest k >= N with J_k = 0, or cap + 1 when none is found by cap.
    std::uint32_t koszul_death_degree(std::uint32_t cap);

    /// Modular ideal towers (which = 0, 1), built through `level`.
    /// The returned tower may be used read-only via reduce_in_scratch.
    IdealTower<ZpOps>& modular_tower(int which, std::uint32_t level);
    IdealTower<QOps>& exact_tower(std::uint32_t level);

    std::uint32_t exact_ambient_guard() const;

  private:
    std::uint64_t graded_dim_locked(std::uint32_t n);
    IdealTower<ZpOps>& modular_tower_locked(int which, std::uint32_t level);
    IdealTower<QOps>& exact_tower_locked(std::uint32_t level);
    const std::vector<std::uint32_t>& standard_words_locked(std::uint32_t n);
    const SparseVecQ& project_word_locked(std::uint32_t n, std::uint64_t word_idx);
    SparseVecQ project_locked(const TensorVector& v);
    std::vector<TensorVector> dual_slice_basis_locked(std::uint32_t k);

    Presentation pres_;
    AlgebraConfig cfg_;
    PrimePair primes_;

    mutable std::recursive_mutex mu_;
    std::unique_ptr<IdealTower<QOps>> exact_tower_;
    std::unique_ptr<IdealTower<ZpOps>> mod_towers_[2];
    std::map<std::uint32_t, std::pair<std::uint64_t, std::string>> dims_;
    std::map<std::uint32_t, GradedComponent> sections_;
    std::map<std::uint32_t, std::vector<std::uint32_t>> std_words_;
    std::map<std::uint32_t, std::vector<TensorVector>> j_bases_;
    std::map<std::uint32_t, std::unordered_map<std::uint64_t, SparseVecQ>> word_proj_;
    std::map<std::tuple<int, std::uint32_t, std::uint32_t>, SparseMatrix> mult_cache_;
};

}  // namespace koszulkit

#endif
