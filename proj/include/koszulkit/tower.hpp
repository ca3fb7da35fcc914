#ifndef KOSZULKIT_TOWER_HPP
#define KOSZULKIT_TOWER_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "koszulkit/elim.hpp"
#include "koszulkit/tensor.hpp"

namespace koszulkit {

/// Degree-by-degree echelon bases of the ideal slices I_n of a two-sided
/// ideal generated by a relator space R in degree N.
///
/// Level n reuses level n-1 through the identity
///   I_n = E (x) I_{n-1} + R (x) E^(n-N):
/// the first summand decomposes as g independent per-first-letter blocks
/// whose echelon rows are the level-(n-1) rows shifted into the block, so
/// only the reduced remainders of the R (x) E^(n-N) rows are stored per
/// level. Normal forms are computed by recursing into the blocks and then
/// cancelling the stored rows; the resulting pivot set is the canonical one
/// under the word-index column order, so standard words agree with the
/// degree-lexicographic section.
template <class Ops>
class IdealTower {
  public:
    using Scalar = typename Ops::Scalar;
    using Row = SparseRow<Ops>;

    IdealTower(Ops ops, std::uint32_t gens, std::uint32_t relation_degree,
               std::vector<Row> relator_basis, std::uint32_t max_level)
        : ops_(ops), g_(gens), n_rel_(relation_degree), max_level_(max_level),
          relator_basis_(std::move(relator_basis)) {}

    std::uint32_t gens() const { return g_; }
    std::uint32_t relation_degree() const { return n_rel_; }
    std::uint32_t built_level() const { return static_cast<std::uint32_t>(levels_.size()); }

    /// Builds all levels up to n; throws ResourceLimit beyond the guard.
    void ensure(std::uint32_t n) {
        if (n > max_level_)
            throw ResourceLimit("ideal tower: degree " + std::to_string(n) +
                                " exceeds the configured guard " + std::to_string(max_level_));
        while (built_level() < n + 1) build_next();
    }

    std::uint64_t ideal_dim(std::uint32_t n) {
        ensure(n);
        return dims_[n];
    }

    std::uint64_t quotient_dim(std::uint32_t n) {
        return tensor_dim(g_, n) - ideal_dim(n);
    }

    /// Reduces the scratch slice [base, base + g^level) to normal form
    /// modulo I_level. Levels through `level` must already be built.
    std::vector<std::uint32_t> reduce_in_scratch(std::uint32_t level,
                                                 std::vector<Scalar>& scratch,
                                                 std::uint32_t base,
                                                 std::vector<std::uint32_t> touched) const {
        if (level < n_rel_ || touched.empty()) return touched;
        std::uint32_t block = tensor_dim(g_, level - 1);
        std::vector<std::uint32_t> out;
        out.reserve(touched.size());
        std::size_t i = 0;
        while (i < touched.size()) {
            std::uint32_t lam = (touched[i] - base) / block;
            std::size_t j = i;
            while (j < touched.size() && (touched[j] - base) / block == lam) ++j;
            std::vector<std::uint32_t> sub(touched.begin() + i, touched.begin() + j);
            sub = reduce_in_scratch(level - 1, scratch, base + lam * block, std::move(sub));
            out.insert(out.end(), sub.begin(), sub.end());
            i = j;
        }
        return levels_[level]->reduce_in_scratch(scratch, base, std::move(out));
    }

    /// Normal form of a sparse vector in level-n coordinates.
    Row reduce(std::uint32_t n, const Row& v) {
        ensure(n);
        std::uint32_t ambient = tensor_dim(g_, n);
        if (scratch_.size() < ambient) scratch_.assign(ambient, Ops::zero());
        std::vector<std::uint32_t> touched;
        touched.reserve(v.size());
        for (const auto& [c, val] : v) {
            scratch_[c] = val;
            touched.push_back(c);
        }
        touched = reduce_in_scratch(n, scratch_, 0, std::move(touched));
        Row out;
        out.reserve(touched.size());
        for (std::uint32_t c : touched) {
            out.emplace_back(c, std::move(scratch_[c]));
            scratch_[c] = Ops::zero();
        }
        return out;
    }

    bool is_pivot(std::uint32_t n, std::uint32_t col) const {
        if (n < n_rel_) return false;
        if (levels_[n]->is_pivot(col)) return true;
        return is_pivot(n - 1, col % tensor_dim(g_, n - 1));
    }

    /// Full pivot set of I_n, ascending. Materializes; small degrees only.
    std::vector<std::uint32_t> pivot_cols(std::uint32_t n) {
        ensure(n);
        std::vector<std::uint32_t> out;
        if (n < n_rel_) return out;
        std::vector<std::uint32_t> lower = pivot_cols(n - 1);
        std::uint32_t block = tensor_dim(g_, n - 1);
        out.reserve(dims_[n]);
        for (std::uint32_t lam = 0; lam < g_; ++lam)
            for (std::uint32_t p : lower) out.push_back(lam * block + p);
        auto fresh = levels_[n]->pivots_sorted();
        out.insert(out.end(), fresh.begin(), fresh.end());
        std::sort(out.begin(), out.end());
        return out;
    }

  private:
    void build_next() {
        std::uint32_t lev = built_level();
        std::uint32_t ambient = tensor_dim(g_, lev);
        levels_.push_back(std::make_unique<EchelonBasis<Ops>>(ops_, ambient));
        dims_.push_back(0);
        if (lev < n_rel_) return;
        if (scratch_.size() < ambient) scratch_.assign(ambient, Ops::zero());
        EchelonBasis<Ops>& eb = *levels_[lev];
        if (lev == n_rel_) {
            for (const auto& r : relator_basis_)
                if (!r.empty()) eb.insert(r);
            dims_[lev] = eb.size();
            return;
        }
        std::uint64_t pad = tensor_dim(g_, lev - n_rel_);
        for (const auto& r : relator_basis_) {
            for (std::uint64_t w = 0; w < pad; ++w) {
                std::vector<std::uint32_t> touched;
                touched.reserve(r.size());
                for (const auto& [c, val] : r) {
                    std::uint32_t col = static_cast<std::uint32_t>(c * pad + w);
                    scratch_[col] = val;
                    touched.push_back(col);
                }
                touched = reduce_in_scratch(lev, scratch_, 0, std::move(touched));
                if (!touched.empty()) {
                    Row nf;
                    nf.reserve(touched.size());
                    for (std::uint32_t c : touched) {
                        nf.emplace_back(c, std::move(scratch_[c]));
                        scratch_[c] = Ops::zero();
                    }
                    eb.insert_reduced(std::move(nf));
                }
            }
        }
        dims_[lev] = static_cast<std::uint64_t>(g_) * dims_[lev - 1] + eb.size();
    }

    Ops ops_;
    std::uint32_t g_;
    std::uint32_t n_rel_;
    std::uint32_t max_level_;
    std::vector<Row> relator_basis_;
    std::vector<std::unique_ptr<EchelonBasis<Ops>>> levels_;
    std::vector<std::uint64_t> dims_;
    std::vector<Scalar> scratch_;
};

}  // namespace koszulkit

#endif
