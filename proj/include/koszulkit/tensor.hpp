#ifndef KOSZULKIT_TENSOR_HPP
#define KOSZULKIT_TENSOR_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "koszulkit/exactlin.hpp"
#include "koszulkit/sparse.hpp"

namespace koszulkit {

/// A monomial in the generators: a sequence of generator indices.
using Word = std::vector<std::uint32_t>;

/// Big-endian positional index of a word among all words of its length:
/// sum of letter_i * g^(n-1-i), a bijection onto [0, g^n).
std::uint64_t word_index(const Word& w, std::uint32_t generator_count);

/// Inverse of word_index for a given length.
Word word_from_index(std::uint64_t index, std::uint32_t length, std::uint32_t generator_count);

/// g^n with an overflow/armageddon guard (must fit in 32 bits for the
/// elimination kernel's column indices).
std::uint32_t tensor_dim(std::uint32_t generator_count, std::uint32_t degree);

/// A homogeneous element of E^(tensor n): sparse word-index coefficients.
struct TensorVector {
    std::uint32_t degree = 0;
    SparseVecQ coeffs;  // sorted by word index

    static TensorVector from_terms(std::uint32_t generator_count, std::uint32_t degree,
                                   const std::vector<std::pair<Word, mpq_class>>& terms);
    static TensorVector single_word(std::uint32_t generator_count, const Word& w);
    bool is_zero() const { return coeffs.empty(); }
};

/// Concatenation (tensor product) of two homogeneous tensors.
TensorVector concat(const TensorVector& a, const TensorVector& b, std::uint32_t generator_count);

/// The relator subspace R of E^(tensor N) defining an N-homogeneous algebra.
///
/// Construction canonicalizes the input: dependent relators are dropped (and
/// reported), and the stored space is the unique echelon representative.
class RelatorSpace {
  public:
    RelatorSpace() = default;
    RelatorSpace(std::uint32_t generator_count, std::uint32_t homogeneity_degree,
                 const std::vector<TensorVector>& relators);

    std::uint32_t generator_count() const { return gens_; }
    std::uint32_t degree() const { return n_; }
    const Subspace& space() const { return space_; }
    std::uint32_t dim() const { return space_.dim(); }

    /// Indices of input relators dropped as rationally dependent.
    const std::vector<std::size_t>& dropped_dependent() const { return dropped_; }

  private:
    std::uint32_t gens_ = 0;
    std::uint32_t n_ = 2;
    Subspace space_;
    std::vector<std::size_t> dropped_;
};

/// Spanning rows of E^i (x) R (x) E^j inside E^n (i + deg R + j = n),
/// generated from the canonical basis of R; sparse and deterministic.
std::vector<SparseVecQ> shift_rows(const RelatorSpace& r, std::uint32_t i, std::uint32_t n);

/// The canonical subspace E^i (x) R (x) E^(n-N-i) of E^n.
Subspace shift_embed(const RelatorSpace& r, std::uint32_t i, std::uint32_t n);

/// Degree-n slice of the two-sided ideal (R): the sum of all shifts.
/// Zero subspace when n < N. Computed by one combined elimination.
Subspace ideal_slice(const RelatorSpace& r, std::uint32_t n);

/// Degree-n dual Koszul slice J_n: the intersection of all shifts, with
/// J_n = E^n for n < N. Pairs perfectly with the dual algebra component.
Subspace dual_koszul_slice(const RelatorSpace& r, std::uint32_t n);

}  // namespace koszulkit

#endif
