#include "koszulkit/tensor.hpp"

#include <limits>

namespace koszulkit {

std::uint64_t word_index(const Word& w, std::uint32_t generator_count) {
    if (generator_count == 0) throw InputError("word_index: no generators");
    std::uint64_t idx = 0;
    for (std::uint32_t letter : w) {
        if (letter >= generator_count) throw InputError("word_index: letter out of range");
        idx = idx * generator_count + letter;
    }
    return idx;
}

Word word_from_index(std::uint64_t index, std::uint32_t length, std::uint32_t generator_count) {
    Word w(length);
    for (std::uint32_t i = length; i-- > 0;) {
        w[i] = static_cast<std::uint32_t>(index % generator_count);
        index /= generator_count;
    }
    if (index != 0) throw InputError("word_from_index: index out of range");
    return w;
}

std::uint32_t tensor_dim(std::uint32_t generator_count, std::uint32_t degree) {
    std::uint64_t d = 1;
    for (std::uint32_t i = 0; i < degree; ++i) {
        d *= generator_count;
        if (d > std::numeric_limits<std::uint32_t>::max())
            throw ResourceLimit("tensor power exceeds the supported ambient size");
    }
    return static_cast<std::uint32_t>(d);
}

TensorVector TensorVector::from_terms(std::uint32_t generator_count, std::uint32_t degree,
                                      const std::vector<std::pair<Word, mpq_class>>& terms) {
    TensorVector v;
    v.degree = degree;
    SparseVecQ raw;
    raw.reserve(terms.size());
    for (const auto& [w, c] : terms) {
        if (w.size() != degree) throw InputError("inhomogeneous term in tensor");
        raw.emplace_back(static_cast<std::uint32_t>(word_index(w, generator_count)), c);
    }
    v.coeffs = normalize_sparse_vec(std::move(raw));
    return v;
}

TensorVector TensorVector::single_word(std::uint32_t generator_count, const Word& w) {
    return from_terms(generator_count, static_cast<std::uint32_t>(w.size()), {{w, 1}});
}

TensorVector concat(const TensorVector& a, const TensorVector& b, std::uint32_t generator_count) {
    TensorVector out;
    out.degree = a.degree + b.degree;
    std::uint64_t shift = tensor_dim(generator_count, b.degree);
    (void)tensor_dim(generator_count, out.degree);
    SparseVecQ raw;
    raw.reserve(a.coeffs.size() * b.coeffs.size());
    for (const auto& [ia, va] : a.coeffs)
        for (const auto& [ib, vb] : b.coeffs)
            raw.emplace_back(static_cast<std::uint32_t>(ia * shift + ib), va * vb);
    out.coeffs = normalize_sparse_vec(std::move(raw));
    return out;
}

RelatorSpace::RelatorSpace(std::uint32_t generator_count, std::uint32_t homogeneity_degree,
                           const std::vector<TensorVector>& relators)
    : gens_(generator_count), n_(homogeneity_degree) {
    if (generator_count == 0) throw InputError("RelatorSpace: no generators");
    if (homogeneity_degree < 2) throw InputError("RelatorSpace: homogeneity degree must be >= 2");
    std::uint32_t ambient = tensor_dim(gens_, n_);
    EchelonBasis<QOps> eb(QOps{}, ambient);
    for (std::size_t i = 0; i < relators.size(); ++i) {
        if (relators[i].degree != n_)
            throw InputError("RelatorSpace: relator of wrong degree at index " + std::to_string(i));
        if (!eb.insert(convert_row(QOps{}, relators[i].coeffs)) && !relators[i].is_zero())
            dropped_.push_back(i);
    }
    eb.make_rref();
    space_ = Subspace::adopt_rref(eb.rows(), eb.pivots_sorted(), ambient);
}

std::vector<SparseVecQ> shift_rows(const RelatorSpace& r, std::uint32_t i, std::uint32_t n) {
    if (i + r.degree() > n) throw InputError("shift_rows: degree underflow");
    std::uint32_t g = r.generator_count();
    std::uint32_t j = n - r.degree() - i;
    std::uint64_t left = tensor_dim(g, i), right = tensor_dim(g, j);
    (void)tensor_dim(g, n);
    std::vector<SparseVecQ> rows;
    rows.reserve(left * right * r.dim());
    std::uint64_t rel_shift = tensor_dim(g, r.degree());
    for (std::uint64_t a = 0; a < left; ++a) {
        for (const auto& base : r.space().basis()) {
            for (std::uint64_t b = 0; b < right; ++b) {
                SparseVecQ row;
                row.reserve(base.size());
                for (const auto& [c, v] : base)
                    row.emplace_back(static_cast<std::uint32_t>((a * rel_shift + c) * right + b), v);
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

Subspace shift_embed(const RelatorSpace& r, std::uint32_t i, std::uint32_t n) {
    return Subspace::from_spanning_rows(shift_rows(r, i, n), tensor_dim(r.generator_count(), n));
}

Subspace ideal_slice(const RelatorSpace& r, std::uint32_t n) {
    std::uint32_t ambient = tensor_dim(r.generator_count(), n);
    if (n < r.degree() || r.dim() == 0) return Subspace::zero(ambient);
    std::vector<SparseVecQ> rows;
    for (std::uint32_t i = 0; i + r.degree() <= n; ++i) {
        auto part = shift_rows(r, i, n);
        rows.insert(rows.end(), std::make_move_iterator(part.begin()),
                    std::make_move_iterator(part.end()));
    }
    return Subspace::from_spanning_rows(std::move(rows), ambient);
}

Subspace dual_koszul_slice(const RelatorSpace& r, std::uint32_t n) {
    std::uint32_t ambient = tensor_dim(r.generator_count(), n);
    if (n < r.degree()) return Subspace::full(ambient);
    Subspace acc = shift_embed(r, 0, n);
    for (std::uint32_t i = 1; i + r.degree() <= n && acc.dim() > 0; ++i)
        acc = subspace_intersect(acc, shift_embed(r, i, n));
    return acc;
}

}  // namespace koszulkit
