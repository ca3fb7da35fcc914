#ifndef KOSZULKIT_ELIM_HPP
#define KOSZULKIT_ELIM_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "koszulkit/field.hpp"
#include "koszulkit/sparse.hpp"

namespace koszulkit {

/// Scalar operations for elimination over Q.
struct QOps {
    using Scalar = mpq_class;
    static bool is_zero(const Scalar& a) { return a == 0; }
    static Scalar zero() { return {}; }
    static Scalar one() { return 1; }
    // target -= coef * val
    static void submul(Scalar& target, const Scalar& coef, const Scalar& val) {
        target -= coef * val;
    }
    static Scalar div(const Scalar& a, const Scalar& b) { return a / b; }
    static Scalar from_mpq(const mpq_class& q) { return q; }
    static mpq_class to_mpq(const Scalar& a) { return a; }
};

/// Scalar operations for elimination over Z/p.
struct ZpOps {
    Zp f;
    using Scalar = std::uint64_t;
    explicit ZpOps(std::uint64_t p) : f(p) {}
    static bool is_zero(Scalar a) { return a == 0; }
    static Scalar zero() { return 0; }
    static Scalar one() { return 1; }
    void submul(Scalar& target, Scalar coef, Scalar val) const {
        target = f.sub(target, f.mul(coef, val));
    }
    Scalar div(Scalar a, Scalar b) const { return f.mul(a, f.inv(b)); }
    Scalar from_mpq(const mpq_class& q) const { return f.reduce(q); }
    mpq_class to_mpq(Scalar a) const { return mpq_class(static_cast<unsigned long>(a)); }
};

template <class Ops>
using SparseRow = std::vector<std::pair<std::uint32_t, typename Ops::Scalar>>;

/// A growing row-echelon basis of a subspace of a coordinate space.
///
/// Rows are kept with their leading (smallest-column) entry as pivot,
/// normalized to 1. Reduction works on a dense scratch with a min-heap of
/// touched columns, so the cost per operation is proportional to the fill
/// actually encountered. The pivot set of the fully reduced basis is the
/// canonical one for the row space, independent of insertion order.
template <class Ops>
class EchelonBasis {
  public:
    using Scalar = typename Ops::Scalar;
    using Row = SparseRow<Ops>;

    EchelonBasis(Ops ops, std::uint32_t ambient)
        : ops_(std::move(ops)), ambient_(ambient), row_of_pivot_(ambient, -1) {}

    std::uint32_t ambient() const { return ambient_; }
    std::size_t size() const { return rows_.size(); }
    const Ops& ops() const { return ops_; }
    const std::vector<Row>& rows() const { return rows_; }

    bool is_pivot(std::uint32_t col) const { return row_of_pivot_[col] >= 0; }

    std::vector<std::uint32_t> pivots_sorted() const {
        std::vector<std::uint32_t> p;
        p.reserve(rows_.size());
        for (std::uint32_t c = 0; c < ambient_; ++c)
            if (row_of_pivot_[c] >= 0) p.push_back(c);
        return p;
    }

    /// Reduces the dense scratch slice [base, base + ambient) against this
    /// basis. `touched` lists the (absolute, sorted) columns currently
    /// nonzero in that slice; the return value is the surviving support,
    /// sorted. Scratch cells outside the returned support are left zero.
    std::vector<std::uint32_t> reduce_in_scratch(std::vector<Scalar>& scratch,
                                                 std::uint32_t base,
                                                 std::vector<std::uint32_t> touched) const {
        std::vector<std::uint32_t> heap = std::move(touched);
        std::make_heap(heap.begin(), heap.end(), std::greater<>());
        std::vector<std::uint32_t> out;
        std::uint32_t prev = UINT32_MAX;
        while (!heap.empty()) {
            std::pop_heap(heap.begin(), heap.end(), std::greater<>());
            std::uint32_t c = heap.back();
            heap.pop_back();
            if (c == prev) continue;
            prev = c;
            Scalar& cell = scratch[c];
            if (Ops::is_zero(cell)) continue;
            std::int64_t ri = row_of_pivot_[c - base];
            if (ri < 0) {
                out.push_back(c);
                continue;
            }
            Scalar coef = cell;
            cell = Ops::zero();
            const Row& row = rows_[static_cast<std::size_t>(ri)];
            for (std::size_t k = 1; k < row.size(); ++k) {
                std::uint32_t tc = base + row[k].first;
                Scalar& t = scratch[tc];
                bool was_zero = Ops::is_zero(t);
                ops_.submul(t, coef, row[k].second);
                if (was_zero && !Ops::is_zero(t)) {
                    heap.push_back(tc);
                    std::push_heap(heap.begin(), heap.end(), std::greater<>());
                }
            }
        }
        return out;
    }

    /// Normal form of a sparse vector.
    Row reduce(const Row& v) {
        ensure_scratch();
        std::vector<std::uint32_t> touched = load(v);
        touched = reduce_in_scratch(scratch_, 0, std::move(touched));
        return extract(touched);
    }

    /// Inserts a vector; returns true when it enlarges the span.
    bool insert(const Row& v) {
        Row nf = reduce(v);
        if (nf.empty()) return false;
        insert_reduced(std::move(nf));
        return true;
    }

    /// Inserts a vector already in normal form (nonempty, sorted).
    void insert_reduced(Row nf) {
        normalize(nf);
        row_of_pivot_[nf.front().first] = static_cast<std::int64_t>(rows_.size());
        rows_.push_back(std::move(nf));
    }

    /// Reduce the scratch slice, then insert any surviving remainder.
    /// Clears the touched scratch cells. Returns true if rank grew.
    bool insert_from_scratch(std::vector<Scalar>& scratch, std::uint32_t base,
                             std::vector<std::uint32_t> touched) {
        auto out = reduce_in_scratch(scratch, base, std::move(touched));
        if (out.empty()) return false;
        Row nf;
        nf.reserve(out.size());
        for (std::uint32_t c : out) {
            nf.emplace_back(c - base, std::move(scratch[c]));
            scratch[c] = Ops::zero();
        }
        insert_reduced(std::move(nf));
        return true;
    }

    /// Back-reduces every row so the basis becomes the canonical reduced
    /// echelon form, rows sorted by pivot.
    void make_rref() {
        std::vector<std::uint32_t> order = pivots_sorted();
        ensure_scratch();
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            Row& row = rows_[static_cast<std::size_t>(row_of_pivot_[*it])];
            Row tail(row.begin() + 1, row.end());
            std::vector<std::uint32_t> touched = load(tail);
            touched = reduce_in_scratch(scratch_, 0, std::move(touched));
            Row reduced_tail = extract(touched);
            row.resize(1);
            row.insert(row.end(), reduced_tail.begin(), reduced_tail.end());
        }
        std::vector<Row> sorted;
        sorted.reserve(rows_.size());
        for (std::uint32_t c : order) {
            sorted.push_back(std::move(rows_[static_cast<std::size_t>(row_of_pivot_[c])]));
            row_of_pivot_[c] = static_cast<std::int64_t>(sorted.size()) - 1;
        }
        rows_ = std::move(sorted);
    }

  private:
    void ensure_scratch() {
        if (scratch_.size() < ambient_) scratch_.assign(ambient_, Ops::zero());
    }

    std::vector<std::uint32_t> load(const Row& v) {
        std::vector<std::uint32_t> touched;
        touched.reserve(v.size());
        for (const auto& [c, val] : v) {
            scratch_[c] = val;
            touched.push_back(c);
        }
        return touched;
    }

    Row extract(const std::vector<std::uint32_t>& cols) {
        Row out;
        out.reserve(cols.size());
        for (std::uint32_t c : cols) {
            out.emplace_back(c, std::move(scratch_[c]));
            scratch_[c] = Ops::zero();
        }
        return out;
    }

    void normalize(Row& row) const {
        Scalar lead = row.front().second;
        if (Ops::is_zero(lead)) throw InternalError("EchelonBasis: zero leading coefficient");
        for (auto& [c, val] : row) val = ops_.div(val, lead);
    }

    Ops ops_;
    std::uint32_t ambient_;
    std::vector<Row> rows_;
    std::vector<std::int64_t> row_of_pivot_;
    std::vector<Scalar> scratch_;
};

/// Converts a rational sparse row into the scalar type of Ops.
template <class Ops>
SparseRow<Ops> convert_row(const Ops& ops, const SparseVecQ& v) {
    SparseRow<Ops> out;
    out.reserve(v.size());
    for (const auto& [c, val] : v) {
        auto s = ops.from_mpq(val);
        if (!Ops::is_zero(s)) out.emplace_back(c, s);
    }
    return out;
}

}  // namespace koszulkit

#endif
