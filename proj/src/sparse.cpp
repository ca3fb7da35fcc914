#include "koszulkit/sparse.hpp"

#include <algorithm>

namespace koszulkit {

SparseVecQ normalize_sparse_vec(SparseVecQ v) {
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVecQ out;
    out.reserve(v.size());
    for (auto& [c, val] : v) {
        if (!out.empty() && out.back().first == c)
            out.back().second += val;
        else
            out.emplace_back(c, val);
    }
    std::erase_if(out, [](const auto& e) { return e.second == 0; });
    return out;
}

void SparseMatrix::add(std::uint32_t row, std::uint32_t col, mpq_class value) {
    entries_.push_back({row, col, std::move(value)});
    finalized_ = false;
}

void SparseMatrix::add_row(std::uint32_t row, const SparseVecQ& v) {
    for (const auto& [c, val] : v) add(row, c, val);
}

void SparseMatrix::finalize() {
    std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    std::vector<Entry> out;
    out.reserve(entries_.size());
    for (auto& e : entries_) {
        if (e.row >= rows_ || e.col >= cols_)
            throw InputError("SparseMatrix: entry index out of range");
        if (!out.empty() && out.back().row == e.row && out.back().col == e.col)
            out.back().value += e.value;
        else
            out.push_back(std::move(e));
    }
    std::erase_if(out, [](const Entry& e) { return e.value == 0; });
    entries_ = std::move(out);
    finalized_ = true;
}

SparseVecQ SparseMatrix::row(std::uint32_t r) const {
    SparseVecQ out;
    for (const auto& e : entries_)
        if (e.row == r) out.emplace_back(e.col, e.value);
    return out;
}

std::vector<SparseVecQ> SparseMatrix::row_vectors() const {
    std::vector<SparseVecQ> out(rows_);
    for (const auto& e : entries_) out[e.row].emplace_back(e.col, e.value);
    return out;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols_, rows_);
    for (const auto& e : entries_) t.add(e.col, e.row, e.value);
    t.finalize();
    return t;
}

SparseMatrix SparseMatrix::identity(std::uint32_t n) {
    SparseMatrix m(n, n);
    for (std::uint32_t i = 0; i < n; ++i) m.add(i, i, 1);
    m.finalize();
    return m;
}

SparseMatrix SparseMatrix::from_rows(const std::vector<SparseVecQ>& rows, std::uint32_t cols) {
    SparseMatrix m(static_cast<std::uint32_t>(rows.size()), cols);
    for (std::uint32_t i = 0; i < rows.size(); ++i) m.add_row(i, rows[i]);
    m.finalize();
    return m;
}

bool SparseMatrix::operator==(const SparseMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    if (entries_.size() != other.entries_.size()) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const Entry &a = entries_[i], &b = other.entries_[i];
        if (a.row != b.row || a.col != b.col || a.value != b.value) return false;
    }
    return true;
}

bool DenseQ::is_zero() const {
    for (const auto& v : data_)
        if (v != 0) return false;
    return true;
}

bool DenseQ::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

DenseQ DenseQ::identity(std::size_t n) {
    DenseQ m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

DenseQ DenseQ::operator*(const DenseQ& rhs) const {
    if (cols_ != rhs.rows_) throw InternalError("DenseQ: shape mismatch in product");
    DenseQ out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const mpq_class& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

DenseQ DenseQ::operator-(const DenseQ& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw InternalError("DenseQ: shape mismatch in difference");
    DenseQ out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - rhs.data_[i];
    return out;
}

DenseQ DenseQ::inverse() const {
    if (!is_square()) throw InputError("matrix inverse requires a square matrix");
    std::size_t n = rows_;
    DenseQ a = *this, inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a.at(piv, col) == 0) ++piv;
        if (piv == n) throw InputError("singular matrix");
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        }
        mpq_class d = a.at(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a.at(col, j) /= d;
            inv.at(col, j) /= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a.at(i, col) == 0) continue;
            mpq_class f = a.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

}  // namespace koszulkit
