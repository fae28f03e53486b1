#pragma once

#include "ncdef/prime_field.hpp"
#include "ncdef/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ncdef {

// Sparse row: strictly increasing column indices, no stored zeros.
template <class R>
using SparseRow = std::vector<std::pair<std::size_t, R>>;

namespace rowops {

template <class R>
void prune(SparseRow<R>& r) {
    r.erase(std::remove_if(r.begin(), r.end(),
                           [](const auto& e) { return e.second.is_zero(); }),
            r.end());
}

template <class R>
void scale(SparseRow<R>& r, const R& c) {
    for (auto& e : r) e.second *= c;
}

// dst += c * src, both sorted by column.
template <class R>
void axpy(SparseRow<R>& dst, const R& c, const SparseRow<R>& src) {
    SparseRow<R> out;
    out.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            out.push_back(std::move(dst[i]));
            ++i;
        } else if (i == dst.size() || src[j].first < dst[i].first) {
            R v = c * src[j].second;
            if (!v.is_zero()) out.emplace_back(src[j].first, std::move(v));
            ++j;
        } else {
            R v = std::move(dst[i].second);
            v += c * src[j].second;
            if (!v.is_zero()) out.emplace_back(dst[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    dst = std::move(out);
}

}  // namespace rowops

template <class R>
class SparseMatrix {
public:
    SparseMatrix() : rows_(0), cols_(0) {}
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void set(std::size_t i, std::size_t j, R v) {
        if (i >= rows_ || j >= cols_) throw std::out_of_range("SparseMatrix::set");
        auto& row = data_[i];
        auto it = std::lower_bound(row.begin(), row.end(), j,
                                   [](const auto& e, std::size_t c) { return e.first < c; });
        if (it != row.end() && it->first == j) {
            if (v.is_zero())
                row.erase(it);
            else
                it->second = std::move(v);
        } else if (!v.is_zero()) {
            row.insert(it, {j, std::move(v)});
        }
    }

    R get(std::size_t i, std::size_t j) const {
        const auto& row = data_[i];
        auto it = std::lower_bound(row.begin(), row.end(), j,
                                   [](const auto& e, std::size_t c) { return e.first < c; });
        if (it != row.end() && it->first == j) return it->second;
        return R(0);
    }

    const SparseRow<R>& row(std::size_t i) const { return data_[i]; }
    SparseRow<R>& row(std::size_t i) { return data_[i]; }

    void set_row(std::size_t i, SparseRow<R> r) { data_[i] = std::move(r); }

    std::size_t nnz() const {
        std::size_t n = 0;
        for (const auto& r : data_) n += r.size();
        return n;
    }

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<SparseRow<R>> data_;
};

// Incremental echelon basis. Rows are inserted one at a time and reduced
// against the current pivots; pivot entries are normalized to 1. Rank-only
// consumers skip finalize(); canonical-form consumers call it to get the
// fully reduced basis sorted by pivot column.
//
// Insertion keeps, per pivot column, the row with that pivot. This is a
// Markowitz-flavoured scheme in the sense that an incoming row always
// eliminates with the shortest available pivot chain; for the structured
// matrices handled here (relators tensored with words) it keeps fill-in low.
template <class R>
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t cols) : cols_(cols), pivot_of_col_(cols, npos) {}

    // Reduces row against the basis; if a nonzero remainder survives it is
    // normalized and inserted. Returns true if the rank grew.
    bool insert(SparseRow<R> row) {
        reduce(row);
        if (row.empty()) return false;
        R lead_inv = row.front().second;
        if (!lead_inv.is_unit())
            throw std::domain_error("EchelonBasis: non-unit pivot");
        rowops::scale(row, lead_inv.inv());
        std::size_t col = row.front().first;
        pivot_of_col_[col] = rows_.size();
        pivot_cols_.push_back(col);
        rows_.push_back(std::move(row));
        return true;
    }

    // In-place reduction of an arbitrary row to its normal form modulo the
    // current row space (forward elimination only).
    void reduce(SparseRow<R>& row) const {
        while (!row.empty()) {
            std::size_t col = row.front().first;
            std::size_t pr = pivot_of_col_[col];
            if (pr == npos) {
                // Leading column is not a pivot; eliminate deeper entries.
                break;
            }
            R c = -row.front().second;
            rowops::axpy(row, c, rows_[pr]);
        }
        if (row.empty()) return;
        // Eliminate non-leading pivot columns as well so reduce() yields the
        // unique normal form. Scan once; axpy can only clear later columns.
        for (std::size_t k = 1; k < row.size();) {
            std::size_t col = row[k].first;
            std::size_t pr = pivot_of_col_[col];
            if (pr == npos) {
                ++k;
                continue;
            }
            R c = -row[k].second;
            rowops::axpy(row, c, rows_[pr]);
        }
    }

    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    bool is_pivot_col(std::size_t c) const { return pivot_of_col_[c] != npos; }

    // Fully back-substituted basis, rows sorted by pivot column. This is the
    // canonical reduced row-echelon form of the row space.
    SparseMatrix<R> canonical() const {
        std::vector<std::size_t> order(rows_.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return pivot_cols_[a] < pivot_cols_[b];
        });
        // Back-substitute from the largest pivot down.
        std::vector<SparseRow<R>> reduced(rows_);
        for (std::size_t oi = order.size(); oi-- > 0;) {
            auto& row = reduced[order[oi]];
            for (std::size_t k = 1; k < row.size();) {
                std::size_t col = row[k].first;
                std::size_t pr = pivot_of_col_[col];
                if (pr == npos || pr == order[oi]) {
                    ++k;
                    continue;
                }
                R c = -row[k].second;
                rowops::axpy(row, c, reduced[pr]);
            }
        }
        SparseMatrix<R> out(rows_.size(), cols_);
        for (std::size_t i = 0; i < order.size(); ++i) out.set_row(i, std::move(reduced[order[i]]));
        return out;
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::size_t cols_;
    std::vector<std::size_t> pivot_of_col_;
    std::vector<std::size_t> pivot_cols_;
    std::vector<SparseRow<R>> rows_;
};

template <class R>
struct RrefResult {
    std::size_t rank;
    SparseMatrix<R> basis;  // canonical reduced row-echelon form
};

template <class R>
RrefResult<R> rref(const SparseMatrix<R>& m) {
    EchelonBasis<R> eb(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) eb.insert(m.row(i));
    return {eb.rank(), eb.canonical()};
}

// Rank via forward elimination only; no canonical form is built.
template <class R>
std::size_t rank_only(const SparseMatrix<R>& m) {
    EchelonBasis<R> eb(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) eb.insert(m.row(i));
    return eb.rank();
}

// True iff the row spaces coincide, decided on canonical rref bases.
template <class R>
bool subspace_equal(const SparseMatrix<R>& a, const SparseMatrix<R>& b) {
    if (a.cols() != b.cols())
        throw std::invalid_argument("subspace_equal: column-count mismatch");
    return rref(a).basis == rref(b).basis;
}

// Basis of the right nullspace {v : m v = 0}, one column vector per free
// column of the rref, in increasing free-column order.
template <class R>
std::vector<std::vector<R>> nullspace(const SparseMatrix<R>& m) {
    auto [rank, basis] = rref(m);
    std::size_t n = m.cols();
    std::vector<std::size_t> pivot_col(rank);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t i = 0; i < rank; ++i) {
        pivot_col[i] = basis.row(i).front().first;
        is_pivot[pivot_col[i]] = true;
    }
    std::vector<std::vector<R>> out;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<R> v(n, R(0));
        v[f] = R(1);
        for (std::size_t i = 0; i < rank; ++i) {
            // pivot coordinate = -coefficient of the free column in row i
            v[pivot_col[i]] = -basis.get(i, f);
        }
        out.push_back(std::move(v));
    }
    return out;
}

// Monte Carlo rank over F_p with p drawn deterministically from the seed.
// Always a lower bound on the rational rank; redraws the prime when it
// divides a denominator, with bounded retries.
inline std::size_t rank_mod_p(const SparseMatrix<Rational>& m, std::uint64_t seed) {
    const unsigned max_attempts = 8;
    for (unsigned attempt = 0; attempt < max_attempts; ++attempt) {
        std::uint64_t p = prime_from_seed(seed, attempt);
        try {
            EchelonBasis<Fp> eb(m.cols());
            for (std::size_t i = 0; i < m.rows(); ++i) {
                SparseRow<Fp> row;
                row.reserve(m.row(i).size());
                for (const auto& [c, v] : m.row(i)) {
                    Fp fv = Fp::from_rational(v, p);
                    if (!fv.is_zero()) row.emplace_back(c, fv);
                }
                eb.insert(std::move(row));
            }
            return eb.rank();
        } catch (const std::domain_error&) {
            continue;  // prime divided a denominator; redraw
        }
    }
    throw std::runtime_error("rank_mod_p: retries exhausted");
}

}  // namespace ncdef
