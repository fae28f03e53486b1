#pragma once

#include "ncdef/matrix.hpp"
#include "ncdef/tensor.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ncdef {

// Quadratic algebra T(V)/(R), R a canonical subspace of V tensor V.
struct QuadraticAlgebra {
    std::size_t n = 0;
    TensorSubspace<Rational> relations;

    QuadraticAlgebra() = default;
    QuadraticAlgebra(std::size_t n_, const std::vector<Tensor<Rational>>& relators)
        : n(n_), relations(n_, 2, relators) {}
};

// Graded dimensions d_0 .. d_K.
struct GradedDims {
    std::vector<std::size_t> dims;

    friend bool operator==(const GradedDims& a, const GradedDims& b) { return a.dims == b.dims; }
};

struct HilbertOptions {
    std::uint64_t seed = 0;       // seed for the degree-7 modular backend
    bool exact_degree7 = false;   // confirm d_7 with exact arithmetic as well
};

namespace detail {

// Reduced echelon data of a dense row list: pivot columns, and for each
// pivot column the fully reduced tail over the non-pivot columns.
template <class F>
struct LevelRref {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
    std::vector<SparseRow<F>> tails;  // indexed like pivot_cols; columns are raw indices
};

template <class F>
LevelRref<F> level_rref(std::vector<std::vector<F>> rows, std::size_t cols);

// Fraction-free variant for rational rows: rows are scaled to primitive
// integer vectors and content-stripped after every elimination step, which
// keeps the entries small through the tower.
LevelRref<Rational> level_rref_rational(const std::vector<std::vector<Rational>>& rows,
                                        std::size_t cols);

template <class F>
LevelRref<F> level_rref(std::vector<std::vector<F>> rows, std::size_t cols) {
    EchelonBasis<F> eb(cols == 0 ? 1 : cols);
    for (auto& r : rows) {
        SparseRow<F> sparse;
        for (std::size_t c = 0; c < cols; ++c)
            if (!r[c].is_zero()) sparse.emplace_back(c, std::move(r[c]));
        eb.insert(std::move(sparse));
    }
    auto canonical = eb.canonical();
    LevelRref<F> out;
    out.rank = eb.rank();
    for (std::size_t i = 0; i < out.rank; ++i) {
        const auto& row = canonical.row(i);
        out.pivot_cols.push_back(row.front().first);
        SparseRow<F> tail(row.begin() + 1, row.end());
        out.tails.push_back(std::move(tail));
    }
    return out;
}

template <>
inline LevelRref<Rational> level_rref<Rational>(std::vector<std::vector<Rational>> rows,
                                                std::size_t cols) {
    return level_rref_rational(rows, cols);
}

// Graded dimensions of T(V)/(R) by degree-wise quotient compression.
//
// The degree-k component of the two-sided ideal is
//   I_k = V.I_{k-1} + R.V^{(k-2)},
// so A_k = (V (x) A_{k-1}) / image(R (x) A_{k-2}).  The rank of the ideal
// component is accumulated blockwise: the V.I_{k-1} block is already in
// echelon form, and the new relator rows are eliminated in the compressed
// pair coordinates (generator, normal class).  This computes exactly the
// row-space dimension of the stacked matrices sum_i V^i (x) R (x) V^(k-2-i)
// without materializing the n^k columns.
template <class F>
std::vector<std::size_t> graded_dims(std::size_t n, const std::vector<Tensor<F>>& relators,
                                     std::size_t K) {
    std::vector<std::size_t> dims{1};
    if (K == 0) return dims;
    dims.push_back(n);

    constexpr std::size_t npos = static_cast<std::size_t>(-1);

    // q maps a pair (generator v, previous basis index j) to the class of
    // x_v . b_j in the current basis: either a unit vector (normal pair) or
    // the stored tail (pivot pair).
    struct Level {
        std::size_t d_prev = 0;                       // dim A_{k-1}
        std::size_t d = 0;                            // dim A_k
        std::vector<std::size_t> normal_index;        // pair col -> basis index or npos
        std::vector<SparseRow<F>> pivot_tail;         // pair col -> class expansion

        SparseRow<F> apply(std::size_t v, std::size_t j) const {
            std::size_t c = v * d_prev + j;
            if (normal_index[c] != static_cast<std::size_t>(-1))
                return {{normal_index[c], F(1)}};
            return pivot_tail[c];
        }
    };

    // Degree-1 "level": A_1 = V with basis x_0..x_{n-1}; pairs (v, 0) -> e_v.
    Level prev;
    prev.d_prev = 1;
    prev.d = n;
    prev.normal_index.assign(n, npos);
    for (std::size_t v = 0; v < n; ++v) prev.normal_index[v] = v;

    for (std::size_t k = 2; k <= K; ++k) {
        std::size_t d1 = dims[k - 1];  // dim A_{k-1}
        std::size_t d2 = dims[k - 2];  // dim A_{k-2}
        std::size_t cols = n * d1;
        std::vector<std::vector<F>> rows;
        if (cols > 0) {
            for (const auto& r : relators) {
                for (std::size_t j = 0; j < d2; ++j) {
                    // row = sum_{(a,b)} c_ab  x_a (x) q(x_b . prev_j)
                    std::vector<F> dense(cols, F(0));
                    bool nonzero = false;
                    for (const auto& [w, c] : r.terms()) {
                        std::size_t a = w[0], b = w[1];
                        for (const auto& [m, q] : prev.apply(b, j)) {
                            dense[a * d1 + m] += c * q;
                            nonzero = true;
                        }
                    }
                    if (nonzero) rows.push_back(std::move(dense));
                }
            }
        }
        LevelRref<F> lr = level_rref<F>(std::move(rows), cols);
        std::size_t rank = lr.rank;
        std::size_t dk = cols - rank;
        dims.push_back(dk);

        if (k == K) break;

        Level cur;
        cur.d_prev = d1;
        cur.d = dk;
        cur.normal_index.assign(cols, npos);
        cur.pivot_tail.assign(cols, SparseRow<F>{});
        std::vector<bool> is_pivot(cols, false);
        for (std::size_t c : lr.pivot_cols) is_pivot[c] = true;
        std::size_t next = 0;
        for (std::size_t c = 0; c < cols; ++c)
            if (!is_pivot[c]) cur.normal_index[c] = next++;
        for (std::size_t i = 0; i < rank; ++i) {
            SparseRow<F> tail;
            for (const auto& [col, v] : lr.tails[i])
                tail.emplace_back(cur.normal_index[col], -v);
            cur.pivot_tail[lr.pivot_cols[i]] = std::move(tail);
        }
        prev = std::move(cur);
    }
    return dims;
}

std::vector<Tensor<Fp>> relators_mod_p(const std::vector<Tensor<Rational>>& relators,
                                       std::uint64_t p);

}  // namespace detail

// Graded dimensions of a = T(V)/(R) up to degree K (K <= 7). Exact rational
// ranks through degree 6; degree 7 uses the seeded modular backend, with an
// exact confirmation when requested.
GradedDims hilbert_function(const QuadraticAlgebra& a, std::size_t K,
                            const HilbertOptions& opts = {});

// True iff d_k = C(k+n-1, n-1) for all k <= K.
bool hilbert_matches_polynomial(const QuadraticAlgebra& a, std::size_t K,
                                const HilbertOptions& opts = {});

std::size_t binom(std::size_t n, std::size_t k);

// Zhang twist by a graded automorphism sigma (columns = images of the
// generators): each relator sum a (x) b maps to sum a (x) sigma^{-1}(b).
QuadraticAlgebra zhang_twist(const QuadraticAlgebra& a, const QMat& sigma);

// Commutativity relations Lambda^2 V as relator list.
std::vector<Tensor<Rational>> commutative_relators(std::size_t n);

// Degree-k component of the two-sided ideal (R), stacked as the rows
// sum_i V^i (x) R (x) V^(k-2-i) in the full n^k column space. This is the
// uncompressed matrix; rank_mod_p handles the degree-7 case.
SparseMatrix<Rational> ideal_component_matrix(const QuadraticAlgebra& a, std::size_t k);

}  // namespace ncdef
