#pragma once

#include "ncdef/sparse_matrix.hpp"
#include "ncdef/word.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace ncdef {

// Sparse homogeneous element of V^{tensor degree} on n generators.
template <class R>
class Tensor {
public:
    Tensor() : n_(0), degree_(0) {}
    Tensor(std::size_t n, std::size_t degree) : n_(n), degree_(degree) {}

    std::size_t n() const { return n_; }
    std::size_t degree() const { return degree_; }

    const std::map<Word, R, GradLex>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    void add(const Word& w, const R& c) {
        if (w.size() != degree_) throw std::invalid_argument("Tensor::add: wrong word length");
        for (auto l : w)
            if (l >= n_) throw std::invalid_argument("Tensor::add: letter out of range");
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    R coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? R(0) : it->second;
    }

    Tensor& operator+=(const Tensor& o) {
        check_shape(o);
        for (const auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }
    Tensor& operator-=(const Tensor& o) {
        check_shape(o);
        for (const auto& [w, c] : o.terms_) add(w, -c);
        return *this;
    }
    Tensor& operator*=(const R& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, v] : terms_) v *= c;
        return *this;
    }
    Tensor operator-() const {
        Tensor t(*this);
        for (auto& [w, v] : t.terms_) v = -v;
        return t;
    }

    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    friend Tensor operator*(Tensor a, const R& c) { return a *= c; }
    friend Tensor operator*(const R& c, Tensor a) { return a *= c; }

    friend bool operator==(const Tensor& a, const Tensor& b) {
        return a.n_ == b.n_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

    // Tensor-product concatenation.
    friend Tensor tensor_product(const Tensor& a, const Tensor& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("tensor_product: generator count mismatch");
        Tensor out(a.n_, a.degree_ + b.degree_);
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) out.add(concat(wa, wb), ca * cb);
        return out;
    }

    std::string pretty() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [w, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.pretty() + ")*" + word_str(w);
        }
        return s;
    }

private:
    void check_shape(const Tensor& o) const {
        if (n_ != o.n_ || degree_ != o.degree_)
            throw std::invalid_argument("Tensor: shape mismatch");
    }

    std::size_t n_, degree_;
    std::map<Word, R, GradLex> terms_;
};

template <class R>
Tensor<R> monomial_tensor(std::size_t n, const Word& w, const R& c = R(1)) {
    Tensor<R> t(n, w.size());
    t.add(w, c);
    return t;
}

// w_1 w_2 ... w_d  ->  w_2 ... w_d w_1, coefficients unchanged.
template <class R>
Tensor<R> cyc_shift(const Tensor<R>& t) {
    if (t.degree() < 1) throw std::invalid_argument("cyc_shift: degree must be >= 1");
    Tensor<R> out(t.n(), t.degree());
    for (const auto& [w, c] : t.terms()) {
        Word shifted(w.begin() + 1, w.end());
        shifted.push_back(w.front());
        out.add(shifted, c);
    }
    return out;
}

// Signed cyclic symmetrization: sum_{k=0}^{d-1} s^k cyc^k(t) with
// s = (-1)^{d-1}, the parity of a d-cycle. Reproduces the unsigned sums in
// degree 3 and the alternating sums in degree 4.
template <class R>
Tensor<R> supercyclic_sum(const Tensor<R>& t) {
    std::size_t d = t.degree();
    int sign_step = (d % 2 == 0) ? -1 : 1;
    Tensor<R> out(t.n(), d);
    Tensor<R> cur = t;
    int s = 1;
    for (std::size_t k = 0; k < d; ++k) {
        out += (s == 1) ? cur : -cur;
        if (k + 1 < d) cur = cyc_shift(cur);
        s *= sign_step;
    }
    return out;
}

namespace detail {

template <class R>
void permute_sum(const Word& w, bool signed_sum, Tensor<R>& out) {
    std::vector<std::size_t> perm(w.size());
    std::iota(perm.begin(), perm.end(), 0);
    // Iterate all |S_d| permutations; repeated letters accumulate multiplicity.
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) ++inversions;
        Word p(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) p[i] = w[perm[i]];
        R c = (signed_sum && (inversions % 2)) ? R(-1) : R(1);
        out.add(p, c);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace detail

// [w]^+ : sum of w over all permutations of its letters (with multiplicity).
template <class R>
Tensor<R> bracket_sym(std::size_t n, const Word& w) {
    Tensor<R> out(n, w.size());
    detail::permute_sum<R>(w, false, out);
    return out;
}

// [w]^- : signed sum; exactly 0 whenever a letter repeats.
template <class R>
Tensor<R> bracket_antisym(std::size_t n, const Word& w) {
    Tensor<R> out(n, w.size());
    detail::permute_sum<R>(w, true, out);
    return out;
}

// Matrix of the (k, d-k) flattening: rows indexed by length-k words, columns
// by length-(d-k) words, entry = coefficient of the concatenation.
template <class R>
SparseMatrix<R> flatten(const Tensor<R>& t, std::size_t k) {
    if (k > t.degree()) throw std::invalid_argument("flatten: k exceeds degree");
    std::size_t n = t.n();
    SparseMatrix<R> m(pow_sz(n, k), pow_sz(n, t.degree() - k));
    for (const auto& [w, c] : t.terms()) {
        Word u(w.begin(), w.begin() + k);
        Word v(w.begin() + k, w.end());
        m.set(word_index(u, n), word_index(v, n), c);
    }
    return m;
}

// Canonically reduced subspace of V^{tensor degree}: basis rows in reduced
// echelon form w.r.t. the graded-lexicographic word order.
template <class R>
class TensorSubspace {
public:
    TensorSubspace() : n_(0), degree_(0) {}
    TensorSubspace(std::size_t n, std::size_t degree, const std::vector<Tensor<R>>& span)
        : n_(n), degree_(degree) {
        std::size_t cols = pow_sz(n, degree);
        SparseMatrix<R> m(span.size(), cols);
        for (std::size_t i = 0; i < span.size(); ++i) {
            if (span[i].n() != n || span[i].degree() != degree)
                throw std::invalid_argument("TensorSubspace: shape mismatch");
            SparseRow<R> row;
            for (const auto& [w, c] : span[i].terms()) row.emplace_back(word_index(w, n), c);
            m.set_row(i, std::move(row));
        }
        auto [rank, basis] = rref(m);
        basis_matrix_ = std::move(basis);
        for (std::size_t i = 0; i < rank; ++i) {
            Tensor<R> t(n, degree);
            for (const auto& [col, c] : basis_matrix_.row(i)) t.add(word_from_index(col, n, degree), c);
            basis_.push_back(std::move(t));
        }
    }

    std::size_t n() const { return n_; }
    std::size_t degree() const { return degree_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Tensor<R>>& basis() const { return basis_; }
    const SparseMatrix<R>& basis_matrix() const { return basis_matrix_; }

    bool contains(const Tensor<R>& t) const {
        EchelonBasis<R> eb(basis_matrix_.cols());
        for (std::size_t i = 0; i < basis_matrix_.rows(); ++i) eb.insert(basis_matrix_.row(i));
        SparseRow<R> row;
        for (const auto& [w, c] : t.terms()) row.emplace_back(word_index(w, n_), c);
        eb.reduce(row);
        return row.empty();
    }

    friend bool operator==(const TensorSubspace& a, const TensorSubspace& b) {
        return a.n_ == b.n_ && a.degree_ == b.degree_ && a.basis_matrix_ == b.basis_matrix_;
    }
    friend bool operator!=(const TensorSubspace& a, const TensorSubspace& b) { return !(a == b); }

private:
    std::size_t n_, degree_;
    std::vector<Tensor<R>> basis_;
    SparseMatrix<R> basis_matrix_;
};

// The subspace d^k t of V^{tensor(d-k)} spanned by the slices of t along all
// length-k front words, i.e. the row space of flatten(t, k), canonicalized.
template <class R>
TensorSubspace<R> contract_front(const Tensor<R>& t, std::size_t k) {
    std::size_t n = t.n();
    std::size_t d = t.degree();
    std::map<Word, Tensor<R>, GradLex> slices;
    for (const auto& [w, c] : t.terms()) {
        Word u(w.begin(), w.begin() + k);
        Word v(w.begin() + k, w.end());
        auto [it, fresh] = slices.try_emplace(u, Tensor<R>(n, d - k));
        it->second.add(v, c);
    }
    std::vector<Tensor<R>> span;
    span.reserve(slices.size());
    for (auto& [u, s] : slices) span.push_back(std::move(s));
    return TensorSubspace<R>(n, d - k, span);
}

}  // namespace ncdef
