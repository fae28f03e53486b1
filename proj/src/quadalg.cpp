#include "ncdef/quadalg.hpp"

#include <stdexcept>

namespace ncdef {

namespace detail {

namespace {

// Divide a row by the gcd of its entries.
void strip_content(std::vector<mpz_class>& v) {
    mpz_class g(0);
    for (const auto& x : v) {
        if (x == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) return;
    }
    if (g > 1)
        for (auto& x : v) x /= g;
}

}  // namespace

LevelRref<Rational> level_rref_rational(const std::vector<std::vector<Rational>>& rows_in,
                                        std::size_t cols) {
    std::vector<std::vector<mpz_class>> pivots;
    std::vector<std::size_t> lead_of;
    std::vector<long> pivot_of_col(cols, -1);

    for (const auto& r : rows_in) {
        // clear denominators to a primitive integer row
        mpz_class lcm(1);
        for (const auto& x : r) {
            if (x.is_zero()) continue;
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), x.den().get_mpz_t());
            lcm = lcm / g * x.den();
        }
        std::vector<mpz_class> v(cols);
        for (std::size_t i = 0; i < cols; ++i)
            if (!r[i].is_zero()) v[i] = r[i].num() * mpz_class(lcm / r[i].den());
        strip_content(v);

        for (;;) {
            std::size_t lead = 0;
            while (lead < cols && v[lead] == 0) ++lead;
            if (lead == cols) break;
            long pr = pivot_of_col[lead];
            if (pr < 0) {
                pivot_of_col[lead] = static_cast<long>(pivots.size());
                lead_of.push_back(lead);
                pivots.push_back(std::move(v));
                break;
            }
            const auto& p = pivots[static_cast<std::size_t>(pr)];
            mpz_class a = p[lead], b = v[lead];
            for (std::size_t i = lead; i < cols; ++i) v[i] = a * v[i] - b * p[i];
            strip_content(v);
        }
    }

    // back-substitution in decreasing pivot-column order
    std::vector<std::size_t> order(pivots.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return lead_of[x] > lead_of[y]; });
    for (std::size_t oi : order) {
        auto& v = pivots[oi];
        std::size_t lead = lead_of[oi];
        for (std::size_t c = lead + 1; c < cols; ++c) {
            if (v[c] == 0) continue;
            long pr = pivot_of_col[c];
            if (pr < 0 || static_cast<std::size_t>(pr) == oi) continue;
            const auto& p = pivots[static_cast<std::size_t>(pr)];
            mpz_class a = p[c], b = v[c];
            for (std::size_t i = lead; i < cols; ++i) v[i] = a * v[i] - b * p[i];
            strip_content(v);
        }
    }

    LevelRref<Rational> out;
    out.rank = pivots.size();
    std::vector<std::size_t> by_col(pivots.size());
    for (std::size_t i = 0; i < by_col.size(); ++i) by_col[i] = i;
    std::sort(by_col.begin(), by_col.end(),
              [&](std::size_t x, std::size_t y) { return lead_of[x] < lead_of[y]; });
    for (std::size_t i : by_col) {
        const auto& v = pivots[i];
        std::size_t lead = lead_of[i];
        out.pivot_cols.push_back(lead);
        SparseRow<Rational> tail;
        for (std::size_t c = lead + 1; c < cols; ++c)
            if (v[c] != 0) tail.emplace_back(c, Rational(mpq_class(v[c], v[lead])));
        out.tails.push_back(std::move(tail));
    }
    return out;
}

std::vector<Tensor<Fp>> relators_mod_p(const std::vector<Tensor<Rational>>& relators,
                                       std::uint64_t p) {
    std::vector<Tensor<Fp>> out;
    out.reserve(relators.size());
    for (const auto& r : relators) {
        Tensor<Fp> t(r.n(), r.degree());
        for (const auto& [w, c] : r.terms()) t.add(w, Fp::from_rational(c, p));
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace detail

std::size_t binom(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

GradedDims hilbert_function(const QuadraticAlgebra& a, std::size_t K, const HilbertOptions& opts) {
    if (K > 7) throw std::invalid_argument("hilbert_function: max degree is 7");
    const auto& relators = a.relations.basis();

    std::size_t exact_to = std::min<std::size_t>(K, 6);
    if (opts.exact_degree7) exact_to = K;
    GradedDims out;
    out.dims = detail::graded_dims<Rational>(a.n, relators, exact_to);

    if (K == 7) {
        // Modular backend for the degree-7 rank; deterministic prime from the
        // seed, redrawn when it divides a relator denominator.
        const unsigned max_attempts = 8;
        std::vector<std::size_t> mod_dims;
        bool done = false;
        for (unsigned attempt = 0; attempt < max_attempts && !done; ++attempt) {
            std::uint64_t p = prime_from_seed(opts.seed, attempt);
            try {
                Fp::Context ctx(p);
                auto rel_p = detail::relators_mod_p(relators, p);
                mod_dims = detail::graded_dims<Fp>(a.n, rel_p, 7);
                done = true;
            } catch (const std::domain_error&) {
                continue;
            }
        }
        if (!done) throw std::runtime_error("hilbert_function: modular retries exhausted");
        if (opts.exact_degree7) {
            if (out.dims[7] != mod_dims[7])
                throw std::runtime_error("hilbert_function: modular/exact degree-7 mismatch");
        } else {
            out.dims.push_back(mod_dims[7]);
        }
    }
    return out;
}

bool hilbert_matches_polynomial(const QuadraticAlgebra& a, std::size_t K,
                                const HilbertOptions& opts) {
    GradedDims d = hilbert_function(a, K, opts);
    for (std::size_t k = 0; k < d.dims.size(); ++k)
        if (d.dims[k] != binom(k + a.n - 1, a.n - 1)) return false;
    return true;
}

QuadraticAlgebra zhang_twist(const QuadraticAlgebra& a, const QMat& sigma) {
    if (sigma.rows() != a.n || sigma.cols() != a.n)
        throw std::invalid_argument("zhang_twist: automorphism has wrong shape");
    QMat inv = sigma.inverse();  // throws on singular sigma
    std::vector<Tensor<Rational>> twisted;
    for (const auto& r : a.relations.basis()) {
        Tensor<Rational> t(a.n, 2);
        for (const auto& [w, c] : r.terms()) {
            for (std::size_t i = 0; i < a.n; ++i) {
                Rational coeff = c * inv(i, w[1]);
                if (!coeff.is_zero()) t.add({w[0], static_cast<std::uint8_t>(i)}, coeff);
            }
        }
        twisted.push_back(std::move(t));
    }
    return QuadraticAlgebra(a.n, twisted);
}

std::vector<Tensor<Rational>> commutative_relators(std::size_t n) {
    std::vector<Tensor<Rational>> rel;
    for (std::uint8_t i = 0; i < n; ++i)
        for (std::uint8_t j = i + 1; j < n; ++j) {
            Tensor<Rational> t(n, 2);
            t.add({i, j}, Rational(1));
            t.add({j, i}, Rational(-1));
            rel.push_back(std::move(t));
        }
    return rel;
}

SparseMatrix<Rational> ideal_component_matrix(const QuadraticAlgebra& a, std::size_t k) {
    if (k < 2) return SparseMatrix<Rational>(0, pow_sz(a.n, k));
    const auto& relators = a.relations.basis();
    std::size_t n = a.n;
    std::size_t cols = pow_sz(n, k);
    std::size_t rows_per_position = relators.size() * pow_sz(n, k - 2);
    SparseMatrix<Rational> m((k - 1) * rows_per_position, cols);
    std::size_t row = 0;
    for (std::size_t pos = 0; pos + 2 <= k; ++pos) {
        std::size_t left = pos, right = k - 2 - pos;
        std::size_t nleft = pow_sz(n, left), nright = pow_sz(n, right);
        for (const auto& r : relators) {
            for (std::size_t u = 0; u < nleft; ++u) {
                for (std::size_t v = 0; v < nright; ++v) {
                    SparseRow<Rational> sparse_row;
                    for (const auto& [w, c] : r.terms()) {
                        std::size_t mid = word_index(w, n);
                        std::size_t col = (u * n * n + mid) * nright + v;
                        sparse_row.emplace_back(col, c);
                    }
                    std::sort(sparse_row.begin(), sparse_row.end(),
                              [](const auto& x, const auto& y) { return x.first < y.first; });
                    m.set_row(row++, std::move(sparse_row));
                }
            }
        }
    }
    return m;
}

}  // namespace ncdef
