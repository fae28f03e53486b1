#pragma once

#include "ncdef/matrix.hpp"
#include "ncdef/rational.hpp"
#include "ncdef/sparse_matrix.hpp"

#include <map>
#include <vector>

namespace ncdef {

// Exponent vector of a commutative monomial.
using Exps = std::vector<std::uint8_t>;

struct ExpsOrder {
    bool operator()(const Exps& a, const Exps& b) const {
        std::size_t da = 0, db = 0;
        for (auto e : a) da += e;
        for (auto e : b) db += e;
        if (da != db) return da < db;
        return a < b;
    }
};

// Sparse commutative polynomial in n variables.
template <class R>
class Poly {
public:
    Poly() : n_(0) {}
    explicit Poly(std::size_t n) : n_(n) {}

    static Poly variable(std::size_t n, std::size_t i, const R& c = R(1)) {
        Poly p(n);
        Exps e(n, 0);
        e[i] = 1;
        p.add(e, c);
        return p;
    }
    static Poly constant(std::size_t n, const R& c) {
        Poly p(n);
        p.add(Exps(n, 0), c);
        return p;
    }

    std::size_t n() const { return n_; }
    const std::map<Exps, R, ExpsOrder>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Exps& e, const R& c) {
        if (e.size() != n_) throw std::invalid_argument("Poly::add: wrong arity");
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    R coeff(const Exps& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? R(0) : it->second;
    }

    // -1 for the zero polynomial, else the common total degree; throws when
    // inhomogeneous degrees are mixed and `require_homogeneous` is set.
    long degree() const {
        long d = -1;
        for (const auto& [e, c] : terms_) {
            long t = 0;
            for (auto x : e) t += x;
            if (t > d) d = t;
        }
        return d;
    }

    bool is_homogeneous(std::size_t d) const {
        for (const auto& [e, c] : terms_) {
            std::size_t t = 0;
            for (auto x : e) t += x;
            if (t != d) return false;
        }
        return true;
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [e, c] : o.terms_) add(e, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [e, c] : o.terms_) add(e, -c);
        return *this;
    }
    Poly operator-() const {
        Poly p(n_);
        for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
        return p;
    }
    Poly& operator*=(const R& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, v] : terms_) v *= c;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const R& c) { return a *= c; }
    friend Poly operator*(const R& c, Poly a) { return a *= c; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly p(a.n_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exps e(a.n_);
                for (std::size_t i = 0; i < a.n_; ++i)
                    e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
                p.add(e, ca * cb);
            }
        return p;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly derivative(std::size_t i) const {
        Poly p(n_);
        for (const auto& [e, c] : terms_) {
            if (e[i] == 0) continue;
            Exps d = e;
            d[i] -= 1;
            p.add(d, c * R(static_cast<long>(e[i])));
        }
        return p;
    }

    std::string pretty() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [e, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.pretty() + ")";
            for (std::size_t i = 0; i < n_; ++i) {
                if (e[i] == 0) continue;
                s += "*x" + std::to_string(i);
                if (e[i] > 1) s += "^" + std::to_string(e[i]);
            }
        }
        return s;
    }

private:
    std::size_t n_;
    std::map<Exps, R, ExpsOrder> terms_;
};

using QPoly = Poly<Rational>;

// Enumerates exponent vectors of total degree d in n variables, in the
// order used for matrix columns (lexicographic on exponents).
inline std::vector<Exps> monomials_of_degree(std::size_t n, std::size_t d) {
    std::vector<Exps> out;
    Exps cur(n, 0);
    auto rec = [&](auto&& self, std::size_t pos, std::size_t left) -> void {
        if (pos + 1 == n) {
            cur[pos] = static_cast<std::uint8_t>(left);
            out.push_back(cur);
            return;
        }
        for (std::size_t e = 0; e <= left; ++e) {
            cur[pos] = static_cast<std::uint8_t>(e);
            self(self, pos + 1, left - e);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, d);
    return out;
}

// Dense index of a degree-d exponent vector in monomials_of_degree order.
inline std::size_t monomial_index(const std::vector<Exps>& table, const Exps& e) {
    auto it = std::lower_bound(table.begin(), table.end(), e);
    if (it == table.end() || *it != e) throw std::logic_error("monomial_index: not found");
    return static_cast<std::size_t>(it - table.begin());
}

// Linear vector field W = sum_ij a_ij x_j d/dx_i, i.e. W(x_i) = sum_j a_ij x_j.
struct LinearVectorField {
    QMat a;  // n x n

    LinearVectorField() = default;
    explicit LinearVectorField(QMat m) : a(std::move(m)) {}

    std::size_t n() const { return a.rows(); }

    static LinearVectorField zero(std::size_t n) { return LinearVectorField(QMat(n, n)); }
    static LinearVectorField euler(std::size_t n) {
        return LinearVectorField(QMat::identity(n));
    }

    QPoly operator()(const QPoly& f) const {
        std::size_t n = a.rows();
        QPoly out(n);
        for (std::size_t i = 0; i < n; ++i) {
            QPoly df = f.derivative(i);
            if (df.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (a(i, j).is_zero()) continue;
                out += a(i, j) * (QPoly::variable(n, j) * df);
            }
        }
        return out;
    }

    friend bool operator==(const LinearVectorField& x, const LinearVectorField& y) {
        return x.a == y.a;
    }
};

// Commutator [W1, W2] = W1 W2 - W2 W1 as derivations; for linear fields with
// W(x_i) = sum_j a_ij x_j this is the matrix commutator a2 a1 - a1 a2 read in
// the same convention.
inline LinearVectorField commutator(const LinearVectorField& w1, const LinearVectorField& w2) {
    return LinearVectorField(w2.a * w1.a - w1.a * w2.a);
}

}  // namespace ncdef
