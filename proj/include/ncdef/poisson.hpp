#pragma once

#include "ncdef/poly.hpp"

#include <array>
#include <optional>
#include <utility>

namespace ncdef {

// Antisymmetric table of quadratic brackets pi_ij = {x_i, x_j} on four
// generators; entries stored for i < j in the fixed pair order
// (0,1),(0,2),(0,3),(1,2),(1,3),(2,3).
template <class R>
struct QuadBracketT {
    std::array<Poly<R>, 6> pi;

    QuadBracketT() {
        for (auto& p : pi) p = Poly<R>(4);
    }

    static std::size_t pair_index(std::size_t i, std::size_t j) {
        static constexpr int table[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
        int t = table[i][j];
        if (t < 0) throw std::invalid_argument("QuadBracket: diagonal pair");
        return static_cast<std::size_t>(t);
    }
    static std::pair<std::size_t, std::size_t> pair_of_index(std::size_t k) {
        static constexpr std::pair<std::size_t, std::size_t> pairs[6] = {
            {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
        return pairs[k];
    }

    const Poly<R>& at(std::size_t i, std::size_t j) const { return pi[pair_index(i, j)]; }
    void set(std::size_t i, std::size_t j, Poly<R> p) {
        if (i < j)
            pi[pair_index(i, j)] = std::move(p);
        else
            pi[pair_index(j, i)] = -p;
    }
    // {x_i, x_j} with the antisymmetry filled in.
    Poly<R> bracket(std::size_t i, std::size_t j) const {
        if (i == j) return Poly<R>(4);
        return i < j ? at(i, j) : -at(j, i);
    }

    bool is_zero() const {
        for (const auto& p : pi)
            if (!p.is_zero()) return false;
        return true;
    }

    QuadBracketT& operator+=(const QuadBracketT& o) {
        for (std::size_t k = 0; k < 6; ++k) pi[k] += o.pi[k];
        return *this;
    }
    QuadBracketT& operator-=(const QuadBracketT& o) {
        for (std::size_t k = 0; k < 6; ++k) pi[k] -= o.pi[k];
        return *this;
    }
    friend QuadBracketT operator+(QuadBracketT a, const QuadBracketT& b) { return a += b; }
    friend QuadBracketT operator-(QuadBracketT a, const QuadBracketT& b) { return a -= b; }
    friend QuadBracketT operator*(const R& c, QuadBracketT b) {
        for (auto& p : b.pi) p *= c;
        return b;
    }
    friend bool operator==(const QuadBracketT& a, const QuadBracketT& b) { return a.pi == b.pi; }
    friend bool operator!=(const QuadBracketT& a, const QuadBracketT& b) { return !(a == b); }
};

using QuadBracket = QuadBracketT<Rational>;

// One-form alpha = sum alpha_i dx_i with homogeneous cubic coefficients.
struct OneForm {
    std::array<QPoly, 4> alpha;

    OneForm() {
        for (auto& p : alpha) p = QPoly(4);
    }

    friend bool operator==(const OneForm& a, const OneForm& b) { return a.alpha == b.alpha; }
};

// Biderivation extension {f,g} = sum_{i<j} pi_ij (d_i f d_j g - d_j f d_i g).
template <class R>
Poly<R> bracket_eval(const QuadBracketT<R>& b, const Poly<R>& f, const Poly<R>& g) {
    Poly<R> out(4);
    std::array<Poly<R>, 4> df, dg;
    for (std::size_t i = 0; i < 4; ++i) {
        df[i] = f.derivative(i);
        dg[i] = g.derivative(i);
    }
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
            const Poly<R>& pij = b.at(i, j);
            if (pij.is_zero()) continue;
            out += pij * (df[i] * dg[j] - df[j] * dg[i]);
        }
    return out;
}

// The four cyclic Jacobi sums J(i,j,k), in triple order
// (0,1,2),(0,1,3),(0,2,3),(1,2,3); the bracket is Poisson iff all vanish.
template <class R>
std::array<Poly<R>, 4> jacobiator(const QuadBracketT<R>& b) {
    static constexpr std::array<std::array<std::size_t, 3>, 4> triples = {
        {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
    std::array<Poly<R>, 4> out;
    for (std::size_t t = 0; t < 4; ++t) {
        auto [i, j, k] = std::tuple{triples[t][0], triples[t][1], triples[t][2]};
        Poly<R> xi = Poly<R>::variable(4, i), xj = Poly<R>::variable(4, j),
                xk = Poly<R>::variable(4, k);
        Poly<R> sum = bracket_eval(b, xi, b.bracket(j, k));
        sum += bracket_eval(b, xj, b.bracket(k, i));
        sum += bracket_eval(b, xk, b.bracket(i, j));
        out[t] = std::move(sum);
    }
    return out;
}

template <class R>
bool is_poisson(const QuadBracketT<R>& b) {
    for (const auto& p : jacobiator(b))
        if (!p.is_zero()) return false;
    return true;
}

// defect_j = sum_i d_i pi_ij against the standard volume; unimodular iff all
// four vanish.
template <class R>
std::array<Poly<R>, 4> unimodularity_defect(const QuadBracketT<R>& b) {
    std::array<Poly<R>, 4> out;
    for (std::size_t j = 0; j < 4; ++j) {
        Poly<R> d(4);
        for (std::size_t i = 0; i < 4; ++i) {
            if (i == j) continue;
            d += b.bracket(i, j).derivative(i);
        }
        out[j] = std::move(d);
    }
    return out;
}

template <class R>
bool is_unimodular(const QuadBracketT<R>& b) {
    for (const auto& p : unimodularity_defect(b))
        if (!p.is_zero()) return false;
    return true;
}

struct OneFormReport {
    bool cubic = false;
    bool euler_zero = false;
    bool integrable = false;
    bool pass() const { return cubic && euler_zero && integrable; }
};

// Homogeneity, Euler contraction sum x_i alpha_i = 0, and integrability
// alpha ^ d(alpha) = 0 (four quintic components).
OneFormReport oneform_validate(const OneForm& a);

// pi_ij = sign(i,j,k,l) (d_k alpha_l - d_l alpha_k), (k,l) the increasing
// complement of (i,j).
QuadBracket bracket_from_oneform(const OneForm& a);

// The unique one-form with zero Euler contraction mapping to b; solved as a
// linear system in the 80 cubic coefficients. Throws std::domain_error when
// no solution exists (b not unimodular-Poisson).
OneForm oneform_from_bracket(const QuadBracket& b);

// Bracket {f,g} = Z(f)E(g) - E(f)Z(g) of the Euler field with Z.
QuadBracket euler_wedge_bracket(const LinearVectorField& z);

struct UnimodularDecomposition {
    QuadBracket unimodular_part;
    LinearVectorField z;        // trace-free representative (Z is unique mod E)
    bool z_is_symmetry = false; // whether L_Z pi_u = 0 holds
};

// b = pi_u + (E ^ Z)-bracket with pi_u unimodular; Z is normalized trace-free
// since shifting Z by a multiple of E leaves the bracket unchanged.
UnimodularDecomposition decompose_unimodular(const QuadBracket& b);

// (L_W pi)_ij = W(pi_ij) - {W x_i, x_j} - {x_i, W x_j}.
QuadBracket lie_derivative(const QuadBracket& b, const LinearVectorField& w);

struct RelativeInvariants {
    Rational weight;
    std::vector<QPoly> basis;
};

// Largest space of degree-d polynomials f with Y(f) = 0 and X(f) = w f,
// maximized over eigenvalues w; ties broken towards the smaller eigenvalue.
RelativeInvariants relative_invariants(const LinearVectorField& x, const LinearVectorField& y,
                                       std::size_t degree);

// Exact division attempt: quotient q with f * q = g, if one exists.
std::optional<QPoly> divide_exact(const QPoly& g, const QPoly& f);

}  // namespace ncdef
