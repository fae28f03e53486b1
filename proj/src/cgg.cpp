#include "ncdef/cgg.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace ncdef {

DerivationPair e3_pair() {
    QMat x(4, 4), y(4, 4);
    x(0, 0) = Rational(-5, 4);
    x(1, 1) = Rational(-1, 4);
    x(2, 2) = Rational(3, 4);
    x(3, 3) = Rational(7, 4);
    y(1, 0) = Rational(4);
    y(2, 1) = Rational(4);
    y(3, 2) = Rational(4);
    return {LinearVectorField(x), LinearVectorField(y)};
}

PairReport validate_pair(const DerivationPair& p, std::size_t degree_bound) {
    PairReport rep;
    std::size_t n = p.x.n();
    rep.commutation_ok = commutator(p.y, p.x) == p.y;

    QMat pw = QMat::identity(n);
    for (std::size_t m = 1; m <= n; ++m) {
        pw = pw * p.y.a;
        if (pw.is_zero()) {
            rep.nilpotent = true;
            rep.nilpotency_index = m;
            break;
        }
    }
    if (!rep.nilpotent && p.y.a.is_zero()) {
        rep.nilpotent = true;
        rep.nilpotency_index = 1;
    }

    // Local nilpotency on the graded pieces up to the bound.
    rep.locally_nilpotent_ok = rep.nilpotent;
    if (rep.nilpotent) {
        for (std::size_t d = 1; d <= degree_bound && rep.locally_nilpotent_ok; ++d) {
            for (const auto& e : monomials_of_degree(n, d)) {
                QPoly f(n);
                f.add(e, Rational(1));
                std::size_t k = 0;
                std::size_t limit = d * (rep.nilpotency_index - 1) + 1;
                while (!f.is_zero() && k <= limit) {
                    f = p.y(f);
                    ++k;
                }
                if (!f.is_zero()) {
                    rep.locally_nilpotent_ok = false;
                    break;
                }
            }
        }
    }
    return rep;
}

QPoly star(const StarProduct& s, const QPoly& f, const QPoly& g) {
    std::size_t n = s.pair.x.n();
    QPoly out(n);
    QPoly yf = f;           // Y^k(f)
    QPoly binom_g = g;      // binom(X,k)(g), built by applying (X - (k-1)) first
    Rational hpow(1);
    for (std::size_t k = 0;; ++k) {
        if (k > 0) {
            yf = s.pair.y(yf);
            binom_g = s.pair.x(binom_g) - Rational(static_cast<long>(k - 1)) * binom_g;
            binom_g *= Rational(1, static_cast<long>(k));
            hpow *= s.hbar;
        }
        if (yf.is_zero()) break;
        out += hpow * (yf * binom_g);
        if (k > 64) throw std::logic_error("star: series did not terminate");
    }
    return out;
}

QPoly star_commutator(const StarProduct& s, const QPoly& f, const QPoly& g) {
    return star(s, f, g) - star(s, g, f);
}

QuadBracket star_commutator_bracket(const DerivationPair& p) {
    QuadBracket b;
    std::size_t n = p.x.n();
    for (std::size_t idx = 0; idx < 6; ++idx) {
        auto [i, j] = QuadBracket::pair_of_index(idx);
        QPoly xi = QPoly::variable(n, i), xj = QPoly::variable(n, j);
        b.pi[idx] = p.y(xi) * p.x(xj) - p.y(xj) * p.x(xi);
    }
    return b;
}

std::vector<QPoly> associativity_defect(const StarProduct& s, std::size_t degree_bound,
                                        std::uint64_t seed) {
    std::size_t n = s.pair.x.n();
    std::vector<QPoly> out;
    auto defect = [&](const QPoly& f, const QPoly& g, const QPoly& h) {
        return star(s, star(s, f, g), h) - star(s, f, star(s, g, h));
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                out.push_back(defect(QPoly::variable(n, i), QPoly::variable(n, j),
                                     QPoly::variable(n, k)));

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 5);
    std::uniform_int_distribution<std::size_t> deg(0, degree_bound);
    auto random_poly = [&]() {
        QPoly p(n);
        for (int t = 0; t < 4; ++t) {
            auto monos = monomials_of_degree(n, deg(rng));
            std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
            p.add(monos[pick(rng)], Rational(num(rng), den(rng)));
        }
        return p;
    };
    for (int t = 0; t < 20; ++t) out.push_back(defect(random_poly(), random_poly(), random_poly()));
    return out;
}

StarPresentation star_presentation(const StarProduct& s) {
    std::size_t n = s.pair.x.n();
    auto quadrics = monomials_of_degree(n, 2);
    SparseMatrix<Rational> m(quadrics.size(), n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            QPoly prod = star(s, QPoly::variable(n, i), QPoly::variable(n, j));
            for (const auto& [e, c] : prod.terms())
                m.set(monomial_index(quadrics, e), i * n + j, c);
        }
    auto ker = nullspace(m);
    std::vector<Tensor<Rational>> relators;
    for (const auto& v : ker) {
        Tensor<Rational> t(n, 2);
        for (std::size_t c = 0; c < n * n; ++c)
            if (!v[c].is_zero())
                t.add({static_cast<std::uint8_t>(c / n), static_cast<std::uint8_t>(c % n)}, v[c]);
        relators.push_back(std::move(t));
    }
    StarPresentation out;
    out.algebra = QuadraticAlgebra(n, relators);
    out.degenerate = out.algebra.relations.dim() != n * (n - 1) / 2;
    return out;
}

RescalingReport rescaling_iso_check(const DerivationPair& p, const Rational& mu,
                                    const Rational& hbar, std::size_t degree_bound) {
    RescalingReport rep;
    std::size_t n = p.x.n();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && !p.x.a(i, j).is_zero()) return rep;  // unsupported: non-diagonal X
    rep.supported = true;

    // Integer exponents m_i = L * lambda_i with L the common denominator.
    mpz_class lcm(1);
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class den = p.x.a(i, i).den(), g;
        mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        lcm = lcm / g * den;
    }
    Rational l{mpq_class(lcm)};
    std::vector<long> m(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational mi = p.x.a(i, i) * l;
        m[i] = std::stol(mi.num().get_str());
    }
    auto subst = [&](const QPoly& f) {
        QPoly out(n);
        for (const auto& [e, c] : f.terms()) {
            long wt = 0;
            for (std::size_t i = 0; i < n; ++i) wt += m[i] * e[i];
            out.add(e, c * mu.pow(wt));
        }
        return out;
    };

    StarProduct s{p, hbar};
    // hbar' from matching one commutator: pick the first pair with a nonzero
    // first-order bracket and solve on its leading coefficient.
    QuadBracket first_order = star_commutator_bracket(p);
    bool found = false;
    Rational hp(0);
    if (!hbar.is_zero()) {
        for (std::size_t idx = 0; idx < 6 && !found; ++idx) {
            auto [i, j] = QuadBracket::pair_of_index(idx);
            const QPoly& pij = first_order.pi[idx];
            if (pij.is_zero()) continue;
            const auto& [e, c] = *pij.terms().begin();
            long wt = 0;
            for (std::size_t t = 0; t < n; ++t) wt += m[t] * e[t];
            // hbar mu^{w(pi_ij)} = hbar' mu^{m_i + m_j}
            hp = hbar * mu.pow(wt - m[i] - m[j]);
            found = true;
        }
        if (!found) hp = hbar;
    }
    rep.hbar_prime = hp;

    StarProduct sp{p, hp};
    rep.full_match = true;
    for (std::size_t df = 0; df <= degree_bound && rep.full_match; ++df)
        for (std::size_t dg = 0; df + dg <= degree_bound && rep.full_match; ++dg) {
            for (const auto& ef : monomials_of_degree(n, df)) {
                for (const auto& eg : monomials_of_degree(n, dg)) {
                    QPoly f(n), g(n);
                    f.add(ef, Rational(1));
                    g.add(eg, Rational(1));
                    if (subst(star(s, f, g)) != star(sp, subst(f), subst(g))) {
                        rep.full_match = false;
                        break;
                    }
                }
                if (!rep.full_match) break;
            }
        }
    return rep;
}

PolySpan::PolySpan(std::size_t degree, const std::vector<QPoly>& span) : degree_(degree) {
    auto monos = monomials_of_degree(4, degree);
    SparseMatrix<Rational> m(span.size(), monos.size());
    for (std::size_t i = 0; i < span.size(); ++i) {
        if (!span[i].is_homogeneous(degree))
            throw std::invalid_argument("PolySpan: inhomogeneous element");
        for (const auto& [e, c] : span[i].terms()) m.set(i, monomial_index(monos, e), c);
    }
    auto [rank, basis] = rref(m);
    matrix_ = std::move(basis);
    for (std::size_t i = 0; i < rank; ++i) {
        QPoly p(4);
        for (const auto& [col, c] : matrix_.row(i)) p.add(monos[col], c);
        basis_.push_back(std::move(p));
    }
}

bool PolySpan::contains(const QPoly& p) const {
    if (p.is_zero()) return true;
    if (!p.is_homogeneous(degree_)) return false;
    auto monos = monomials_of_degree(4, degree_);
    EchelonBasis<Rational> eb(monos.size());
    for (std::size_t i = 0; i < matrix_.rows(); ++i) eb.insert(matrix_.row(i));
    SparseRow<Rational> row;
    for (const auto& [e, c] : p.terms()) row.emplace_back(monomial_index(monos, e), c);
    eb.reduce(row);
    return row.empty();
}

PolySpan curve_ideal(CurveKind k) {
    // Parametrized as the unipotent flow exp(z A_Y) applied to the divisor
    // fixed points 3p_0, 2p_0 + inf, p_0 + 2inf (the coordinate axes e_0,
    // e_1, e_2); components are polynomials in the flow parameter.
    DerivationPair p = e3_pair();
    std::size_t start = k == CurveKind::TwistedCubic ? 0 : (k == CurveKind::Conic ? 1 : 2);

    // exp(z A) e_start: column vectors of z-polynomials, A nilpotent.
    std::vector<std::vector<Rational>> comp(4);  // comp[i][r] = coeff of z^r in x_i(z)
    for (auto& c : comp) c.assign(4, Rational(0));
    std::vector<Rational> basis_vec(4, Rational(0));
    basis_vec[start] = Rational(1);
    Rational factorial(1);
    QMat pw = QMat::identity(4);
    for (std::size_t r = 0; r < 4; ++r) {
        if (r > 0) {
            pw = pw * p.y.a;
            factorial *= Rational(static_cast<long>(r));
        }
        for (std::size_t i = 0; i < 4; ++i) {
            Rational v(0);
            for (std::size_t j = 0; j < 4; ++j) v += pw(i, j) * basis_vec[j];
            comp[i][r] = v / factorial;
        }
    }

    auto quadrics = monomials_of_degree(4, 2);
    // row r of M = coefficient of z^r in the quadric evaluated on the curve
    SparseMatrix<Rational> m(7, quadrics.size());
    for (std::size_t c = 0; c < quadrics.size(); ++c) {
        // product of the two variables' z-polynomials
        std::vector<Rational> prod{Rational(1)};
        for (std::size_t i = 0; i < 4; ++i)
            for (int e = 0; e < quadrics[c][i]; ++e) {
                std::vector<Rational> next(prod.size() + 3, Rational(0));
                for (std::size_t s = 0; s < prod.size(); ++s)
                    for (std::size_t t = 0; t < 4; ++t) next[s + t] += prod[s] * comp[i][t];
                prod = std::move(next);
            }
        for (std::size_t r = 0; r < prod.size() && r < 7; ++r)
            if (!prod[r].is_zero()) m.set(r, c, prod[r]);
    }
    auto ker = nullspace(m);
    std::vector<QPoly> span;
    for (const auto& v : ker) {
        QPoly q(4);
        for (std::size_t c = 0; c < quadrics.size(); ++c)
            if (!v[c].is_zero()) q.add(quadrics[c], v[c]);
        span.push_back(std::move(q));
    }
    return PolySpan(2, span);
}

EquivariantIdealReport equivariant_ideal_check(const StarProduct& s,
                                               const std::vector<QPoly>& generators,
                                               std::size_t degree_bound) {
    EquivariantIdealReport rep;
    std::size_t n = s.pair.x.n();

    // Graded components of the classical ideal up to degree_bound + 1.
    std::vector<PolySpan> ideal(degree_bound + 2);
    for (std::size_t d = 0; d <= degree_bound + 1; ++d) {
        std::vector<QPoly> span;
        for (const auto& g : generators) {
            long dg = g.degree();
            if (dg < 0 || static_cast<std::size_t>(dg) > d) continue;
            for (const auto& e : monomials_of_degree(n, d - static_cast<std::size_t>(dg))) {
                QPoly m(n);
                m.add(e, Rational(1));
                span.push_back(m * g);
            }
        }
        ideal[d] = PolySpan(d, span);
    }

    rep.lie_stable = true;
    for (std::size_t d = 0; d <= degree_bound + 1 && rep.lie_stable; ++d) {
        for (const auto& g : ideal[d].basis()) {
            if (!ideal[d].contains(s.pair.x(g)) || !ideal[d].contains(s.pair.y(g))) {
                rep.lie_stable = false;
                rep.failure = "Lie stability fails in degree " + std::to_string(d);
                break;
            }
        }
    }

    rep.star_stable = true;
    for (std::size_t d = 0; d <= degree_bound && rep.star_stable; ++d) {
        for (const auto& g : ideal[d].basis()) {
            for (std::size_t i = 0; i < n && rep.star_stable; ++i) {
                QPoly xi = QPoly::variable(n, i);
                if (!ideal[d + 1].contains(star(s, xi, g)) ||
                    !ideal[d + 1].contains(star(s, g, xi))) {
                    rep.star_stable = false;
                    rep.failure = "two-sided ideal check fails in degree " + std::to_string(d);
                }
            }
        }
    }
    return rep;
}

}  // namespace ncdef
