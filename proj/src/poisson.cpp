#include "ncdef/poisson.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace ncdef {

namespace {

// (i,j) -> increasing complement (k,l) and the sign of the permutation (i,j,k,l).
struct Complement {
    std::size_t k, l;
    int sign;
};

Complement complement_of(std::size_t i, std::size_t j) {
    bool used[4] = {false, false, false, false};
    used[i] = used[j] = true;
    std::size_t k = 0;
    while (used[k]) ++k;
    std::size_t l = k + 1;
    while (l < 4 && used[l]) ++l;
    std::size_t perm[4] = {i, j, k, l};
    int inversions = 0;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            if (perm[a] > perm[b]) ++inversions;
    return {k, l, (inversions % 2 == 0) ? 1 : -1};
}

std::array<QPoly, 6> curl(const OneForm& a) {
    // beta_{kl} = d_k alpha_l - d_l alpha_k in pair order
    std::array<QPoly, 6> beta;
    for (std::size_t idx = 0; idx < 6; ++idx) {
        auto [k, l] = QuadBracket::pair_of_index(idx);
        beta[idx] = a.alpha[l].derivative(k) - a.alpha[k].derivative(l);
    }
    return beta;
}

}  // namespace

OneFormReport oneform_validate(const OneForm& a) {
    OneFormReport rep;
    rep.cubic = true;
    for (const auto& p : a.alpha)
        if (!p.is_homogeneous(3)) rep.cubic = false;

    QPoly euler(4);
    for (std::size_t i = 0; i < 4; ++i) euler += QPoly::variable(4, i) * a.alpha[i];
    rep.euler_zero = euler.is_zero();

    auto beta = curl(a);
    auto beta_of = [&](std::size_t k, std::size_t l) -> QPoly {
        if (k == l) return QPoly(4);
        if (k < l) return beta[QuadBracket::pair_index(k, l)];
        return -beta[QuadBracket::pair_index(l, k)];
    };
    rep.integrable = true;
    static constexpr std::array<std::array<std::size_t, 3>, 4> triples = {
        {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
    for (const auto& t : triples) {
        auto [p, q, r] = std::tuple{t[0], t[1], t[2]};
        QPoly comp = a.alpha[p] * beta_of(q, r) - a.alpha[q] * beta_of(p, r) +
                     a.alpha[r] * beta_of(p, q);
        if (!comp.is_zero()) rep.integrable = false;
    }
    return rep;
}

QuadBracket bracket_from_oneform(const OneForm& a) {
    auto rep = oneform_validate(a);
    if (!rep.pass()) throw std::domain_error("bracket_from_oneform: invalid one-form");
    auto beta = curl(a);
    QuadBracket b;
    for (std::size_t idx = 0; idx < 6; ++idx) {
        auto [i, j] = QuadBracket::pair_of_index(idx);
        auto c = complement_of(i, j);
        QPoly p = beta[QuadBracket::pair_index(c.k, c.l)];
        if (c.sign < 0) p = -p;
        b.pi[idx] = std::move(p);
    }
    return b;
}

OneForm oneform_from_bracket(const QuadBracket& b) {
    // Unknowns: 4 components x 20 cubic monomial coefficients.
    auto cubics = monomials_of_degree(4, 3);
    auto quartics = monomials_of_degree(4, 4);
    auto quadrics = monomials_of_degree(4, 2);
    const std::size_t nu = 4 * cubics.size();  // 80

    // Rows: 35 Euler-contraction equations + 60 bracket-match equations,
    // augmented with the right-hand side in the last column.
    SparseMatrix<Rational> sys(quartics.size() + 6 * quadrics.size(), nu + 1);
    std::size_t row = 0;

    // sum_i x_i alpha_i = 0
    for (const auto& q : quartics) {
        SparseRow<Rational> r;
        for (std::size_t i = 0; i < 4; ++i) {
            if (q[i] == 0) continue;
            Exps e = q;
            e[i] -= 1;
            std::size_t col = i * cubics.size() + monomial_index(cubics, e);
            r.emplace_back(col, Rational(1));
        }
        std::sort(r.begin(), r.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        sys.set_row(row++, std::move(r));
    }

    // bracket_from_oneform(alpha) = b, i.e. for each pair (i,j):
    //   sign * (d_k alpha_l - d_l alpha_k) = pi_ij
    for (std::size_t idx = 0; idx < 6; ++idx) {
        auto [i, j] = QuadBracket::pair_of_index(idx);
        auto c = complement_of(i, j);
        for (const auto& m : quadrics) {
            SparseRow<Rational> r;
            auto add_term = [&](std::size_t comp, std::size_t var, int sgn) {
                // coefficient of monomial m in d_var alpha_comp
                Exps e = m;
                if (e[var] >= 15) throw std::logic_error("oneform_from_bracket: degree overflow");
                e[var] += 1;
                Rational coeff = Rational(static_cast<long>(e[var])) * Rational(sgn);
                std::size_t col = comp * cubics.size() + monomial_index(cubics, e);
                r.emplace_back(col, c.sign > 0 ? coeff : -coeff);
            };
            add_term(c.l, c.k, 1);
            add_term(c.k, c.l, -1);
            std::sort(r.begin(), r.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            Rational rhs = b.pi[idx].coeff(m);
            if (!rhs.is_zero()) r.emplace_back(nu, rhs);
            sys.set_row(row++, std::move(r));
        }
    }

    auto [rank, basis] = rref(sys);
    // A pivot in the augmented column means the system is inconsistent.
    for (std::size_t i = 0; i < rank; ++i)
        if (basis.row(i).front().first == nu)
            throw std::domain_error("oneform_from_bracket: bracket is not unimodular-Poisson");
    // The homogeneous solution space is zero (a closed one-form with zero
    // Euler contraction vanishes), so the solution is unique.
    if (rank != nu)
        throw std::domain_error("oneform_from_bracket: unexpected underdetermined system");

    OneForm out;
    for (std::size_t i = 0; i < rank; ++i) {
        const auto& r = basis.row(i);
        std::size_t piv = r.front().first;
        Rational value = basis.get(i, nu);
        if (value.is_zero()) continue;
        std::size_t comp = piv / cubics.size();
        out.alpha[comp].add(cubics[piv % cubics.size()], value);
    }
    return out;
}

QuadBracket euler_wedge_bracket(const LinearVectorField& z) {
    QuadBracket b;
    for (std::size_t idx = 0; idx < 6; ++idx) {
        auto [i, j] = QuadBracket::pair_of_index(idx);
        QPoly xi = QPoly::variable(4, i), xj = QPoly::variable(4, j);
        b.pi[idx] = z(xi) * xj - xi * z(xj);
    }
    return b;
}

QuadBracket lie_derivative(const QuadBracket& b, const LinearVectorField& w) {
    QuadBracket out;
    for (std::size_t idx = 0; idx < 6; ++idx) {
        auto [i, j] = QuadBracket::pair_of_index(idx);
        QPoly xi = QPoly::variable(4, i), xj = QPoly::variable(4, j);
        out.pi[idx] = w(b.pi[idx]) - bracket_eval(b, w(xi), xj) - bracket_eval(b, xi, w(xj));
    }
    return out;
}

UnimodularDecomposition decompose_unimodular(const QuadBracket& b) {
    // defect_j(E ^ Z) = (tr Z) x_j - 4 Z(x_j); solving against defect(b) with
    // the trace-free normalization gives Z = -D/4 where D is the defect
    // coefficient matrix.
    auto defect = unimodularity_defect(b);
    QMat d(4, 4);
    for (std::size_t j = 0; j < 4; ++j) {
        if (!defect[j].is_zero() && !defect[j].is_homogeneous(1))
            throw std::domain_error("decompose_unimodular: nonlinear defect");
        for (std::size_t k = 0; k < 4; ++k) {
            Exps e(4, 0);
            e[k] = 1;
            d(j, k) = defect[j].coeff(e);
        }
    }
    if (!d.trace().is_zero())
        throw std::domain_error("decompose_unimodular: inconsistent system (input not a bracket table)");
    QMat zmat(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) zmat(i, j) = d(i, j) * Rational(-1, 4);
    LinearVectorField z(zmat);
    UnimodularDecomposition out;
    out.z = z;
    out.unimodular_part = b - euler_wedge_bracket(z);
    if (!is_unimodular(out.unimodular_part))
        throw std::logic_error("decompose_unimodular: residual defect");
    out.z_is_symmetry = lie_derivative(out.unimodular_part, z).is_zero();
    return out;
}

namespace {

// Matrix of a linear vector field acting on the degree-d monomial space;
// column c holds the coordinates of W(monomial_c).
SparseMatrix<Rational> operator_matrix(const LinearVectorField& w, const std::vector<Exps>& monos) {
    SparseMatrix<Rational> m(monos.size(), monos.size());
    std::size_t n = w.n();
    for (std::size_t c = 0; c < monos.size(); ++c) {
        QPoly mono(n);
        mono.add(monos[c], Rational(1));
        QPoly img = w(mono);
        for (const auto& [e, v] : img.terms()) m.set(monomial_index(monos, e), c, v);
    }
    return m;
}

bool is_diagonal(const QMat& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j && !m(i, j).is_zero()) return false;
    return true;
}

// Characteristic polynomial det(tI - A) of a small dense rational matrix by
// evaluation at dim+1 points and Lagrange interpolation.
std::vector<Rational> char_poly(const std::vector<std::vector<Rational>>& a) {
    std::size_t s = a.size();
    auto det_at = [&](const Rational& t) {
        std::vector<std::vector<Rational>> m(s, std::vector<Rational>(s));
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < s; ++j) m[i][j] = (i == j ? t - a[i][j] : -a[i][j]);
        Rational det(1);
        for (std::size_t col = 0, row = 0; col < s && row < s; ++col) {
            std::size_t piv = row;
            while (piv < s && m[piv][col].is_zero()) ++piv;
            if (piv == s) return Rational(0);
            if (piv != row) {
                std::swap(m[piv], m[row]);
                det = -det;
            }
            det *= m[row][col];
            Rational inv = m[row][col].inv();
            for (std::size_t i = row + 1; i < s; ++i) {
                if (m[i][col].is_zero()) continue;
                Rational f = m[i][col] * inv;
                for (std::size_t j = col; j < s; ++j) m[i][j] -= f * m[row][j];
            }
            ++row;
        }
        return det;
    };
    // Lagrange interpolation on t = 0..s.
    std::vector<Rational> ys;
    for (std::size_t i = 0; i <= s; ++i) ys.push_back(det_at(Rational(static_cast<long>(i))));
    std::vector<Rational> coeffs(s + 1, Rational(0));
    for (std::size_t i = 0; i <= s; ++i) {
        // basis polynomial prod_{j != i} (t - j) / (i - j)
        std::vector<Rational> num{Rational(1)};
        Rational den(1);
        for (std::size_t j = 0; j <= s; ++j) {
            if (j == i) continue;
            std::vector<Rational> next(num.size() + 1, Rational(0));
            for (std::size_t k = 0; k < num.size(); ++k) {
                next[k + 1] += num[k];
                next[k] -= num[k] * Rational(static_cast<long>(j));
            }
            num = std::move(next);
            den *= Rational(static_cast<long>(i)) - Rational(static_cast<long>(j));
        }
        Rational scale = ys[i] / den;
        for (std::size_t k = 0; k < num.size(); ++k) coeffs[k] += num[k] * scale;
    }
    return coeffs;  // coeffs[k] multiplies t^k
}

std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs) {
    // Clear denominators to an integer polynomial and run the rational root test.
    mpz_class lcm(1);
    for (const auto& c : coeffs) {
        mpz_class den = c.den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        lcm = lcm / g * den;
    }
    std::vector<mpz_class> ic;
    for (const auto& c : coeffs) ic.push_back(c.num() * (lcm / c.den()));
    std::size_t lead = ic.size();
    while (lead > 0 && ic[lead - 1] == 0) --lead;
    if (lead == 0) return {};
    std::size_t low = 0;
    while (low < lead && ic[low] == 0) ++low;  // factor out t^low; root 0 handled separately

    auto divisors = [](mpz_class v) {
        v = abs(v);
        std::vector<mpz_class> out;
        for (mpz_class d = 1; d * d <= v; ++d) {
            if (v % d == 0) {
                out.push_back(d);
                out.push_back(v / d);
            }
            if (out.size() > 4096) throw std::runtime_error("rational_roots: divisor explosion");
        }
        return out;
    };

    std::set<Rational> roots;
    if (low > 0) roots.insert(Rational(0));
    auto eval = [&](const Rational& t) {
        Rational acc(0);
        for (std::size_t k = ic.size(); k-- > 0;) acc = acc * t + Rational(mpq_class(ic[k]));
        return acc;
    };
    for (const auto& p : divisors(ic[low]))
        for (const auto& q : divisors(ic[lead - 1]))
            for (int s : {1, -1}) {
                Rational cand(mpq_class(s * p, q));
                if (eval(cand).is_zero()) roots.insert(cand);
            }
    return std::vector<Rational>(roots.begin(), roots.end());
}

}  // namespace

RelativeInvariants relative_invariants(const LinearVectorField& x, const LinearVectorField& y,
                                       std::size_t degree) {
    auto monos = monomials_of_degree(4, degree);
    auto my = operator_matrix(y, monos);
    auto mx = operator_matrix(x, monos);

    // Candidate eigenvalues of X on ker Y.
    std::vector<Rational> candidates;
    if (is_diagonal(x.a)) {
        std::set<Rational> weights;
        for (const auto& e : monos) {
            Rational w(0);
            for (std::size_t i = 0; i < 4; ++i) w += Rational(static_cast<long>(e[i])) * x.a(i, i);
            weights.insert(w);
        }
        candidates.assign(weights.begin(), weights.end());
    } else {
        // Restrict X to ker Y and take rational eigenvalues of the restriction.
        auto ker = nullspace(my);
        if (ker.empty()) return {Rational(0), {}};
        // Free-column coordinates: each kernel vector is 1 on its own free
        // column and 0 on the others, so expansion coefficients read off there.
        auto [rank, basis] = rref(my);
        std::vector<bool> pivot(monos.size(), false);
        for (std::size_t i = 0; i < rank; ++i) pivot[basis.row(i).front().first] = true;
        std::vector<std::size_t> free_cols;
        for (std::size_t c = 0; c < monos.size(); ++c)
            if (!pivot[c]) free_cols.push_back(c);
        std::size_t s = ker.size();
        std::vector<std::vector<Rational>> a(s, std::vector<Rational>(s, Rational(0)));
        for (std::size_t i = 0; i < s; ++i) {
            // X(k_i) in monomial coordinates
            std::vector<Rational> img(monos.size(), Rational(0));
            for (std::size_t r = 0; r < monos.size(); ++r)
                for (const auto& [c, v] : mx.row(r))
                    if (!ker[i][c].is_zero()) img[r] += v * ker[i][c];
            for (std::size_t j = 0; j < s; ++j) a[j][i] = img[free_cols[j]];
        }
        candidates = rational_roots(char_poly(a));
    }

    RelativeInvariants best;
    best.weight = Rational(0);
    std::size_t best_dim = 0;
    bool first = true;
    for (const auto& w : candidates) {
        // Joint kernel of Y and (X - w).
        SparseMatrix<Rational> stacked(2 * monos.size(), monos.size());
        for (std::size_t r = 0; r < monos.size(); ++r) {
            stacked.set_row(r, my.row(r));
            SparseRow<Rational> xr = mx.row(r);
            rowops::axpy(xr, -w, SparseRow<Rational>{{r, Rational(1)}});
            stacked.set_row(monos.size() + r, std::move(xr));
        }
        auto ker = nullspace(stacked);
        if (ker.empty()) continue;
        bool better = first || ker.size() > best_dim || (ker.size() == best_dim && w < best.weight);
        if (!better) continue;
        first = false;
        best_dim = ker.size();
        best.weight = w;
        best.basis.clear();
        for (const auto& v : ker) {
            QPoly p(4);
            for (std::size_t c = 0; c < monos.size(); ++c)
                if (!v[c].is_zero()) p.add(monos[c], v[c]);
            best.basis.push_back(std::move(p));
        }
    }
    return best;
}

std::optional<QPoly> divide_exact(const QPoly& g, const QPoly& f) {
    if (f.is_zero()) return std::nullopt;
    if (g.is_zero()) return QPoly(4);
    long dg = g.degree(), df = f.degree();
    if (dg < df) return std::nullopt;
    auto qm = monomials_of_degree(4, static_cast<std::size_t>(dg - df));
    auto gm = monomials_of_degree(4, static_cast<std::size_t>(dg));
    SparseMatrix<Rational> sys(gm.size(), qm.size() + 1);
    for (std::size_t c = 0; c < qm.size(); ++c) {
        QPoly prod(4);
        prod.add(qm[c], Rational(1));
        prod = prod * f;
        for (const auto& [e, v] : prod.terms()) {
            std::size_t r = monomial_index(gm, e);
            sys.set(r, c, v);
        }
    }
    for (const auto& [e, v] : g.terms()) sys.set(monomial_index(gm, e), qm.size(), v);
    auto [rank, basis] = rref(sys);
    for (std::size_t i = 0; i < rank; ++i)
        if (basis.row(i).front().first == qm.size()) return std::nullopt;  // inconsistent
    QPoly q(4);
    for (std::size_t i = 0; i < rank; ++i) {
        std::size_t piv = basis.row(i).front().first;
        Rational val = basis.get(i, qm.size());
        if (!val.is_zero()) q.add(qm[piv], val);
    }
    return q;
}

}  // namespace ncdef
