#include "ncdef/superpot.hpp"

#include <stdexcept>

namespace ncdef {

bool is_untwisted_cyclic(const Tensor<Rational>& phi) {
    Tensor<Rational> lhs = cyc_shift(phi);
    Tensor<Rational> rhs = (phi.degree() % 2 == 0) ? -phi : phi;
    return lhs == rhs;
}

TwistResult find_twist(const Tensor<Rational>& phi) {
    if (phi.is_zero()) throw std::invalid_argument("find_twist: zero tensor");
    std::size_t n = phi.n();
    std::size_t d = phi.degree();
    Tensor<Rational> target = cyc_shift(phi);
    Rational sign = (d % 2 == 0) ? Rational(-1) : Rational(1);

    // Per first letter i: sum_a Q[i][a] phi[a.t] = sign * cyc(phi)[i.t] over
    // all tails t. The coefficient matrix is the same for every i.
    std::size_t tails = pow_sz(n, d - 1);
    TwistResult out;
    QMat q(n, n);
    bool ambiguous = false;
    for (std::size_t i = 0; i < n; ++i) {
        SparseMatrix<Rational> sys(tails, n + 1);
        for (const auto& [w, c] : phi.terms()) {
            Word tail(w.begin() + 1, w.end());
            sys.set(word_index(tail, n), w[0], c);
        }
        for (const auto& [w, c] : target.terms()) {
            if (w[0] != i) continue;
            Word tail(w.begin() + 1, w.end());
            sys.set(word_index(tail, n), n, sign * c);
        }
        auto [rank, basis] = rref(sys);
        for (std::size_t r = 0; r < rank; ++r)
            if (basis.row(r).front().first == n) {
                out.status = TwistResult::Status::None;
                return out;
            }
        std::size_t coeff_rank = 0;
        for (std::size_t r = 0; r < rank; ++r)
            if (basis.row(r).front().first < n) ++coeff_rank;
        if (coeff_rank < n) ambiguous = true;
        for (std::size_t r = 0; r < rank; ++r) {
            std::size_t piv = basis.row(r).front().first;
            if (piv < n) q(i, piv) = basis.get(r, n);  // free unknowns left at zero
        }
    }
    out.q = q;
    out.status = ambiguous ? TwistResult::Status::Ambiguous : TwistResult::Status::Unique;
    return out;
}

TensorSubspace<Rational> derived_relations(const Tensor<Rational>& phi) {
    if (phi.degree() < 2) throw std::invalid_argument("derived_relations: degree < 2");
    return contract_front(phi, phi.degree() - 2);
}

QuadraticAlgebra derived_algebra(const Tensor<Rational>& phi) {
    QuadraticAlgebra a;
    a.n = phi.n();
    a.relations = derived_relations(phi);
    return a;
}

CyReport cy_report(const Tensor<Rational>& phi, std::size_t K, const HilbertOptions& opts) {
    CyReport rep;
    rep.untwisted_cyclic = is_untwisted_cyclic(phi);
    rep.dim_top_derivative = phi.is_zero() ? 0 : contract_front(phi, phi.degree() - 1).dim();
    if (!phi.is_zero() && rep.dim_top_derivative == phi.n()) {
        rep.hilbert_matches = hilbert_matches_polynomial(derived_algebra(phi), K, opts);
    }
    rep.pass = rep.untwisted_cyclic && rep.dim_top_derivative == phi.n() && rep.hilbert_matches;
    return rep;
}

}  // namespace ncdef
