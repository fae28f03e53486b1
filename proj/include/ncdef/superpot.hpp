#pragma once

#include "ncdef/matrix.hpp"
#include "ncdef/quadalg.hpp"
#include "ncdef/tensor.hpp"

#include <optional>

namespace ncdef {

// Outcome of solving cyc(phi) = (-1)^{d-1} (Q (x) 1 (x) ... (x) 1) phi.
struct TwistResult {
    enum class Status { Unique, Ambiguous, None };
    Status status = Status::None;
    std::optional<QMat> q;  // a solution when status != None

    bool is_identity() const { return q && *q == QMat::identity(q->rows()); }
};

// Solves the linear system for the twist Q; Q = identity means untwisted.
// Rank-deficient flatten(phi,1) with a consistent system reports Ambiguous.
TwistResult find_twist(const Tensor<Rational>& phi);

// True iff cyc(phi) = (-1)^{d-1} phi.
bool is_untwisted_cyclic(const Tensor<Rational>& phi);

// The relation subspace d^{d-2} phi of V (x) V.
TensorSubspace<Rational> derived_relations(const Tensor<Rational>& phi);

// The quadratic algebra T(V)/(d^{d-2} phi).
QuadraticAlgebra derived_algebra(const Tensor<Rational>& phi);

struct CyReport {
    bool untwisted_cyclic = false;
    std::size_t dim_top_derivative = 0;  // dim d^{d-1} phi, must equal n
    bool hilbert_matches = false;
    bool pass = false;
};

// The Calabi-Yau criterion checks for a degree-4 superpotential on V = C^4:
// untwisted cyclicity, d^3 phi = V, and the polynomial Hilbert function of
// the derived algebra up to degree K.
CyReport cy_report(const Tensor<Rational>& phi, std::size_t K,
                   const HilbertOptions& opts = {});

}  // namespace ncdef
