#pragma once

#include "ncdef/poisson.hpp"
#include "ncdef/quadalg.hpp"

#include <string>
#include <vector>

namespace ncdef {

// Pair of linear vector fields with [Y, X] = Y and Y nilpotent; the input to
// the universal deformation formula.
struct DerivationPair {
    LinearVectorField x, y;
};

// The vector fields of the exceptional component:
//   X = -5/4 x0 d0 - 1/4 x1 d1 + 3/4 x2 d2 + 7/4 x3 d3
//   Y = 4 x0 d1 + 4 x1 d2 + 4 x2 d3
DerivationPair e3_pair();

struct PairReport {
    bool commutation_ok = false;   // [Y,X] = Y as operators
    bool nilpotent = false;        // Y^m = 0 for some m <= n
    std::size_t nilpotency_index = 0;
    bool locally_nilpotent_ok = false;  // graded pieces up to the bound are killed
    bool valid() const { return commutation_ok && nilpotent; }
};

PairReport validate_pair(const DerivationPair& p, std::size_t degree_bound = 3);

struct StarProduct {
    DerivationPair pair;
    Rational hbar;
};

// f * g = sum_k hbar^k Y^k(f) . binom(X,k)(g); terminates because Y is
// nilpotent. binom(X,k) is the falling factorial X(X-1)...(X-k+1)/k!,
// composed right-to-left ((X-(k-1)) applied first).
QPoly star(const StarProduct& s, const QPoly& f, const QPoly& g);

QPoly star_commutator(const StarProduct& s, const QPoly& f, const QPoly& g);

// First-order commutator table: pi_ij = Y(x_i)X(x_j) - Y(x_j)X(x_i).
QuadBracket star_commutator_bracket(const DerivationPair& p);

// Associativity residuals (f*g)*h - f*(g*h) over all generator triples plus
// 20 seeded random triples of polynomials of degree <= degree_bound.
std::vector<QPoly> associativity_defect(const StarProduct& s, std::size_t degree_bound,
                                        std::uint64_t seed);

struct StarPresentation {
    QuadraticAlgebra algebra;  // kernel of the star-multiplication map V(x)V -> A_2
    bool degenerate = false;   // kernel dimension != n(n-1)/2
};

StarPresentation star_presentation(const StarProduct& s);

struct RescalingReport {
    bool supported = false;   // X diagonal with rational eigenvalues
    Rational hbar_prime;      // determined from one commutator
    bool full_match = false;  // all products up to the degree bound agree
};

// Checks that x_i -> mu^{m_i} x_i intertwines *_hbar with *_hbar' for the
// hbar' fixed by matching one commutator coefficient.
RescalingReport rescaling_iso_check(const DerivationPair& p, const Rational& mu,
                                    const Rational& hbar, std::size_t degree_bound);

// Canonical span of homogeneous degree-d polynomials; basis rows in reduced
// echelon form over the monomial table.
class PolySpan {
public:
    PolySpan() : degree_(0) {}
    PolySpan(std::size_t degree, const std::vector<QPoly>& span);

    std::size_t dim() const { return basis_.size(); }
    std::size_t degree() const { return degree_; }
    const std::vector<QPoly>& basis() const { return basis_; }
    bool contains(const QPoly& p) const;

    friend bool operator==(const PolySpan& a, const PolySpan& b) {
        return a.degree_ == b.degree_ && a.matrix_ == b.matrix_;
    }

private:
    std::size_t degree_;
    std::vector<QPoly> basis_;
    SparseMatrix<Rational> matrix_;
};

enum class CurveKind { TwistedCubic, Conic, Line };

// Span of the quadrics vanishing on the degree-3 divisor curves 3p, 2p+inf,
// p+2inf, in the coordinates aligned with the e3 vector fields.
PolySpan curve_ideal(CurveKind k);

struct EquivariantIdealReport {
    bool lie_stable = false;   // each graded component stable under X and Y
    bool star_stable = false;  // x_i * g and g * x_i stay in the ideal
    std::string failure;
    bool pass() const { return lie_stable && star_stable; }
};

// Verifies that the classical homogeneous ideal generated by `generators` is
// a two-sided ideal for the star product, degree by degree up to the bound.
EquivariantIdealReport equivariant_ideal_check(const StarProduct& s,
                                               const std::vector<QPoly>& generators,
                                               std::size_t degree_bound);

}  // namespace ncdef
