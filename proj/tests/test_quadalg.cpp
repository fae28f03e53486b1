#include <doctest.h>

#include "ncdef/quadalg.hpp"

#include <random>

using namespace ncdef;

namespace {

using QT = Tensor<Rational>;

QT relator(std::size_t n, const Word& w1, Rational c1, const Word& w2, Rational c2) {
    QT t(n, 2);
    t.add(w1, c1);
    t.add(w2, c2);
    return t;
}

// Skew-polynomial relators x_i x_j - q_ij x_j x_i for the L(1,1,1,1) normal
// form with parameters q_0..q_3.
std::vector<QT> skew_relators(const std::array<Rational, 4>& q) {
    std::vector<QT> rel;
    auto idx = [](int i) { return static_cast<std::uint8_t>(((i % 4) + 4) % 4); };
    for (int i = 0; i < 4; ++i) {
        // x_i x_{i+1} = (q_{i+3}/q_{i+2})^{(-1)^i} x_{i+1} x_i
        Rational ratio = q[idx(i + 3)] / q[idx(i + 2)];
        if (i % 2 == 1) ratio = ratio.inv();
        rel.push_back(relator(4, {idx(i), idx(i + 1)}, Rational(1), {idx(i + 1), idx(i)}, -ratio));
    }
    for (int i = 0; i < 2; ++i) {
        // x_i x_{i+2} = (q_{i+1}/q_{i+3})^{(-1)^i} x_{i+2} x_i
        Rational ratio = q[idx(i + 1)] / q[idx(i + 3)];
        if (i % 2 == 1) ratio = ratio.inv();
        rel.push_back(relator(4, {idx(i), idx(i + 2)}, Rational(1), {idx(i + 2), idx(i)}, -ratio));
    }
    return rel;
}

std::vector<std::size_t> expected_poly_dims(std::size_t n, std::size_t K) {
    std::vector<std::size_t> d;
    for (std::size_t k = 0; k <= K; ++k) d.push_back(binom(k + n - 1, n - 1));
    return d;
}

QMat random_invertible(std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 3);
    for (;;) {
        QMat m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(num(rng), den(rng));
        try {
            m.inverse();
            return m;
        } catch (const std::domain_error&) {
        }
    }
}

}  // namespace

TEST_CASE("hilbert_function of the commutative algebra") {
    QuadraticAlgebra a(4, commutative_relators(4));
    auto d = hilbert_function(a, 6);
    CHECK(d.dims == expected_poly_dims(4, 6));
}

TEST_CASE("hilbert_function detects a broken relation at degree 3") {
    // replace x_0 (x) x_1 - x_1 (x) x_0 by x_0 (x) x_0
    auto rel = commutative_relators(4);
    QT sq(4, 2);
    sq.add({0, 0}, Rational(1));
    rel[0] = sq;
    QuadraticAlgebra a(4, rel);
    auto d = hilbert_function(a, 3);
    CHECK(d.dims[2] == 10);  // still 6 independent quadric relators
    CHECK(d.dims[3] != 20);

    // Independent oracle: rank of the stacked degree-3 ideal matrix in the
    // full 64-dimensional word space.
    auto m = ideal_component_matrix(a, 3);
    std::size_t oracle = rank_only(m);
    CHECK(d.dims[3] == 64 - oracle);
}

TEST_CASE("free algebra fails the polynomial match at degree 2") {
    QuadraticAlgebra a(4, {});
    CHECK_FALSE(hilbert_matches_polynomial(a, 2));
    auto d = hilbert_function(a, 2);
    CHECK(d.dims[2] == 16);
}

TEST_CASE("skew ring with q = (2,3,1/6,1) matches the polynomial ring to degree 6") {
    QuadraticAlgebra a(4, skew_relators({Rational(2), Rational(3), Rational(1, 6), Rational(1)}));
    CHECK(hilbert_matches_polynomial(a, 6));
}

TEST_CASE("d_2 equals n^2 - dim R") {
    std::mt19937_64 rng(31);
    auto rel = commutative_relators(4);
    rel.resize(4);
    QuadraticAlgebra a(4, rel);
    CHECK(hilbert_function(a, 2).dims[2] == 16 - a.relations.dim());
}

TEST_CASE("zhang twist produces the Jordan plane") {
    QuadraticAlgebra comm(2, commutative_relators(2));
    QMat sigma(2, 2);
    // sigma(x) = x, sigma(y) = y - x (columns are images)
    sigma(0, 0) = Rational(1);
    sigma(0, 1) = Rational(-1);
    sigma(1, 1) = Rational(1);
    auto jordan = zhang_twist(comm, sigma);

    QT expected(2, 2);
    expected.add({0, 1}, Rational(1));
    expected.add({1, 0}, Rational(-1));
    expected.add({0, 0}, Rational(1));
    TensorSubspace<Rational> span(2, 2, {expected});
    CHECK(jordan.relations == span);

    // identity twist and inverse round-trip
    CHECK(zhang_twist(comm, QMat::identity(2)).relations == comm.relations);
    auto back = zhang_twist(jordan, sigma.inverse());
    CHECK(back.relations == comm.relations);

    // Jordan plane has the Hilbert function of the plane
    auto d = hilbert_function(jordan, 5);
    CHECK(d.dims == std::vector<std::size_t>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("hilbert function is invariant under automorphism twists and basis changes") {
    std::mt19937_64 rng(57);
    QuadraticAlgebra comm(4, commutative_relators(4));
    QuadraticAlgebra skew(4, skew_relators({Rational(2), Rational(1), Rational(1, 2), Rational(1)}));
    auto comm_base = hilbert_function(comm, 4);
    auto skew_base = hilbert_function(skew, 4);
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 3);
    for (int trial = 0; trial < 3; ++trial) {
        // every invertible sigma is a graded automorphism of the polynomial ring
        QMat sigma = random_invertible(4, rng);
        CHECK(hilbert_function(zhang_twist(comm, sigma), 4).dims == comm_base.dims);

        // diagonal sigmas are graded automorphisms of any skew ring
        QMat diag(4, 4);
        for (std::size_t i = 0; i < 4; ++i) {
            Rational v(0);
            while (v.is_zero()) v = Rational(num(rng), den(rng));
            diag(i, i) = v;
        }
        CHECK(hilbert_function(zhang_twist(skew, diag), 4).dims == skew_base.dims);

        // change of basis g.R: relators moved by g on both factors
        QMat g = random_invertible(4, rng);
        for (const QuadraticAlgebra* alg : {&comm, &skew}) {
            std::vector<QT> moved;
            for (const auto& r : alg->relations.basis()) {
                QT t(4, 2);
                for (const auto& [w, c] : r.terms())
                    for (std::uint8_t i = 0; i < 4; ++i)
                        for (std::uint8_t j = 0; j < 4; ++j) {
                            Rational coeff = c * g(i, w[0]) * g(j, w[1]);
                            if (!coeff.is_zero()) t.add({i, j}, coeff);
                        }
                moved.push_back(std::move(t));
            }
            QuadraticAlgebra moved_alg(4, moved);
            CHECK(hilbert_function(moved_alg, 4).dims ==
                  (alg == &comm ? comm_base.dims : skew_base.dims));
        }
    }
}

TEST_CASE("modular backend agrees with exact ranks up to degree 6") {
    QuadraticAlgebra a(4, commutative_relators(4));
    auto exact = detail::graded_dims<Rational>(4, a.relations.basis(), 6);
    std::uint64_t p = prime_from_seed(9);
    Fp::Context ctx(p);
    auto rel_p = detail::relators_mod_p(a.relations.basis(), p);
    auto modular = detail::graded_dims<Fp>(4, rel_p, 6);
    CHECK(exact == modular);
}

TEST_CASE("degree-7 ideal component of the commutative algebra via rank_mod_p") {
    QuadraticAlgebra a(4, commutative_relators(4));
    auto m = ideal_component_matrix(a, 7);
    CHECK(m.cols() == 16384);
    // dim A_7 = C(10,3) = 120 from the series (1-t)^{-4}
    CHECK(rank_mod_p(m, 4) == 16384 - 120);
}

TEST_CASE("hilbert_function reaches degree 7 with the modular backend") {
    QuadraticAlgebra a(4, commutative_relators(4));
    auto d = hilbert_function(a, 7, {.seed = 3});
    CHECK(d.dims == expected_poly_dims(4, 7));
    auto d2 = hilbert_function(a, 7, {.seed = 3, .exact_degree7 = true});
    CHECK(d2.dims == expected_poly_dims(4, 7));
}

TEST_CASE("zhang twist rejects a singular automorphism") {
    QuadraticAlgebra comm(2, commutative_relators(2));
    QMat singular(2, 2);
    singular(0, 0) = Rational(1);
    singular(1, 0) = Rational(2);  // rank 1
    CHECK_THROWS_AS(zhang_twist(comm, singular), std::domain_error);
}
