#include <doctest.h>

#include "ncdef/cgg.hpp"
#include "ncdef/families.hpp"
#include "ncdef/poisson.hpp"

#include <random>

using namespace ncdef;

namespace {

QPoly qmono(std::size_t i, std::size_t j) {
    Exps e(4, 0);
    e[i] += 1;
    e[j] += 1;
    QPoly p(4);
    p.add(e, Rational(1));
    return p;
}

QPoly var(std::size_t i) { return QPoly::variable(4, i); }

QuadBracket e3_bracket() { return star_commutator_bracket(e3_pair()); }

}  // namespace

TEST_CASE("bracket_eval on the exceptional bracket") {
    QuadBracket e3 = e3_bracket();
    CHECK(bracket_eval(e3, var(0), var(1)) == Rational(5) * qmono(0, 0));

    // antisymmetry: {f, f} = 0
    QPoly f = var(0) * var(1) + Rational(3) * var(2) * var(3) * var(1);
    CHECK(bracket_eval(e3, f, f).is_zero());

    // Leibniz: {x_0, x_1 x_2} = {x_0,x_1} x_2 + x_1 {x_0,x_2} = 5x_0^2 x_2 + 5x_0 x_1^2
    QPoly expected = Rational(5) * (var(0) * var(0) * var(2)) + Rational(5) * (var(0) * var(1) * var(1));
    CHECK(bracket_eval(e3, var(0), var(1) * var(2)) == expected);
}

TEST_CASE("e3 bracket table matches the printed display") {
    QuadBracket e3 = e3_bracket();
    CHECK(e3.at(0, 1) == Rational(5) * qmono(0, 0));
    CHECK(e3.at(0, 2) == Rational(5) * qmono(0, 1));
    CHECK(e3.at(0, 3) == Rational(5) * qmono(0, 2));
    CHECK(e3.at(1, 2) == qmono(1, 1) + Rational(3) * qmono(0, 2));
    CHECK(e3.at(1, 3) == qmono(1, 2) + Rational(7) * qmono(0, 3));
    CHECK(e3.at(2, 3) == Rational(7) * qmono(1, 3) - Rational(3) * qmono(2, 2));
}

TEST_CASE("jacobiator") {
    CHECK(is_poisson(e3_bracket()));

    // two-variable support is automatically Poisson
    QuadBracket b1;
    b1.set(0, 1, qmono(0, 0));
    for (const auto& j : jacobiator(b1)) CHECK(j.is_zero());

    // pi_01 = x_2^2, pi_23 = x_0^2 fails Jacobi with the hand-expanded values
    QuadBracket b2;
    b2.set(0, 1, qmono(2, 2));
    b2.set(2, 3, qmono(0, 0));
    auto j = jacobiator(b2);  // triples (0,1,2), (0,1,3), (0,2,3), (1,2,3)
    CHECK(j[0].is_zero());
    CHECK(j[1] == Rational(-2) * (var(0) * var(0) * var(2)));
    CHECK(j[2].is_zero());
    CHECK(j[3] == Rational(-2) * (var(0) * var(2) * var(2)));
}

TEST_CASE("unimodularity defect") {
    auto l1111 = instance(FamilyId::L1111,
                          L1111Params{{Rational(1), Rational(-1), Rational(2), Rational(-2)},
                                      {Rational(2), Rational(3), Rational(1, 6), Rational(1)}});
    for (const auto& d : unimodularity_defect(l1111.bracket)) CHECK(d.is_zero());

    QuadBracket b;
    b.set(0, 1, qmono(0, 0));
    auto d = unimodularity_defect(b);
    CHECK(d[1] == Rational(2) * var(0));
    CHECK(d[0].is_zero());

    QuadBracket zero;
    for (const auto& p : unimodularity_defect(zero)) CHECK(p.is_zero());
}

TEST_CASE("bracket_from_oneform on the L(1,1,1,1) normal form") {
    std::array<Rational, 4> a{Rational(1), Rational(-1), Rational(2), Rational(-2)};
    auto inst = instance(FamilyId::L1111, L1111Params{a, {Rational(2), Rational(3), Rational(1, 6), Rational(1)}});
    QuadBracket b = bracket_from_oneform(inst.oneform);
    CHECK(b == inst.bracket);
    // {x_0,x_1} = (a_3 - a_2) x_0 x_1 = -4 x_0 x_1
    CHECK(b.at(0, 1) == Rational(-4) * qmono(0, 1));

    OneForm zero;
    CHECK(bracket_from_oneform(zero).is_zero());
}

TEST_CASE("bracket_from_oneform on R(1,3) kills the x_0 row") {
    std::array<std::array<Rational, 3>, 3> b{};
    R13Params p{Rational(1), Rational(0), b};
    auto inst = instance(FamilyId::R13, p);
    QuadBracket br = bracket_from_oneform(inst.oneform);
    CHECK(br == inst.bracket);
    CHECK(br.at(0, 1).is_zero());
    CHECK(br.at(0, 2).is_zero());
    CHECK(br.at(0, 3).is_zero());
    // {x_1, x_2} = nu x_3^2 at lambda = 0, b = 0
    CHECK(br.at(1, 2) == qmono(3, 3));
}

TEST_CASE("oneform_validate") {
    // R(2,2): alpha = g_1 dg_2 - g_2 dg_1 is integrable by wedge algebra
    auto r22 = instance(FamilyId::R22, sample_params(FamilyId::R22, 3));
    auto rep = oneform_validate(r22.oneform);
    CHECK(rep.cubic);
    CHECK(rep.euler_zero);
    CHECK(rep.integrable);

    // L(1,1,1,1): Euler contraction is (sum a_i) x_0x_1x_2x_3 = 0
    auto l1111 = instance(FamilyId::L1111, sample_params(FamilyId::L1111, 3));
    CHECK(oneform_validate(l1111.oneform).euler_zero);

    // alpha = x_1^3 dx_0 has nonzero Euler contraction
    OneForm bad;
    bad.alpha[0] = var(1) * var(1) * var(1);
    CHECK_FALSE(oneform_validate(bad).euler_zero);
}

TEST_CASE("oneform_from_bracket round-trips") {
    // displayed L(1,1,1,1) one-form
    auto inst = instance(FamilyId::L1111, sample_params(FamilyId::L1111, 11));
    OneForm recovered = oneform_from_bracket(inst.bracket);
    CHECK(recovered == inst.oneform);

    // zero bracket -> zero one-form
    QuadBracket zero;
    CHECK(oneform_from_bracket(zero) == OneForm{});

    // E(3): some valid alpha, validated by the round-trip itself
    QuadBracket e3 = e3_bracket();
    OneForm alpha = oneform_from_bracket(e3);
    CHECK(oneform_validate(alpha).pass());
    CHECK(bracket_from_oneform(alpha) == e3);
}

TEST_CASE("round-trip in the other direction on validated one-forms") {
    for (std::uint64_t seed : {1ull, 2ull, 9ull}) {
        for (FamilyId id : {FamilyId::L1111, FamilyId::R22, FamilyId::R13}) {
            auto inst = instance(id, sample_params(id, seed));
            CHECK(oneform_from_bracket(bracket_from_oneform(inst.oneform)) == inst.oneform);
        }
    }
}

TEST_CASE("euler_wedge_bracket and decompose_unimodular") {
    // Z = x_1 d/dx_0: pure E-wedge input decomposes as (0, Z)
    QMat zm(4, 4);
    zm(0, 1) = Rational(1);
    LinearVectorField z(zm);
    QuadBracket ez = euler_wedge_bracket(z);
    CHECK(ez.at(0, 1) == qmono(1, 1));
    auto dec = decompose_unimodular(ez);
    CHECK(dec.unimodular_part.is_zero());
    CHECK(dec.z == z);
    CHECK(dec.z_is_symmetry);

    // the unimodular exceptional bracket decomposes as (itself, 0)
    QuadBracket e3 = e3_bracket();
    auto dec2 = decompose_unimodular(e3);
    CHECK(dec2.unimodular_part == e3);
    CHECK(dec2.z.a.is_zero());

    // e3 + E ^ diag(1,0,0,0): the bracket parts are recovered exactly and the
    // vector field up to the E-ambiguity (trace-free representative)
    QMat dm(4, 4);
    dm(0, 0) = Rational(1);
    LinearVectorField zd(dm);
    QuadBracket mixed = e3 + euler_wedge_bracket(zd);
    auto dec3 = decompose_unimodular(mixed);
    CHECK(dec3.unimodular_part == e3);
    CHECK(euler_wedge_bracket(dec3.z) == euler_wedge_bracket(zd));
    CHECK(dec3.z.a.trace().is_zero());
}

TEST_CASE("decompose_unimodular recovers random trace-free pairs exactly") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<long> num(-6, 6);
    for (int trial = 0; trial < 6; ++trial) {
        // unimodular part: a random skew member; symmetry Z: random trace-free diagonal
        std::array<Rational, 4> a;
        Rational sum(0);
        for (int i = 0; i < 3; ++i) {
            a[i] = Rational(num(rng), 1 + trial % 3);
            sum += a[i];
        }
        a[3] = -sum;
        auto pi_u = instance(FamilyId::L1111,
                             L1111Params{a, {Rational(1), Rational(1), Rational(1), Rational(1)}})
                        .bracket;
        QMat zm(4, 4);
        Rational tz(0);
        for (int i = 0; i < 3; ++i) {
            zm(i, i) = Rational(num(rng));
            tz += zm(i, i);
        }
        zm(3, 3) = -tz;
        LinearVectorField z(zm);
        REQUIRE(lie_derivative(pi_u, z).is_zero());  // diagonal fields preserve skew brackets
        auto dec = decompose_unimodular(pi_u + euler_wedge_bracket(z));
        CHECK(dec.unimodular_part == pi_u);
        CHECK(dec.z == z);
        CHECK(dec.z_is_symmetry);
    }
}

TEST_CASE("lie_derivative") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> num(-5, 5);
    // Euler kills any quadratic bracket table
    for (int trial = 0; trial < 5; ++trial) {
        QuadBracket b;
        auto quadrics = monomials_of_degree(4, 2);
        for (std::size_t idx = 0; idx < 6; ++idx) {
            QPoly p(4);
            for (const auto& e : quadrics) p.add(e, Rational(num(rng)));
            b.pi[idx] = p;
        }
        CHECK(lie_derivative(b, LinearVectorField::euler(4)).is_zero());
    }

    DerivationPair p = e3_pair();
    QuadBracket e3 = e3_bracket();
    CHECK(lie_derivative(e3, p.y).is_zero());
    CHECK(lie_derivative(e3, p.x) == Rational(-1) * e3);
}

TEST_CASE("relative_invariants for the exceptional pair") {
    DerivationPair p = e3_pair();

    auto deg0 = relative_invariants(p.x, p.y, 0);
    CHECK(deg0.weight == Rational(0));
    REQUIRE(deg0.basis.size() == 1);

    auto deg1 = relative_invariants(p.x, p.y, 1);
    REQUIRE(deg1.basis.size() == 1);
    CHECK(deg1.weight == Rational(-5, 4));
    CHECK(PolySpan(1, deg1.basis).contains(var(0)));

    auto deg6 = relative_invariants(p.x, p.y, 6);
    CHECK(deg6.basis.size() == 2);
    QuadBracket e3 = e3_bracket();
    for (const auto& f : deg6.basis) {
        CHECK(p.y(f).is_zero());
        CHECK(p.x(f) == deg6.weight * f);
        for (std::size_t i = 0; i < 4; ++i) {
            // {f, x_i} = -w f Y(x_i) under the engine bracket sign
            QPoly lhs = bracket_eval(e3, f, var(i));
            CHECK(lhs == -deg6.weight * (f * p.y(var(i))));
            // consequence: {f, x_i} lies in the principal ideal (f)
            auto q = divide_exact(lhs, f);
            REQUIRE(q.has_value());
            CHECK(*q * f == lhs);
        }
    }
}

TEST_CASE("family one-forms produce Poisson unimodular brackets") {
    for (std::uint64_t seed : {1ull, 4ull, 8ull}) {
        for (FamilyId id : all_families()) {
            auto inst = instance(id, sample_params(id, seed));
            REQUIRE(oneform_validate(inst.oneform).pass());
            QuadBracket b = bracket_from_oneform(inst.oneform);
            CHECK(is_poisson(b));
            CHECK(is_unimodular(b));
        }
    }
}

TEST_CASE("oneform_from_bracket rejects a non-unimodular input") {
    QuadBracket b;
    b.set(0, 1, qmono(0, 0));  // defect_1 = 2 x_0
    CHECK_THROWS_AS(oneform_from_bracket(b), std::domain_error);
}
