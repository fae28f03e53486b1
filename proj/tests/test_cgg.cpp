#include <doctest.h>

#include "ncdef/cgg.hpp"
#include "ncdef/families.hpp"

#include <random>

using namespace ncdef;

namespace {

QPoly var(std::size_t i) { return QPoly::variable(4, i); }

QPoly qmono(std::size_t i, std::size_t j) {
    Exps e(4, 0);
    e[i] += 1;
    e[j] += 1;
    QPoly p(4);
    p.add(e, Rational(1));
    return p;
}

Tensor<Rational> t2(std::uint8_t i, std::uint8_t j, const Rational& c = Rational(1)) {
    Tensor<Rational> t(4, 2);
    t.add({i, j}, c);
    return t;
}

// The six printed relators of the exceptional algebra, in word form.
std::vector<Tensor<Rational>> printed_e3_relators() {
    std::vector<Tensor<Rational>> rel;
    // [x_0,x_1] = 5 x_0^2
    rel.push_back(t2(0, 1) - t2(1, 0) - t2(0, 0, Rational(5)));
    // [x_0,x_2] = -45/2 x_0^2 + 5 x_0 x_1
    rel.push_back(t2(0, 2) - t2(2, 0) + t2(0, 0, Rational(45, 2)) - t2(0, 1, Rational(5)));
    // [x_0,x_3] = 195/2 x_0^2 - 45/2 x_0 x_1 + 5 x_0 x_2
    rel.push_back(t2(0, 3) - t2(3, 0) - t2(0, 0, Rational(195, 2)) + t2(0, 1, Rational(45, 2)) -
                  t2(0, 2, Rational(5)));
    // [x_1,x_2] = -3/2 x_0 x_1 + 3 x_0 x_2 + x_1^2
    rel.push_back(t2(1, 2) - t2(2, 1) + t2(0, 1, Rational(3, 2)) - t2(0, 2, Rational(3)) -
                  t2(1, 1));
    // [x_1,x_3] = 5 x_0 x_1 - 3 x_0 x_2 + 7 x_0 x_3 - 5/2 x_1^2 + x_1 x_2
    rel.push_back(t2(1, 3) - t2(3, 1) - t2(0, 1, Rational(5)) + t2(0, 2, Rational(3)) -
                  t2(0, 3, Rational(7)) + t2(1, 1, Rational(5, 2)) - t2(1, 2));
    // [x_2,x_3] = -77/2 x_0 x_2 - 77/2 x_0 x_3 + 21/2 x_1 x_2 + 7 x_1 x_3 - 3 x_2^2
    rel.push_back(t2(2, 3) - t2(3, 2) + t2(0, 2, Rational(77, 2)) + t2(0, 3, Rational(77, 2)) -
                  t2(1, 2, Rational(21, 2)) - t2(1, 3, Rational(7)) + t2(2, 2, Rational(3)));
    return rel;
}

}  // namespace

TEST_CASE("validate_pair") {
    auto rep = validate_pair(e3_pair());
    CHECK(rep.commutation_ok);
    CHECK(rep.nilpotent);
    CHECK(rep.nilpotency_index == 4);
    CHECK(rep.locally_nilpotent_ok);
    CHECK(rep.valid());

    DerivationPair zero{LinearVectorField::zero(4), LinearVectorField::zero(4)};
    auto rep2 = validate_pair(zero);
    CHECK(rep2.valid());
    CHECK(rep2.nilpotency_index == 1);

    DerivationPair id{LinearVectorField::euler(4), LinearVectorField::euler(4)};
    CHECK_FALSE(validate_pair(id).valid());
}

TEST_CASE("star products against the printed commutators") {
    StarProduct s{e3_pair(), Rational(1)};
    CHECK(star(s, var(0), var(3)) == var(0) * var(3));

    QPoly x3x0 = var(0) * var(3) - Rational(5) * qmono(0, 2) + Rational(45, 2) * qmono(0, 1) -
                 Rational(195, 2) * qmono(0, 0);
    CHECK(star(s, var(3), var(0)) == x3x0);
    CHECK(star_commutator(s, var(0), var(3)) ==
          Rational(195, 2) * qmono(0, 0) - Rational(45, 2) * qmono(0, 1) + Rational(5) * qmono(0, 2));

    // x_2 * x_1 = x_2 x_1 - x_1^2 + 5/2 x_0 x_1 (three-term expansion)
    CHECK(star(s, var(2), var(1)) ==
          qmono(1, 2) - qmono(1, 1) + Rational(5, 2) * qmono(0, 1));

    // the other two commutators pinned verbatim
    CHECK(star_commutator(s, var(0), var(1)) == Rational(5) * qmono(0, 0));
    CHECK(star_commutator(s, var(0), var(2)) ==
          Rational(-45, 2) * qmono(0, 0) + Rational(5) * qmono(0, 1));
}

TEST_CASE("star_commutator_bracket is the printed Poisson table") {
    QuadBracket b = star_commutator_bracket(e3_pair());
    CHECK(b.at(0, 1) == Rational(5) * qmono(0, 0));
    CHECK(b.at(1, 2) == qmono(1, 1) + Rational(3) * qmono(0, 2));
    CHECK(b.at(2, 3) == Rational(7) * qmono(1, 3) - Rational(3) * qmono(2, 2));
    CHECK(is_poisson(b));
    CHECK(is_unimodular(b));

    DerivationPair noy{e3_pair().x, LinearVectorField::zero(4)};
    CHECK(star_commutator_bracket(noy).is_zero());
}

TEST_CASE("unit and degree properties of the star product") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> num(-4, 4);
    for (Rational hbar : {Rational(1), Rational(1, 3), Rational(-2)}) {
        StarProduct s{e3_pair(), hbar};
        QPoly one = QPoly::constant(4, Rational(1));
        for (int trial = 0; trial < 5; ++trial) {
            QPoly f(4);
            for (const auto& e : monomials_of_degree(4, 2)) f.add(e, Rational(num(rng)));
            CHECK(star(s, one, f) == f);
            CHECK(star(s, f, one) == f);
            QPoly g(4);
            for (const auto& e : monomials_of_degree(4, 3)) g.add(e, Rational(num(rng)));
            QPoly prod = star(s, f, g);
            CHECK(prod.is_homogeneous(5));
        }
    }
}

TEST_CASE("associativity defect vanishes") {
    StarProduct s{e3_pair(), Rational(1)};
    for (const auto& d : associativity_defect(s, 2, 7)) CHECK(d.is_zero());

    StarProduct s0{e3_pair(), Rational(0)};
    for (const auto& d : associativity_defect(s0, 2, 7)) CHECK(d.is_zero());

    StarProduct s3{e3_pair(), Rational(1, 3)};
    for (const auto& d : associativity_defect(s3, 3, 11)) CHECK(d.is_zero());
}

TEST_CASE("star_presentation kernel equals the printed relators") {
    StarProduct s{e3_pair(), Rational(1)};
    auto pres = star_presentation(s);
    CHECK_FALSE(pres.degenerate);
    CHECK(pres.algebra.relations.dim() == 6);
    TensorSubspace<Rational> printed(4, 2, printed_e3_relators());
    CHECK(pres.algebra.relations == printed);

    // every printed relator is in the kernel of the star multiplication map
    for (const auto& r : printed_e3_relators()) {
        QPoly image(4);
        for (const auto& [w, c] : r.terms())
            image += c * star(s, var(w[0]), var(w[1]));
        CHECK(image.is_zero());
    }

    // hbar = 0 gives the commutative point
    auto pres0 = star_presentation({e3_pair(), Rational(0)});
    TensorSubspace<Rational> comm(4, 2, commutative_relators(4));
    CHECK(pres0.algebra.relations == comm);

    // hbar = 2: still a 6-dimensional kernel
    auto pres2 = star_presentation({e3_pair(), Rational(2)});
    CHECK_FALSE(pres2.degenerate);
}

TEST_CASE("rescaling isomorphism check") {
    auto rep = rescaling_iso_check(e3_pair(), Rational(1), Rational(1), 2);
    CHECK(rep.supported);
    CHECK(rep.hbar_prime == Rational(1));
    CHECK(rep.full_match);

    auto rep2 = rescaling_iso_check(e3_pair(), Rational(2), Rational(1), 3);
    CHECK(rep2.supported);
    CHECK(rep2.full_match);
    CHECK(rep2.hbar_prime == Rational(1, 16));  // hbar / mu^4

    auto rep3 = rescaling_iso_check(e3_pair(), Rational(2), Rational(0), 2);
    CHECK(rep3.supported);
    CHECK(rep3.hbar_prime == Rational(0));
    CHECK(rep3.full_match);

    DerivationPair nondiag{LinearVectorField(e3_pair().y.a), e3_pair().y};
    CHECK_FALSE(rescaling_iso_check(nondiag, Rational(2), Rational(1), 2).supported);
}

TEST_CASE("curve ideals") {
    auto cubic = curve_ideal(CurveKind::TwistedCubic);
    CHECK(cubic.dim() == 3);
    // quadrics of the twisted cubic in the flow-aligned coordinates
    std::vector<QPoly> expected;
    expected.push_back(qmono(1, 1) - Rational(2) * qmono(0, 2));
    expected.push_back(qmono(1, 2) - Rational(3) * qmono(0, 3));
    expected.push_back(qmono(2, 2) - Rational(3, 2) * qmono(1, 3));
    CHECK(cubic == PolySpan(2, expected));

    auto conic = curve_ideal(CurveKind::Conic);
    CHECK(conic.dim() == 5);  // x_0 times linears, plus the plane conic
    CHECK(conic.contains(qmono(0, 0)));
    CHECK(conic.contains(qmono(0, 3)));
    CHECK(conic.contains(qmono(2, 2) - Rational(2) * qmono(1, 3)));

    auto line = curve_ideal(CurveKind::Line);
    CHECK(line.dim() == 7);  // quadrics in the ideal (x_0, x_1)
    for (std::size_t j = 0; j < 4; ++j) {
        CHECK(line.contains(qmono(0, j)));
        CHECK(line.contains(qmono(1, j)));
    }
}

TEST_CASE("equivariant ideal check") {
    StarProduct s{e3_pair(), Rational(1)};

    auto cubic = curve_ideal(CurveKind::TwistedCubic);
    auto rep = equivariant_ideal_check(s, cubic.basis(), 5);
    CHECK(rep.lie_stable);
    CHECK(rep.star_stable);
    CHECK(rep.pass());

    // x_0 spans a weight line killed by Y
    auto rep2 = equivariant_ideal_check(s, {var(0)}, 3);
    CHECK(rep2.pass());

    // (x_1) is not Lie stable: Y(x_1) = 4 x_0 is not a multiple of x_1
    auto rep3 = equivariant_ideal_check(s, {var(1)}, 3);
    CHECK_FALSE(rep3.lie_stable);
    CHECK_FALSE(rep3.pass());
}

TEST_CASE("degree-6 relative invariants interact with the star structure") {
    DerivationPair p = e3_pair();
    auto inv = relative_invariants(p.x, p.y, 6);
    REQUIRE(inv.basis.size() == 2);
    // each pencil member generates a Lie-stable line
    for (const auto& f : inv.basis) {
        CHECK(p.y(f).is_zero());
        CHECK(p.x(f) == inv.weight * f);
    }
}
