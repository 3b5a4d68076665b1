#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "darboux/poly.hpp"
#include "support/testutil.hpp"

using namespace darboux;
using testutil::Rng;

namespace {

TowerPtr q() { return FieldTower::rationals(); }

TowerPtr q_s7() { return extend_with(q(), "s7", Poly::from_rationals(q(), {-7, 0, 1})); }

TowerPtr q_s3_s7() {
    TowerPtr t = extend_with(q(), "s3", Poly::from_rationals(q(), {-3, 0, 1}));
    return extend_with(t, "s7", Poly::from_rationals(t, {Rational(-7), Rational(0), Rational(1)}));
}

TowerPtr q_xi() { return extend_with(q(), "xi", Poly::from_rationals(q(), {-1, -2, 1, 1})); }

Poly p3(const TowerPtr& f) { return Poly::from_rationals(f, {1, -1, 0, Rational(1, 7)}); }

}  // namespace

TEST_CASE("rational invariants") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(-1, 2).den() == 2);
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational(49, 27).str() == "49/27");
    CHECK(Rational(5, 8).num() == 5);
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), DivisionByZero);
    CHECK(Rational(-2, 3).pow_int(-2) == Rational(9, 4));
    CHECK(Rational::parse("-5/8") == Rational(-5, 8));

    Rng rng(101);
    for (int i = 0; i < 200; ++i) {
        Rational a = rng.rational(), b = rng.rational(), c = rng.rational();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        Rational s = a + b;
        CHECK(gcd(mpz_class(s.num()), mpz_class(s.den())) == 1);
        CHECK(s.den() > 0);
        if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
    }
}

TEST_CASE("tower construction and basic arithmetic") {
    TowerPtr k = q_s7();
    CHECK(k->degree() == 2);
    CHECK(k->describe() == "Q(s7)");
    FieldElement s7 = k->generator("s7");

    // (3+s7)(3-s7) = 2
    FieldElement a = k->from_rational(Rational(3)) + s7;
    FieldElement b = k->from_rational(Rational(3)) - s7;
    CHECK(a * b == k->from_rational(Rational(2)));

    // 1/s7 = s7/7
    CHECK(s7.inverse() == s7.scaled(Rational(1, 7)));
    CHECK(s7 * s7 == k->from_rational(Rational(7)));

    // division round-trip
    CHECK((a / b) * b == a);
    CHECK_THROWS_AS(a / k->zero(), DivisionByZero);
}

TEST_CASE("compositum Q(s3)(s7) holds sqrt(21)") {
    TowerPtr k = q_s3_s7();
    CHECK(k->degree() == 4);
    FieldElement s21 = k->generator("s3") * k->generator("s7");
    CHECK(s21 * s21 == k->from_rational(Rational(21)));
}

TEST_CASE("invalid extensions are rejected") {
    CHECK_THROWS_AS(extend_with(q(), "t", Poly::from_rationals(q(), {-7, 1})), InvalidExtension);
    CHECK_THROWS_AS(extend_with(q(), "t", Poly::from_rationals(q(), {-7, 0, 2})), InvalidExtension);
}

TEST_CASE("reducible modulus is trapped on inversion") {
    // t^2 - 4 = (t-2)(t+2); inverting g - 2 must surface a factor.
    TowerPtr k = extend_with(q(), "g", Poly::from_rationals(q(), {-4, 0, 1}));
    FieldElement bad = k->generator("g") - k->from_rational(Rational(2));
    CHECK_THROWS_AS(bad.inverse(), ReducibleModulus);
    try {
        (void)bad.inverse();
    } catch (const ReducibleModulus& e) {
        CHECK(!e.factor.empty());
    }
}

TEST_CASE("cubic field of 2cos(2pi/7): P3 vanishes at -xi^2-2xi+1") {
    TowerPtr k = q_xi();
    CHECK(k->degree() == 3);
    FieldElement xi = k->generator("xi");
    FieldElement x0 = -(xi * xi) - xi.scaled(Rational(2)) + k->one();
    CHECK(p3(k).eval(x0).is_zero());
    // x0 is a genuine root of a degree-3 irreducible factor: nonzero itself.
    CHECK(!x0.is_zero());
    CHECK((x0.inverse() * x0) == k->one());
}

TEST_CASE("generator minimal polynomials vanish on their generators") {
    TowerPtr k = q_s3_s7();
    CHECK(Poly::from_rationals(q(), {-3, 0, 1}).eval(k->generator("s3")).is_zero());
    CHECK(Poly::from_rationals(q(), {-7, 0, 1}).eval(k->generator("s7")).is_zero());
    TowerPtr kx = q_xi();
    CHECK(Poly::from_rationals(q(), {-1, -2, 1, 1}).eval(kx->generator("xi")).is_zero());
}

TEST_CASE("conjugation is a field automorphism") {
    TowerPtr k = q_s3_s7();
    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        FieldElement a = rng.element(k), b = rng.element(k);
        for (int lvl = 1; lvl <= 2; ++lvl) {
            CHECK((a + b).conjugated(lvl) == a.conjugated(lvl) + b.conjugated(lvl));
            CHECK((a * b).conjugated(lvl) == a.conjugated(lvl) * b.conjugated(lvl));
            CHECK(a.conjugated(lvl).conjugated(lvl) == a);
        }
    }
    CHECK(k->generator("s7").conjugated(2) == -k->generator("s7"));
    CHECK(k->generator("s3").conjugated(2) == k->generator("s3"));
}

TEST_CASE("polynomial gcd basics") {
    TowerPtr f = q();
    Poly x2m1 = Poly::from_rationals(f, {-1, 0, 1});
    Poly x3m1 = Poly::from_rationals(f, {-1, 0, 0, 1});
    CHECK(poly_gcd(x2m1, x3m1) == Poly::from_rationals(f, {-1, 1}));

    Poly x3 = Poly::x(f).pow_int(3), x2 = Poly::x(f).pow_int(2);
    CHECK(poly_gcd(x3, x2) == x2);

    // P3 is squarefree.
    CHECK(poly_gcd(p3(f), p3(f).derivative()) == Poly::one(f));
    CHECK(poly_gcd(p3(f), p3(f).derivative()) == testutil::naive_gcd(p3(f), p3(f).derivative()));

    CHECK_THROWS_AS(poly_gcd(Poly::zero(f), Poly::zero(f)), Error);
}

TEST_CASE("gcd properties") {
    TowerPtr f = q_s7();
    Rng rng(23);
    for (int i = 0; i < 100; ++i) {
        Poly p = rng.nonzero_poly(f, 5, 4), r = rng.nonzero_poly(f, 3, 4);
        Poly qq = rng.nonzero_poly(f, 5, 4);
        Poly g = poly_gcd(p, qq);
        CHECK(p.divrem(g).second.is_zero());
        CHECK(qq.divrem(g).second.is_zero());
        // gcd(p*r, q*r) = r * gcd(p, q) up to a unit
        Poly lhs = poly_gcd(p * r, qq * r);
        Poly rhs = (r * g).monic();
        CHECK(lhs == rhs);
        CHECK((p * qq).degree() == p.degree() + qq.degree());
    }
}

TEST_CASE("squarefree decomposition") {
    TowerPtr f = q();
    auto dec = squarefree_decomposition(Poly::x(f).pow_int(3));
    REQUIRE(dec.parts.size() == 1);
    CHECK(dec.parts[0].factor == Poly::x(f));
    CHECK(dec.parts[0].multiplicity == 3);

    Rng rng(37);
    for (int i = 0; i < 100; ++i) {
        Poly a = rng.nonzero_poly(f, 3, 3), b = rng.nonzero_poly(f, 2, 3);
        Poly p = a * a * b;
        auto d = squarefree_decomposition(p);
        Poly rebuilt = Poly::constant(f, Rational(1)).scaled(d.lc);
        int last_mult = 0;
        for (const auto& part : d.parts) {
            CHECK(part.multiplicity > last_mult);
            last_mult = part.multiplicity;
            CHECK(poly_gcd(part.factor, part.factor.derivative()) == Poly::one(f));
            rebuilt = rebuilt * part.factor.pow_int(part.multiplicity);
        }
        for (size_t s = 0; s < d.parts.size(); ++s)
            for (size_t t = s + 1; t < d.parts.size(); ++t)
                CHECK(poly_gcd(d.parts[s].factor, d.parts[t].factor) == Poly::one(f));
        CHECK(rebuilt == p);
    }
    CHECK_THROWS_AS(squarefree_decomposition(Poly::zero(f)), Error);
}

TEST_CASE("polynomial evaluation") {
    TowerPtr f = q();
    CHECK(p3(f).eval(f->zero()) == f->one());

    // u*q(u) at u = 1/4 equals 1/256 for q = 1 - 63/4 u + 91 u^2 - 231 u^3 + 224 u^4
    Poly uq = Poly::x(f) * Poly::from_rationals(f, {1, Rational(-63, 4), 91, -231, 224});
    CHECK(uq.eval(f->from_rational(Rational(1, 4))) == f->from_rational(Rational(1, 256)));

    // evaluation at a point of an extension embeds the coefficients
    TowerPtr k = q_s7();
    FieldElement v = p3(q()).eval(k->generator("s7"));
    CHECK(v == k->one() - k->generator("s7") + k->generator("s7").pow_int(3).scaled(Rational(1, 7)));
}

TEST_CASE("element printing") {
    TowerPtr k = q_s3_s7();
    FieldElement e = k->from_rational(Rational(1, 2)) - k->generator("s7").scaled(Rational(3)) +
                     k->generator("s3") * k->generator("s7");
    CHECK(e.str() == "1/2 - 3*s7 + s3*s7");
    CHECK(k->zero().str() == "0");
}
