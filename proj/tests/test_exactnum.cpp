#include <doctest.h>

#include <random>

#include "isoflow/multipoly.hpp"
#include "isoflow/rational.hpp"
#include "isoflow/unipoly.hpp"

using namespace isoflow;

namespace {

std::mt19937 rng(214001);

Rat rand_rat() {
    std::uniform_int_distribution<long> num(-30, 30), den(1, 12);
    return Rat(num(rng), den(rng));
}

GaussRat rand_gauss() { return GaussRat(rand_rat(), rand_rat()); }

UniPolyQ rand_poly(int maxdeg) {
    std::uniform_int_distribution<int> d(0, maxdeg);
    int deg = d(rng);
    std::vector<Rat> c;
    for (int i = 0; i <= deg; ++i) c.push_back(rand_rat());
    return UniPolyQ(std::move(c));
}

}  // namespace

TEST_CASE("rational canonical form") {
    Rat a(6, 4);
    CHECK(numerator(a) == 3);
    CHECK(denominator(a) == 2);
    Rat b = rat(-6, -4);
    CHECK(b == a);
    Rat c(0, 7);
    CHECK(numerator(c) == 0);
    CHECK(denominator(c) == 1);
    CHECK(rat_to_string(Rat(-5, 10)) == "-1/2");
    CHECK(rat_from_string("22/7") == Rat(22, 7));
    CHECK(rat_from_string("-3") == Rat(-3));
}

TEST_CASE("field axioms on random rationals and gaussian rationals") {
    for (int it = 0; it < 50; ++it) {
        Rat a = rand_rat(), b = rand_rat(), c = rand_rat();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (a != 0) CHECK(a * (Rat(1) / a) == 1);

        GaussRat x = rand_gauss(), y = rand_gauss(), z = rand_gauss();
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        if (!x.is_zero()) CHECK(x * (GaussRat(1) / x) == GaussRat(1));
        CHECK((x * y).conj() == x.conj() * y.conj());
    }
    GaussRat i = GaussRat::i();
    CHECK(i * i == GaussRat(-1));
}

TEST_CASE("poly_gcd basics") {
    UniPolyQ z2m1{-1, 0, 1};       // z^2 - 1
    UniPolyQ zm1{-1, 1};           // z - 1
    CHECK(poly_gcd(z2m1, zm1) == zm1);

    // a(z) = z^3 (1-z)^2 and its derivative share z^2 (z-1)
    UniPolyQ a{0, 0, 0, 1, -2, 1};
    UniPolyQ expect{0, 0, -1, 1};  // z^2(z-1) = z^3 - z^2
    CHECK(poly_gcd(a, a.derivative()) == expect);

    // gcd(p, 0) = monic p
    UniPolyQ p{2, 4};
    CHECK(poly_gcd(p, UniPolyQ()) == p.monic());
    CHECK(poly_gcd(UniPolyQ(), UniPolyQ()).is_zero());
}

TEST_CASE("poly_gcd multiplicativity and modular/euclid agreement") {
    for (int it = 0; it < 25; ++it) {
        UniPolyQ p = rand_poly(5), q = rand_poly(5), r = rand_poly(4);
        if (p.is_zero() || q.is_zero() || r.is_zero()) continue;
        UniPolyQ lhs = poly_gcd(p * r, q * r);
        UniPolyQ rhs = r.monic() * poly_gcd(p, q);
        CHECK(lhs == rhs.monic());
        CHECK(poly_gcd(p, q) == poly_gcd_euclid(p, q));
    }
}

TEST_CASE("unipoly division and composition") {
    UniPolyQ a{-1, 0, 0, 1};  // z^3 - 1
    UniPolyQ b{-1, 1};
    CHECK(a / b == UniPolyQ{1, 1, 1});
    CHECK_THROWS_AS(UniPolyQ({1, 1}) / UniPolyQ({0, 1}), NotDivisible);
    UniPolyQ c{1, 2};  // 1 + 2z
    CHECK(c.compose(UniPolyQ{0, 0, 3}) == UniPolyQ{1, 0, 6});
    CHECK(c.compose_scaled(UniPolyQ{0, 1}, UniPolyQ{1, 1}) == UniPolyQ{1, 3});  // (1+2z/(1+z))(1+z)
}

TEST_CASE("bipoly exact division") {
    using MP = MultiPolyQ;
    MP x = MP::var(0), y = MP::var(1);
    MP f = x * x - y * y;
    MP g = x - y;
    auto q = f.divide_exact(g);
    REQUIRE(q.has_value());
    CHECK(*q == x + y);
    CHECK_FALSE((x * x + y * y).divide_exact(x - y).has_value());

    // random products divide exactly
    for (int it = 0; it < 20; ++it) {
        MP a, b;
        std::uniform_int_distribution<int> e(0, 3);
        for (int t = 0; t < 4; ++t) {
            a.add_term(Monomial{{e(rng), e(rng), 0}}, rand_rat());
            b.add_term(Monomial{{e(rng), e(rng), 0}}, rand_rat());
        }
        if (a.is_zero() || b.is_zero()) continue;
        auto qq = (a * b).divide_exact(b);
        REQUIRE(qq.has_value());
        CHECK(*qq == a);
    }
}

TEST_CASE("atkin-lehner cross-polynomial divisibility (bipoly)") {
    // zp*(z+256)^3 - z^2*(zp+16)^3 divisible by z*zp - 4096,
    // cofactor equals z^2 - z*zp^2 - 48 z zp - 4096 zp
    using MP = MultiPolyQ;
    MP z = MP::var(0), zp = MP::var(1), one = MP::constant(Rat(1));
    MP lhs = zp * (z + one.scaled(Rat(256))).pow(3) - z * z * (zp + one.scaled(Rat(16))).pow(3);
    MP al = z * zp - one.scaled(Rat(4096));
    auto q = lhs.divide_exact(al);
    REQUIRE(q.has_value());
    MP cof = z * z - z * zp * zp - (z * zp).scaled(Rat(48)) - zp.scaled(Rat(4096));
    CHECK(*q == cof);
}
