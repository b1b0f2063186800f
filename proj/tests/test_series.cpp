#include <doctest.h>

#include <random>

#include "isoflow/ratfun.hpp"
#include "isoflow/series.hpp"

using namespace isoflow;

namespace {

std::mt19937 rng(98321);

Rat rand_rat() {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
    return Rat(num(rng), den(rng));
}

SeriesQ rand_series(int order, int val = 0, bool unit_lead = false) {
    std::vector<Rat> c;
    for (int i = val; i < order; ++i) c.push_back(rand_rat());
    if (!c.empty() && unit_lead) c[0] = 1;
    if (!c.empty() && c[0] == 0) c[0] = 1;
    return SeriesQ(val, std::move(c), order);
}

SeriesQ geometric(int order) {  // sum z^n
    std::vector<Rat> c(static_cast<size_t>(order), Rat(1));
    return SeriesQ(0, std::move(c), order);
}

}  // namespace

TEST_CASE("series arithmetic basics") {
    SeriesQ g = geometric(12);
    SeriesQ one_minus_z(0, {Rat(1), Rat(-1)}, 12);
    SeriesQ prod = one_minus_z * g;
    CHECK(prod.at(0) == 1);
    for (int k = 1; k < prod.order(); ++k) CHECK(prod.at(k) == 0);

    SeriesQ f(1, {Rat(1), Rat(2, 5)}, 3);  // z + 2/5 z^2
    SeriesQ d = f.derivative();
    CHECK(d.at(0) == 1);
    CHECK(d.at(1) == Rat(4, 5));
    CHECK(d.order() == 2);
    CHECK(f.integral().at(2) == Rat(1, 2));
}

TEST_CASE("laurent support") {
    SeriesQ zinv(-1, {Rat(1)}, 5);
    SeriesQ z = SeriesQ::x(5);
    SeriesQ p = zinv * z;
    CHECK(p.at(0) == 1);
    CHECK(p.valuation() == 0);
    CHECK_THROWS_AS(zinv.integral(), NonIntegrableTerm);
    // (c/z + ...) derivative
    CHECK(zinv.derivative().at(-2) == -1);
}

TEST_CASE("series division tracks attainable order") {
    SeriesQ num = rand_series(10, 1);
    SeriesQ den = rand_series(8, 1);
    SeriesQ q = num / den;
    CHECK(q.valuation() >= 0);
    CHECK(q.order() == 7);  // min(10-1, 8+1-2)
    SeriesQ back = q * den;
    CHECK(SeriesQ::agree(back, num, q.order() + den.valuation()));
}

TEST_CASE("composition: geometric in z^2 and identity") {
    SeriesQ g = geometric(10);
    SeriesQ z2 = SeriesQ(2, {Rat(1)}, 10);
    SeriesQ comp = g.compose(z2);
    for (int k = 0; k < comp.order(); ++k)
        CHECK(comp.at(k) == ((k % 2 == 0) ? Rat(1) : Rat(0)));
    SeriesQ f = rand_series(9, 0);
    CHECK(SeriesQ::agree(f.compose(SeriesQ::x(9)), f));
    CHECK_THROWS_AS(g.compose(SeriesQ::one(5)), InnerConstantTerm);
}

TEST_CASE("iterate composition matches printed second iterate") {
    // series(R_-4) o series(R_-4) = series of 16z(1-z)^2/(1+z)^4 to order 12
    RatFunQ r1 = rfq({0, -4}, {1, -2, 1});
    RatFunQ r2 = rfq({0, 16, -32, 16}, {1, 4, 6, 4, 1});
    SeriesQ s1 = r1.series(13);
    SeriesQ got = s1.compose(s1);
    CHECK(SeriesQ::agree(got, r2.series(13), 12));
}

TEST_CASE("reversion") {
    // reverse(z/(1-z)) = z/(1+z)
    RatFunQ f = rfq({0, 1}, {1, -1});
    SeriesQ s = f.series(10);
    SeriesQ r = s.reverse();
    CHECK(SeriesQ::agree(r, rfq({0, 1}, {1, 1}).series(10), 9));
    // reverse o reverse = id on random invertible series
    for (int it = 0; it < 8; ++it) {
        SeriesQ g = rand_series(9, 1);
        CHECK(SeriesQ::agree(g.reverse().reverse(), g, 8));
    }
    CHECK_THROWS_AS(SeriesQ::one(5).reverse(), NotReversible);
}

TEST_CASE("compose associativity on random triples") {
    for (int it = 0; it < 6; ++it) {
        SeriesQ a = rand_series(8, 0), b = rand_series(8, 1), c = rand_series(8, 1);
        SeriesQ lhs = a.compose(b).compose(c);
        SeriesQ rhs = a.compose(b.compose(c));
        CHECK(SeriesQ::agree(lhs, rhs, std::min(lhs.order(), rhs.order())));
    }
}

TEST_CASE("fractional powers") {
    // (1-z)^{1/2} = 1 - z/2 - z^2/8 - z^3/16 ...
    SeriesQ f(0, {Rat(1), Rat(-1)}, 10);
    SeriesQ h = f.pow_frac(Rat(1, 2));
    CHECK(h.at(0) == 1);
    CHECK(h.at(1) == Rat(-1, 2));
    CHECK(h.at(2) == Rat(-1, 8));
    CHECK(h.at(3) == Rat(-1, 16));
    CHECK(SeriesQ::agree(h * h, f, 10));
    CHECK(SeriesQ::agree(f.pow_frac(Rat(0)), SeriesQ::one(10)));
    CHECK_THROWS_AS(SeriesQ(0, {Rat(2)}, 5).pow_frac(Rat(1, 2)), NonUnitConstantTerm);

    // multiplicativity on random unit series
    for (int it = 0; it < 6; ++it) {
        SeriesQ u = rand_series(8, 0, true);
        Rat a(1, 3), b(1, 4);
        SeriesQ lhs = u.pow_frac(a) * u.pow_frac(b);
        SeriesQ rhs = u.pow_frac(a + b);
        CHECK(SeriesQ::agree(lhs, rhs, 8));
        SeriesQ sq = u.pow_frac(Rat(1, 2));
        CHECK(SeriesQ::agree(sq * sq, u, 8));
    }
}

TEST_CASE("ratfun series expansions") {
    CHECK(SeriesQ::agree(rfq({1}, {1, -1}).series(8), geometric(8)));
    SeriesQ zi = rfq({1}, {0, 1}).series(6);
    CHECK(zi.valuation() == -1);
    CHECK(zi.at(-1) == 1);
    for (int k = 0; k < 6; ++k) CHECK(zi.at(k) == 0);
}
