#include <doctest.h>

#include "planecolor/exactnum.hpp"

#include <random>

using namespace planecolor;

namespace {

TowerPtr tower_of(std::vector<Tower::GeneratorDef> defs) { return Tower::build(defs); }

// Integer square-root oracle: floor(sqrt(n) * 10^digits) / 10^digits and the next step up.
RationalInterval decimal_sqrt_oracle(long n, int digits) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    Integer root = isqrt_floor(Integer(n) * scale * scale);
    Rational lo(root, scale), hi(root + 1, scale);
    lo.canonicalize();
    hi.canonicalize();
    return {lo, hi};
}

FieldElement random_element(const TowerPtr& tower, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5), keep(0, 2);
    std::vector<Rational> c(tower->dimension());
    for (auto& x : c) {
        if (keep(rng) == 0) continue;
        x = Rational(num(rng), den(rng));
        x.canonicalize();
    }
    return FieldElement(tower, c);
}

}  // namespace

TEST_CASE("generator squares reduce to the lower field") {
    auto t = Tower::standard();
    auto s2 = t->parse("s2");
    CHECK(s2 * s2 == t->constant(2));
    auto q3 = t->parse("q3");
    CHECK(q3 * q3 * q3 * q3 == t->constant(3));
    CHECK(q3 * q3 == t->parse("s3"));
    auto x = t->parse("(s2*s3 + s2)/2");
    CHECK(x * x == t->parse("2 + s3"));
}

TEST_CASE("division, inverse and errors") {
    auto t = tower_of({{"s3", "3"}, {"q3", "s3"}, {"s2", "2"}});
    auto x = t->parse("1 + q3 - 2*s2*q3 + s3/7");
    auto y = x.inverse();
    CHECK(x * y == t->one());
    CHECK((x / x) == t->one());
    CHECK_THROWS_AS(x / t->zero(), DivisionByZero);
    auto other = tower_of({{"s5", "5"}});
    CHECK_THROWS_AS(x + other->one(), TowerMismatch);
}

TEST_CASE("sqrt_in_field") {
    auto t35 = tower_of({{"s3", "3"}, {"s5", "5"}});
    auto r = sqrt_in_field(t35->parse("15/64"));
    REQUIRE(r);
    CHECK(*r * *r == t35->parse("15/64"));
    CHECK(*r == t35->parse("s3*s5/8"));

    auto four = sqrt_in_field(t35->constant(4));
    REQUIRE(four);
    CHECK(*four == t35->constant(2));

    auto t3 = tower_of({{"s3", "3"}});
    CHECK_FALSE(sqrt_in_field(t3->constant(2)));
    CHECK_THROWS_AS(sqrt_in_field(t3->constant(-1)), NegativeInput);

    // sqrt(2 + s3) = (s6 + s2)/2 requires s2; in Q(s3) it is absent.
    CHECK_FALSE(sqrt_in_field(t3->parse("2 + s3")));
    auto t23 = tower_of({{"s2", "2"}, {"s3", "3"}});
    auto root = sqrt_in_field(t23->parse("2 + s3"));
    REQUIRE(root);
    CHECK(*root == t23->parse("(s2*s3 + s2)/2"));
    CHECK(sign(*root) > 0);
}

TEST_CASE("sign") {
    auto t = Tower::standard();
    CHECK(sign(t->parse("(q3*s2 - s3 + 1)/2 - 1/2")) == 1);
    CHECK(sign(t->zero()) == 0);
    CHECK(sign(t->parse("2 + s3 - ((s2*s3 + s2)/2)^2")) == 0);
    CHECK(sign(t->parse("s2 - 7/5")) == 1);
    CHECK(sign(t->parse("s2 - 1414214/1000000")) == -1);
    // 3^{1/4} sqrt(2) - sqrt(3) + 1 = 1.1283...: close cancellation at low precision is fine.
    CHECK(sign(t->parse("q3*s2 - s3 + 1 - 11283/10000")) == 1);
}

TEST_CASE("to_interval against an integer square-root oracle") {
    auto t = Tower::standard();
    Rational w(1, 1000000);
    auto iv = to_interval(t->parse("s3"), w);
    auto oracle = decimal_sqrt_oracle(3, 12);
    CHECK(iv.width() <= w);
    CHECK(iv.lo <= oracle.hi);
    CHECK(iv.hi >= oracle.lo);
    CHECK(iv.lo > Rational(1732050, 1000000));

    auto third = to_interval(t->parse("1/3"), Rational(1, 10));
    CHECK(third.lo == Rational(1, 3));
    CHECK(third.hi == Rational(1, 3));

    Rational w9(1, 1000000000);
    auto phi = to_interval(t->parse("(s5 + 1)/2"), w9);
    auto s5 = decimal_sqrt_oracle(5, 15);
    Rational phi_lo = (s5.lo + 1) / 2, phi_hi = (s5.hi + 1) / 2;
    CHECK(phi.width() <= w9);
    CHECK(phi.lo <= phi_hi);
    CHECK(phi.hi >= phi_lo);
    CHECK(std::abs(to_double(t->parse("(s5 + 1)/2")) - 1.6180339887498949) < 1e-15);
}

TEST_CASE("tower construction rejects dependent generators") {
    CHECK_THROWS_AS(tower_of({{"s2", "2"}, {"r", "2"}}), TowerError);
    CHECK_THROWS_AS(tower_of({{"s2", "2"}, {"r", "8"}}), TowerError);
    CHECK_THROWS_AS(tower_of({{"s2", "2"}, {"s3", "3"}, {"s6", "6"}}), TowerError);
    CHECK_THROWS_AS(tower_of({{"s2", "2"}, {"s2", "3"}}), TowerError);
    CHECK_THROWS_AS(tower_of({{"n", "-2"}}), TowerError);
    CHECK_THROWS_AS(tower_of({{"s4", "4"}}), TowerError);
    // sqrt(10 + 2 sqrt 5) is not in Q(sqrt 5).
    auto t = tower_of({{"s5", "5"}, {"t5", "10 + 2*s5"}});
    CHECK(t->dimension() == 4);
    // ...but sqrt(10 - 2 sqrt 5) is, since the product of the two roots is 4 sqrt 5.
    auto r = sqrt_in_field(t->parse("10 - 2*s5"));
    REQUIRE(r);
    CHECK(*r * t->parse("t5") == t->parse("4*s5"));
}

TEST_CASE("field axioms on random elements") {
    std::mt19937 rng(12345);
    auto t = tower_of({{"s3", "3"}, {"q3", "s3"}, {"s2", "2"}, {"s7", "7"}});
    for (int trial = 0; trial < 40; ++trial) {
        auto a = random_element(t, rng), b = random_element(t, rng), c = random_element(t, rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == t->zero());
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("sqrt and sign properties on random elements") {
    std::mt19937 rng(777);
    auto t = tower_of({{"s2", "2"}, {"s3", "3"}, {"s5", "5"}});
    for (int trial = 0; trial < 30; ++trial) {
        auto a = random_element(t, rng);
        auto sq = a * a;
        auto r = sqrt_in_field(sq);
        REQUIRE(r);
        CHECK(*r * *r == sq);
        CHECK(sign(*r) >= 0);
        CHECK((*r == a || *r == -a));

        auto iv = to_interval(a, Rational(1, 1000));
        if (iv.excludes_zero()) CHECK(sign(a) == (sgn(iv.lo) > 0 ? 1 : -1));
        CHECK(iv.width() <= Rational(1, 1000));
    }
}

TEST_CASE("canonical string round trip") {
    std::mt19937 rng(99);
    auto t = Tower::standard();
    CHECK(t->zero().to_string() == "(0)*1");
    CHECK(t->parse("(1/2)*s3 + 1").to_string() == "(1)*1 + (1/2)*s3");
    CHECK(t->parse("q3*s3*s2").to_string() == "(1)*s3*q3*s2");
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_element(t, rng);
        auto text = a.to_string();
        auto back = t->parse(text);
        CHECK(back == a);
        CHECK(back.to_string() == text);
    }
}

TEST_CASE("parser") {
    auto t = Tower::standard();
    CHECK(t->parse("(1/4)*(q3*2*s2 + 2*s3 + 2)") == t->parse("q3*s2/2 + s3/2 + 1/2"));
    CHECK(t->parse("s2^-2") == t->parse("1/2"));
    CHECK(t->parse("sqrt(15/64)") == t->parse("s3*s5/8"));
    CHECK(t->parse("-(-s7)") == t->parse("s7"));
    CHECK_THROWS_AS(t->parse("s13"), ParseError);
    CHECK_THROWS_AS(t->parse("1 +"), ParseError);
    CHECK_THROWS_AS(t->parse("sqrt(13)"), ParseError);
    CHECK_THROWS_AS(t->parse("(1"), ParseError);
    CHECK_THROWS_AS(t->parse(""), ParseError);
}

TEST_CASE("lift into an extension tower") {
    auto base = tower_of({{"s3", "3"}});
    auto ext = base->extend("s5", base->constant(5));
    auto x = base->parse("1 + s3");
    auto y = x.lift(ext);
    CHECK(y == ext->parse("1 + s3"));
    CHECK_THROWS_AS(ext->parse("s5").lift(base), TowerMismatch);
    auto defs = ext->definitions();
    REQUIRE(defs.size() == 2);
    CHECK(defs[1].name == "s5");
    CHECK(Tower::build(defs)->same_as(*ext));
}
