#include <doctest.h>

#include "planecolor/geometry.hpp"

#include <random>

using namespace planecolor;

namespace {

TowerPtr lattice_tower() {
    static const TowerPtr t = Tower::build({{"s3", "3"}, {"s11", "11"}});
    return t;
}

LatticeCoord lc(long a, long b, long c, long d) { return {Integer(a), Integer(b), Integer(c), Integer(d)}; }

}  // namespace

TEST_CASE("lattice_to_point") {
    auto t = lattice_tower();
    CHECK(lattice_to_point(lc(0, 0, 0, 0), t) == make_point(t, "0", "0"));
    CHECK(lattice_to_point(lc(4, 0, 0, 0), t) == make_point(t, "s3/3", "0"));
    CHECK(lattice_to_point(lc(0, 0, 12, 0), t) == make_point(t, "0", "1"));
    CHECK(lattice_to_point(lc(1, 2, 3, 4), t) == make_point(t, "(s3 + 2*s11)/12", "(3 + 4*s3*s11)/12"));
    CHECK_THROWS_AS(lattice_to_point(lc(1, 0, 0, 0), Tower::build({{"s3", "3"}})), TowerError);
}

TEST_CASE("dist2") {
    auto t = lattice_tower();
    CHECK(dist2(make_point(t, "0", "0"), make_point(t, "1", "0")) == t->one());
    CHECK(dist2(lattice_to_point(lc(0, 0, 0, 0), t), lattice_to_point(lc(0, 2, 10, 0), t)) == t->one());

    // exotic_13 vertices 1, 2 and 4. Vertices 1 and 2 differ only in x, by
    // (3^{1/4} sqrt2 - sqrt3 + 1)/2. Squaring by hand with a = 3^{1/4} sqrt2
    // (a^2 = 2 sqrt3): (a - sqrt3 + 1)^2 / 4 = 1 + a/2 - a sqrt3 / 2.
    auto e = Tower::build({{"s3", "3"}, {"q3", "s3"}, {"s2", "2"}});
    auto v1 = make_point(e, "(q3*s2 - s3 + 1)/4", "(q3*s3*s2 + s3 + 1)/4");
    auto v2 = make_point(e, "(-q3*s2 + s3 - 1)/4", "(q3*s3*s2 + s3 + 1)/4");
    auto v4 = make_point(e, "(-q3*s2 - s3 - 1)/4", "(q3*s3*s2 + s3 - 1)/4");
    CHECK(dist2(v1, v2) == e->parse("1 + q3*s2/2 - q3*s2*s3/2"));
    // {1,4} is a d-edge: d^2 = (3^{1/4} 2 sqrt2 + 2 sqrt3 + 2)/4.
    CHECK(dist2(v1, v4) == e->parse("(q3*2*s2 + 2*s3 + 2)/4"));
    CHECK(sign(dist2(v1, v2) - e->parse("1/4")) > 0);
}

TEST_CASE("lattice_dist2") {
    CHECK(lattice_dist2(lc(0, 0, 0, 0), lc(0, 0, 12, 0)) == Qrt33{Rational(1), Rational(0)});
    CHECK(lattice_dist2(lc(0, 0, 0, 0), lc(4, 0, 0, 0)) == Qrt33{Rational(1, 3), Rational(0)});
    CHECK(lattice_dist2(lc(3, -1, 4, 2), lc(3, -1, 4, 2)) == Qrt33{Rational(0), Rational(0)});
    CHECK(lattice_dist2(lc(0, 0, 0, 0), lc(0, 2, 10, 0)) == Qrt33{Rational(1), Rational(0)});
}

TEST_CASE("lattice_dist2 agrees with dist2 of converted points") {
    auto t = lattice_tower();
    std::mt19937 rng(4242);
    std::uniform_int_distribution<long> coord(-12, 12);
    for (int trial = 0; trial < 100; ++trial) {
        auto u = lc(coord(rng), coord(rng), coord(rng), coord(rng));
        auto v = lc(coord(rng), coord(rng), coord(rng), coord(rng));
        CHECK(to_field(lattice_dist2(u, v), t) == dist2(lattice_to_point(u, t), lattice_to_point(v, t)));
    }
}

TEST_CASE("rotate_about") {
    auto t = Tower::build({{"s3", "3"}, {"s5", "5"}});
    auto origin = make_point(t, "0", "0");
    auto p = make_point(t, "2", "0");
    CHECK(rotate_about(origin, t->one(), t->zero(), p) == p);
    CHECK(rotate_about(origin, t->parse("7/8"), t->parse("s3*s5/8"), p) == make_point(t, "7/4", "s3*s5/4"));
    CHECK_THROWS_AS(rotate_about(origin, t->parse("1/2"), t->parse("1/2"), p), NotARotation);

    auto u = Tower::build({{"s2", "2"}, {"s3", "3"}, {"s7", "7"}});
    auto q = make_point(u, "s2*s3/2", "-s2/2");
    auto image = rotate_about(make_point(u, "0", "0"), u->parse("3/4"), u->parse("s7/4"), q);
    CHECK(image == make_point(u, "(3*s2*s3 + s2*s7)/8", "(-3*s2 + s2*s3*s7)/8"));
}

TEST_CASE("rotation is an isometry") {
    auto t = Tower::build({{"s3", "3"}, {"s5", "5"}});
    auto c = t->parse("7/8"), s = t->parse("s3*s5/8");
    auto pivot = make_point(t, "1/3", "-s3");
    std::vector<Point> pts = {make_point(t, "0", "0"), make_point(t, "2", "s5"), make_point(t, "-s3*s5", "1/7"),
                              make_point(t, "s3 - 1", "s5/2")};
    for (std::size_t i = 0; i < pts.size(); ++i) {
        CHECK(dist2(pivot, rotate_about(pivot, c, s, pts[i])) == dist2(pivot, pts[i]));
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            CHECK(dist2(rotate_about(pivot, c, s, pts[i]), rotate_about(pivot, c, s, pts[j])) ==
                  dist2(pts[i], pts[j]));
    }
}

TEST_CASE("spindle_cos") {
    auto q = Tower::rationals();
    CHECK(spindle_cos(q->constant(4), q->constant(1)) == q->parse("7/8"));
    CHECK(spindle_cos(q->constant(2), q->constant(1)) == q->parse("3/4"));
    CHECK(spindle_cos(q->constant(1), q->constant(0)) == q->one());
    CHECK_THROWS_AS(spindle_cos(q->constant(0), q->constant(1)), ZeroRadius);
    CHECK_THROWS_AS(spindle_cos(q->constant(1), q->constant(5)), ChordTooLong);
    CHECK(spindle_cos(q->constant(1), q->constant(4)) == q->constant(-1));

    // The rotated point (r c, r s) lies at the requested chord from (r, 0).
    struct Case { std::vector<Tower::GeneratorDef> tower; const char* r; const char* r2; const char* bridge2; };
    for (const auto& cs : {Case{{{"s3", "3"}, {"s5", "5"}}, "2", "4", "1"},
                           Case{{{"s2", "2"}, {"s7", "7"}}, "s2", "2", "1"},
                           Case{{{"s2", "2"}, {"s3", "3"}}, "1", "1", "2 + s3"}}) {
        auto t = Tower::build(cs.tower);
        auto r = t->parse(cs.r);
        auto c = spindle_cos(t->parse(cs.r2), t->parse(cs.bridge2));
        auto s = sqrt_in_field(t->one() - c * c);
        REQUIRE(s);
        CHECK(dist2(Point{r, t->zero()}, Point{r * c, r * *s}) == t->parse(cs.bridge2));
    }
}
