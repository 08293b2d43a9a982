#include "planecolor/geometry.hpp"

namespace planecolor {

namespace {

FieldElement root_of(const TowerPtr& tower, long n) {
    auto r = sqrt_in_field(tower->constant(n));
    if (!r) throw TowerError("tower has no square root of " + std::to_string(n));
    return *r;
}

Rational sq(const Integer& z) { return Rational(z * z); }

}  // namespace

Point make_point(const TowerPtr& tower, std::string_view x, std::string_view y) {
    return {tower->parse(x), tower->parse(y)};
}

std::string LatticeCoord::to_string() const {
    return "[" + a.get_str() + "," + b.get_str() + "," + c.get_str() + "," + d.get_str() + "]";
}

Point lattice_to_point(const LatticeCoord& v, const TowerPtr& tower) {
    const FieldElement s3 = root_of(tower, 3);
    const FieldElement s11 = root_of(tower, 11);
    const Rational twelfth(1, 12);
    FieldElement x = s3 * Rational(v.a) + s11 * Rational(v.b);
    FieldElement y = tower->constant(Rational(v.c)) + s3 * s11 * Rational(v.d);
    return {x * twelfth, y * twelfth};
}

FieldElement dist2(const Point& p, const Point& q) {
    FieldElement dx = p.x - q.x;
    FieldElement dy = p.y - q.y;
    return dx * dx + dy * dy;
}

Qrt33 lattice_dist2(const LatticeCoord& u, const LatticeCoord& v) {
    const Integer da = u.a - v.a, db = u.b - v.b, dc = u.c - v.c, dd = u.d - v.d;
    Rational p = (3 * sq(da) + 11 * sq(db) + sq(dc) + 33 * sq(dd)) / 144;
    Rational q = Rational(2 * da * db + 2 * dc * dd) / 144;
    p.canonicalize();
    q.canonicalize();
    return {p, q};
}

FieldElement to_field(const Qrt33& value, const TowerPtr& tower) {
    FieldElement out = tower->constant(value.p);
    if (sgn(value.q) != 0) out += root_of(tower, 33) * value.q;
    return out;
}

Point rotate_about(const Point& pivot, const FieldElement& cos, const FieldElement& sin, const Point& p) {
    if (cos * cos + sin * sin != cos.tower()->one()) throw NotARotation();
    FieldElement dx = p.x - pivot.x;
    FieldElement dy = p.y - pivot.y;
    return {pivot.x + cos * dx - sin * dy, pivot.y + sin * dx + cos * dy};
}

FieldElement spindle_cos(const FieldElement& r2, const FieldElement& bridge2) {
    if (sign(r2) <= 0) throw ZeroRadius();
    if (sign(r2 * Rational(4) - bridge2) < 0) throw ChordTooLong();
    return r2.tower()->one() - bridge2 / (r2 * Rational(2));
}

}  // namespace planecolor
