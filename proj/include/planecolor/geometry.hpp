#pragma once

// Exact planar points, squared distances, the integer lattice coordinates
// [a,b,c,d] = ((a*sqrt3 + b*sqrt11)/12, (c + d*sqrt33)/12), and rotations.

#include "planecolor/exactnum.hpp"

#include <array>
#include <string>

namespace planecolor {

class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotARotation : public GeometryError {
public:
    NotARotation() : GeometryError("cos^2 + sin^2 != 1") {}
};

class ChordTooLong : public GeometryError {
public:
    ChordTooLong() : GeometryError("chord is longer than the circle's diameter") {}
};

class ZeroRadius : public GeometryError {
public:
    ZeroRadius() : GeometryError("rotation radius is zero") {}
};

struct Point {
    FieldElement x;
    FieldElement y;

    const TowerPtr& tower() const { return x.tower(); }
    Point lift(const TowerPtr& target) const { return {x.lift(target), y.lift(target)}; }
    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
};

Point make_point(const TowerPtr& tower, std::string_view x, std::string_view y);

struct LatticeCoord {
    Integer a, b, c, d;

    friend bool operator==(const LatticeCoord&, const LatticeCoord&) = default;
    std::string to_string() const;
};

/// p + q*sqrt(33).
struct Qrt33 {
    Rational p;
    Rational q;

    friend bool operator==(const Qrt33&, const Qrt33&) = default;
};

/// Requires sqrt(3) and sqrt(11) to lie in `tower`; throws TowerError otherwise.
Point lattice_to_point(const LatticeCoord& v, const TowerPtr& tower);

FieldElement dist2(const Point& p, const Point& q);

Qrt33 lattice_dist2(const LatticeCoord& u, const LatticeCoord& v);

/// Embeds p + q*sqrt(33) into a tower containing sqrt(33).
FieldElement to_field(const Qrt33& value, const TowerPtr& tower);

/// Counterclockwise rotation of p about pivot. The pair (cos, sin) must lie on
/// the unit circle exactly.
Point rotate_about(const Point& pivot, const FieldElement& cos, const FieldElement& sin, const Point& p);

/// cos of the rotation that moves a point at squared radius r2 along a chord
/// of squared length bridge2: 1 - bridge2 / (2 r2).
FieldElement spindle_cos(const FieldElement& r2, const FieldElement& bridge2);

}  // namespace planecolor
