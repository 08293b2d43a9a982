#pragma once

// The spindle construction (rotate a graph about one vertex of a forced
// monochromatic pair until the other vertex's image sits at a forbidden
// distance) and gadget substitution along the edges of a base point set.

#include "planecolor/graphs.hpp"

namespace planecolor {

class BridgeNotForbidden : public GraphError {
public:
    BridgeNotForbidden() : GraphError("bridge length must be 1 or d") {}
};

class AnchorDistanceMismatch : public GraphError {
public:
    AnchorDistanceMismatch() : GraphError("gadget anchors are not at the carrier distance") {}
};

struct SpindleResult {
    TwoDistGraph graph;
    std::size_t pivot;
    Edge bridged;  // (moved, image of moved)
    FieldElement cos;
    FieldElement sin;
    /// Index in `graph` of the rotated image of each vertex of the seed.
    std::vector<std::size_t> image;
};

/// Rotates g counterclockwise about `pivot` so that `moved` travels a chord of
/// squared length bridge2 (1 or g.d2), and returns the union of g and its
/// image. If the rotation's sine is not in g's tower, the tower is extended
/// by one generator. Coincident vertices are merged.
SpindleResult spindle(const TwoDistGraph& g, std::size_t pivot, std::size_t moved, const FieldElement& bridge2);

struct Gadget {
    TwoDistGraph graph;
    std::size_t anchor_a;
    std::size_t anchor_b;
};

/// For every pair {P, Q} (P < Q) of base points at squared distance
/// carrier_len2, adds the gadget's non-anchor vertices under the
/// orientation-preserving motion taking A to P and B to Q (or the mirrored
/// motion when `mirrored`). Base points are multiplied by `scale` first.
/// Coincident vertices are merged; edges are rebuilt with the gadget's d2.
TwoDistGraph compose_by_edge_substitution(const TwoDistGraph& base, const FieldElement& scale,
                                          const FieldElement& carrier_len2, const Gadget& gadget,
                                          bool mirrored = false);

/// Vertices placed by compose_by_edge_substitution before merging:
/// base size plus one gadget block (minus anchors) per carrier pair.
std::size_t composition_placements(const TwoDistGraph& base, const FieldElement& scale,
                                   const FieldElement& carrier_len2, const Gadget& gadget);

/// Pairs of `points` at squared distance len2.
std::vector<Edge> pairs_at(const std::vector<Point>& points, const FieldElement& len2);

}  // namespace planecolor
