#pragma once

// {1,d}-graphs: exact point sets whose edges are every pair at distance 1 or
// d. Edges are always derived from the coordinates, never read from input.

#include "planecolor/geometry.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace planecolor {

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DuplicatePoint : public GraphError {
public:
    DuplicatePoint(std::size_t i, std::size_t j)
        : GraphError("vertices " + std::to_string(i) + " and " + std::to_string(j) + " coincide"), first(i), second(j) {}
    std::size_t first, second;
};

class DNotGreaterThanOne : public GraphError {
public:
    DNotGreaterThanOne() : GraphError("second forbidden distance must exceed 1") {}
};

class UnknownId : public GraphError {
public:
    explicit UnknownId(const std::string& id) : GraphError("unknown catalog id '" + id + "'") {}
};

/// Vertex pair with first < second.
using Edge = std::pair<std::size_t, std::size_t>;

struct TwoDistGraph {
    FieldElement d2;
    std::vector<Point> points;
    std::vector<Edge> unit_edges;  // sorted
    std::vector<Edge> d_edges;     // sorted
    /// Lattice coordinates when the graph was built from [a,b,c,d] vertices.
    std::vector<LatticeCoord> lattice;
    /// Display names; defaults to "1".."n".
    std::vector<std::string> labels;

    std::size_t size() const { return points.size(); }
    const TowerPtr& tower() const { return d2.tower(); }
    std::size_t edge_count() const { return unit_edges.size() + d_edges.size(); }
    std::vector<Edge> edges() const;
    bool adjacent(std::size_t u, std::size_t v) const;
    /// Index of the vertex labelled `label`, if any.
    std::optional<std::size_t> find_label(std::string_view label) const;
};

/// Classifies every pair exactly. Requires d2 > 1 and at least one point.
TwoDistGraph build(std::vector<Point> points, const FieldElement& d2);

/// Same graph from lattice coordinates, classifying pairs with the integer
/// squared-distance formula. The tower must contain sqrt3 and sqrt11.
TwoDistGraph build_lattice(std::vector<LatticeCoord> coords, const FieldElement& d2);

/// Subgraph induced by `keep` (in that order).
TwoDistGraph induced(const TwoDistGraph& g, const std::vector<std::size_t>& keep);

nlohmann::json to_json(const TwoDistGraph& g);
/// Throws ParseError on malformed documents, TowerError on bad towers and
/// the build errors on bad geometry.
TwoDistGraph from_json(const nlohmann::json& doc);

std::string to_dot(const TwoDistGraph& g, const std::string& name = "G");

}  // namespace planecolor
