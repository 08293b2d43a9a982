#pragma once

// Two-distance realizations of small templates: the K4 spectrum, embeddings
// of the wheel W6 (hub plus 5-cycle), and the uniqueness of W6 among
// 6-vertex K4-free 4-chromatic graphs.

#include "planecolor/coloring.hpp"
#include "planecolor/polynomial.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace planecolor {

class UncertifiedAtTolerance : public ExactError {
public:
    UncertifiedAtTolerance() : ExactError("closure interval straddles zero at the requested tolerance") {}
};

class ResolutionTooCoarse : public ExactError {
public:
    ResolutionTooCoarse() : ExactError("resolution must be positive and smaller than the search interval") {}
};

using XY = std::pair<double, double>;

/// Edge labels as a string over {'1', 'd'}.
using LengthAssignment = std::string;

// ---- K4 ----

/// K4 edge order used by assignments: 01 02 03 12 13 23.
inline constexpr std::array<std::pair<int, int>, 6> kK4Edges{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

struct K4Solution {
    LengthAssignment assignment;
    /// Planar Cayley-Menger determinant as a polynomial in t = d^2.
    Polynomial cayley_menger;
    IsolatedRoot d2;
    std::vector<XY> placement;
};

struct K4Spectrum {
    std::vector<K4Solution> solutions;  // one per (assignment, root)
    std::vector<IsolatedRoot> values;   // distinct d^2 values, increasing
};

/// Cayley-Menger determinant of four points with the given squared distances.
Polynomial cayley_menger4(const std::array<Polynomial, 6>& sq);
/// 16 * area^2 of a triangle from its squared side lengths.
Polynomial heron16(const Polynomial& a, const Polynomial& b, const Polynomial& c);

/// All d > 1 for which some labeling of K4's edges by {1, d} lies in the plane.
K4Spectrum k4_spectrum();

// ---- W6 ----

struct W6Solution {
    LengthAssignment spokes;  // hub to rim vertex i
    LengthAssignment rim;     // rim vertex i to i+1
    std::string signs;        // turn direction of each hub angle, '+' or '-'
    int winding = 0;          // sum of signed hub angles / 2 pi
    bool induced = true;      // no rim diagonal has length 1 or d
    std::vector<XY> placement;  // hub first

    std::string key() const;
};

struct W6Report {
    /// Labelings with certified closure, before identification.
    std::vector<W6Solution> raw;
    /// One representative per congruence class, reflections of the plane
    /// identified (wheel automorphisms x mirror: 20 transforms).
    std::vector<W6Solution> classes;
    std::size_t classes_without_reflections = 0;  // wheel automorphisms only
    std::size_t induced_classes = 0;
    std::size_t induced_classes_without_reflections = 0;
    std::size_t rejected_coincident = 0;
};

/// Default closure tolerance: 1e-30 of 2 pi.
inline constexpr double kW6Tolerance = 6.283185307179586e-30;

W6Report w6_embeddings(const FieldElement& d2, double tol = kW6Tolerance);

struct W6Root {
    RationalInterval d2;  // certified enclosure of a closure root
    std::vector<std::string> labelings;
    double approx() const;
};

/// Values of d^2 in (lo, hi) at which some labeling closes up, each refined by
/// certified bisection to `resolution`. Roots where the closure function only
/// touches zero are not detected.
std::vector<W6Root> w6_spectrum(const Rational& lo, const Rational& hi, const Rational& resolution = Rational("1/1000000000000"),
                                int grid = 4000);

// ---- uniqueness ----

struct UniquenessReport {
    std::size_t graphs_checked = 0;
    std::size_t matching_labeled = 0;
    std::vector<AbstractGraph> classes;  // one witness per isomorphism class
};

/// Canonical adjacency string of a graph on at most 8 vertices.
std::string canonical_form(const AbstractGraph& g);
bool contains_k4(const AbstractGraph& g);

/// All labeled 6-vertex graphs that are K4-free with chromatic number 4.
UniquenessReport verify_w6_uniqueness();

nlohmann::json to_json(const K4Spectrum& s);
nlohmann::json to_json(const W6Report& r);
nlohmann::json to_json(const std::vector<W6Root>& roots);

}  // namespace planecolor
