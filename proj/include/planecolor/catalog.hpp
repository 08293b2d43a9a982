#pragma once

// Named graphs with their coordinates and expected invariants.

#include "planecolor/spindle.hpp"

#include <string>
#include <vector>

namespace planecolor {

struct CatalogEntry {
    std::string id;
    std::string summary;
    std::vector<Tower::GeneratorDef> tower;
    std::string d2;
    /// Explicit (x, y) expressions, or empty when `lattice` is used.
    std::vector<std::pair<std::string, std::string>> coords{};
    std::vector<LatticeCoord> lattice{};
    std::vector<std::string> labels{};  // empty: "1".."n"
    /// Derived entries (spindles, compositions) have no coordinate list.
    bool derived = false;
    // Expected invariants; -1 where nothing is asserted.
    int expected_vertices = -1;
    int expected_unit_edges = -1;
    int expected_d_edges = -1;
    int expected_edges = -1;
    int expected_chromatic = -1;
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry& catalog_entry(std::string_view id);

/// Builds the entry over its own tower.
TwoDistGraph catalog(std::string_view id);
/// Builds the entry over `tower`, which must define the generator names the
/// entry's coordinates use (or sqrt3 and sqrt11 for lattice entries).
TwoDistGraph catalog(std::string_view id, const TowerPtr& tower);

/// The gadget of the composition: smart1_9 with anchors A and B.
Gadget smart1_gadget(const TowerPtr& tower);

}  // namespace planecolor
