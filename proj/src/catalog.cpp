#include "planecolor/catalog.hpp"

namespace planecolor {

namespace {

using Defs = std::vector<Tower::GeneratorDef>;

const Defs kLatticeTower = {{"s3", "3"}, {"s11", "11"}};

std::vector<LatticeCoord> lat(std::initializer_list<std::array<long, 4>> rows) {
    std::vector<LatticeCoord> out;
    for (const auto& r : rows) out.push_back({Integer(r[0]), Integer(r[1]), Integer(r[2]), Integer(r[3])});
    return out;
}

std::vector<std::string> anchored_labels(int count) {
    std::vector<std::string> out{"A", "B"};
    for (int i = 1; i <= count; ++i) out.push_back(std::to_string(i));
    return out;
}

std::vector<CatalogEntry> make_entries() {
    std::vector<CatalogEntry> e;

    e.push_back({.id = "moser_spindle",
                 .summary = "Moser spindle in lattice coordinates (unit-distance graph; d = 2 adds no edges)",
                 .tower = kLatticeTower,
                 .d2 = "4",
                 .lattice = lat({{0, 0, 0, 0}, {0, 0, 12, 0}, {6, 0, 6, 0}, {6, 0, 18, 0}, {0, 2, 10, 0},
                                 {5, 1, 5, -1}, {5, 3, 15, -1}}),
                 .expected_vertices = 7,
                 .expected_unit_edges = 11,
                 .expected_d_edges = 0,
                 .expected_chromatic = 4});

    // Regular pentagon with unit sides; t5 = sqrt(10 + 2 sqrt5) = 4 sin 72.
    e.push_back({.id = "k5_golden",
                 .summary = "K5 as a {1, golden ratio}-graph (regular unit pentagon)",
                 .tower = {{"s5", "5"}, {"t5", "10 + 2*s5"}},
                 .d2 = "(3 + s5)/2",
                 .coords = {{"0", "0"}, {"1", "0"}, {"(3 + s5)/4", "t5/4"}, {"1/2", "t5/4 + s5/t5"},
                            {"(1 - s5)/4", "t5/4"}},
                 .expected_vertices = 5,
                 .expected_unit_edges = 5,
                 .expected_d_edges = 5,
                 .expected_chromatic = 5});

    e.push_back({.id = "root3_k5e",
                 .summary = "K5 minus an edge as a {1, sqrt3}-graph",
                 .tower = {{"s3", "3"}, {"s5", "5"}},
                 .d2 = "3",
                 .coords = {{"0", "0"}, {"2", "0"}, {"1/2", "-s3/2"}, {"1", "0"}, {"1/2", "s3/2"}},
                 .expected_vertices = 5,
                 .expected_unit_edges = 6,
                 .expected_d_edges = 3,
                 .expected_edges = 9,
                 .expected_chromatic = 4});

    e.push_back({.id = "root3_spindled9",
                 .summary = "spindle of root3_k5e about vertex 1 with a unit bridge",
                 .tower = {{"s3", "3"}, {"s5", "5"}},
                 .d2 = "3",
                 .derived = true,
                 .expected_vertices = 9,
                 .expected_unit_edges = 13,
                 .expected_d_edges = 6,
                 .expected_edges = 19,
                 .expected_chromatic = 5});

    e.push_back({.id = "root6_k5e",
                 .summary = "K5 minus an edge as a {1, (sqrt6 + sqrt2)/2}-graph",
                 .tower = {{"s2", "2"}, {"s3", "3"}, {"s7", "7"}},
                 .d2 = "2 + s3",
                 .coords = {{"0", "0"},
                            {"s2*s3/2", "-s2/2"},
                            {"-s2/2", "-s2/2"},
                            {"(-s2 + s2*s3)/4", "(-s2 - s2*s3)/4"},
                            {"(-s2 + s2*s3)/4", "(s2 + s2*s3)/4"}},
                 .expected_vertices = 5,
                 .expected_edges = 9,
                 .expected_chromatic = 4});

    e.push_back({.id = "root6_spindled9",
                 .summary = "spindle of root6_k5e about vertex 1 with a unit bridge",
                 .tower = {{"s2", "2"}, {"s3", "3"}, {"s7", "7"}},
                 .d2 = "2 + s3",
                 .derived = true,
                 .expected_vertices = 9,
                 .expected_edges = 19,
                 .expected_chromatic = 5});

    e.push_back({.id = "root2_13",
                 .summary = "13-vertex {1, sqrt2}-graph",
                 .tower = {{"s7", "7"}},
                 .d2 = "2",
                 .coords = {{"1/2", "1/2"},
                            {"0", "0"},
                            {"1", "0"},
                            {"1", "1"},
                            {"0", "1"},
                            {"1/4 - s7/4", "3/4 - s7/4"},
                            {"3/4 + s7/4", "1/4 + s7/4"},
                            {"1/2", "s7/2"},
                            {"1/4 - s7/4", "1/4 + s7/4"},
                            {"-s7/2", "1/2"},
                            {"1 + s7/2", "1/2"},
                            {"3/4 + s7/4", "3/4 - s7/4"},
                            {"1/2", "1 - s7/2"}},
                 .expected_vertices = 13,
                 .expected_unit_edges = 20,
                 .expected_d_edges = 14,
                 .expected_chromatic = 5});

    // q3 = 3^{1/4}; 3^{3/4} = q3*s3.
    e.push_back({.id = "exotic_13",
                 .summary = "13-vertex graph at d = sqrt(3^{1/4} 2 sqrt2 + 2 sqrt3 + 2)/2 forcing vertices 1 and 2",
                 .tower = {{"s3", "3"}, {"q3", "s3"}, {"s2", "2"}},
                 .d2 = "(q3*2*s2 + 2*s3 + 2)/4",
                 .coords = {{"(q3*s2 - s3 + 1)/4", "(q3*s3*s2 + s3 + 1)/4"},
                            {"(-q3*s2 + s3 - 1)/4", "(q3*s3*s2 + s3 + 1)/4"},
                            {"(q3*s2 + s3 + 1)/4", "(q3*s3*s2 + s3 - 1)/4"},
                            {"(-q3*s2 - s3 - 1)/4", "(q3*s3*s2 + s3 - 1)/4"},
                            {"(q3*s2 + s3 + 1)/4", "(q3*s3*s2 + s3 + 3)/4"},
                            {"(-q3*s2 - s3 - 1)/4", "(q3*s3*s2 + s3 + 3)/4"},
                            {"(q3*s3*s2 - q3*s2)/4", "(q3*s3*s2 - q3*s2 + 2*s3 - 2)/4"},
                            {"(-q3*s3*s2 + q3*s2)/4", "(q3*s3*s2 - q3*s2 + 2*s3 - 2)/4"},
                            {"1", "0"},
                            {"-1", "0"},
                            {"1/2", "s3/2"},
                            {"-1/2", "s3/2"},
                            {"0", "0"}},
                 .expected_vertices = 13,
                 .expected_unit_edges = 19,
                 .expected_d_edges = 14,
                 .expected_chromatic = 4});

    e.push_back({.id = "exotic_spindled25",
                 .summary = "spindle of exotic_13 about vertex 1 with a unit bridge",
                 .tower = {{"s3", "3"}, {"q3", "s3"}, {"s2", "2"}},
                 .d2 = "(q3*2*s2 + 2*s3 + 2)/4",
                 .derived = true,
                 .expected_vertices = 25,
                 .expected_edges = 67,
                 .expected_chromatic = 5});

    e.push_back({.id = "smart1_9",
                 .summary = "A, B at distance 1/sqrt3 plus seven vertices, d = sqrt(3/2 + sqrt33/6)",
                 .tower = kLatticeTower,
                 .d2 = "3/2 + s3*s11/6",
                 .lattice = lat({{0, 0, 0, 0}, {4, 0, 0, 0}, {1, 3, 3, -1}, {0, 0, 12, 0}, {-1, -3, 9, 1},
                                 {-1, 3, 3, 1}, {-2, 0, 6, 0}, {0, 0, 6, 2}, {5, 3, 9, 1}}),
                 .labels = anchored_labels(7),
                 .expected_vertices = 9});

    e.push_back({.id = "smart2_33",
                 .summary = "A, B at distance 1/sqrt3 plus 31 vertices, d = sqrt(5/3)",
                 .tower = kLatticeTower,
                 .d2 = "5/3",
                 .lattice = lat({{0, 0, 0, 0},   {4, 0, 0, 0},    {2, 0, 0, 2},    {-2, 0, 0, 2},   {1, 3, -3, 1},
                                 {1, -3, 3, 1},  {-1, 3, -3, -1}, {-1, -3, 3, -1}, {0, 0, -12, 0},  {-1, 3, 3, 1},
                                 {-1, -3, -3, 1}, {6, 0, 6, 0},   {6, 0, -6, 0},   {5, 1, 5, -1},   {5, -1, -5, -1},
                                 {1, 3, 3, -1},  {1, -3, -3, -1}, {5, 3, -3, 1},   {5, -3, 3, 1},   {10, 0, 0, -2},
                                 {3, -3, 3, -1}, {3, 3, 3, 1},    {3, -3, -3, 1},  {7, 3, -9, 1},   {1, 3, 9, 1},
                                 {1, -3, -9, 1}, {5, 3, 3, -1},   {5, -3, -3, -1}, {7, 3, 9, -1},   {7, -3, -9, -1},
                                 {-2, 0, 6, 0},  {-2, 0, -6, 0},  {1, 3, -9, -1}}),
                 .labels = anchored_labels(31),
                 .expected_vertices = 33});

    e.push_back({.id = "two26",
                 .summary = "26-vertex {1, 2}-graph",
                 .tower = kLatticeTower,
                 .d2 = "4",
                 .lattice = lat({{-2, 0, 0, 2},  {2, 0, 0, 2},    {0, 0, 0, 0},   {0, 0, 0, 4},   {0, 0, -6, 2},
                                 {0, 0, 6, 2},   {-1, -3, 3, 3},  {1, 3, 3, 3},   {-3, -3, 3, 1}, {3, 3, 3, 1},
                                 {-1, -3, -3, 1}, {1, 3, -3, 1},  {-4, 0, 0, 0},  {4, 0, 0, 0},   {3, -3, -3, 1},
                                 {-3, 3, -3, 1}, {1, -3, -3, 3},  {-1, 3, -3, 3}, {1, -3, 3, 1},  {-1, 3, 3, 1},
                                 {-2, 0, 6, 0},  {2, 0, 6, 0},    {-2, 0, -6, 0}, {2, 0, -6, 0},  {0, -6, 0, 2},
                                 {0, 6, 0, 2}}),
                 .expected_vertices = 26,
                 .expected_unit_edges = 75,
                 .expected_d_edges = 10,
                 .expected_chromatic = 5});

    e.push_back({.id = "tworoot3_103",
                 .summary = "103-vertex {1, 2/sqrt3}-graph",
                 .tower = kLatticeTower,
                 .d2 = "4/3",
                 .lattice = lat({
                     {0, 0, 0, 0},     {6, 0, 6, 0},     {0, 0, 12, 0},    {-6, 0, 6, 0},    {-6, 0, -6, 0},
                     {0, 0, -12, 0},   {6, 0, -6, 0},    {0, -2, -10, 0},  {0, 2, -10, 0},   {0, -2, 10, 0},
                     {0, 2, 10, 0},    {-2, 0, 0, -2},   {2, 0, 0, -2},    {-2, 0, 0, 2},    {2, 0, 0, 2},
                     {-5, 1, -5, -1},  {5, -1, -5, -1},  {-5, -1, -5, 1},  {5, 1, -5, 1},    {-1, 3, -3, -1},
                     {1, -3, -3, -1},  {-1, -3, -3, 1},  {1, 3, -3, 1},    {-1, -3, 3, -1},  {1, 3, 3, -1},
                     {-1, 3, 3, 1},    {1, -3, 3, 1},    {-5, -1, 5, -1},  {5, 1, 5, -1},    {-5, 1, 5, 1},
                     {5, -1, 5, 1},    {0, -6, -6, 0},   {0, 6, -6, 0},    {0, -6, 6, 0},    {0, 6, 6, 0},
                     {-3, 3, -3, -3},  {3, -3, -3, -3},  {-3, -3, -3, 3},  {3, 3, -3, 3},    {-3, -3, 3, -3},
                     {3, 3, 3, -3},    {-3, 3, 3, 3},    {3, -3, 3, 3},    {-4, 0, 0, 0},    {4, 0, 0, 0},
                     {-2, 0, -6, 0},   {2, 0, -6, 0},    {-2, 0, 6, 0},    {2, 0, 6, 0},     {0, -2, -2, 0},
                     {0, 2, -2, 0},    {0, -2, 2, 0},    {0, 2, 2, 0},     {1, -1, -1, -1},  {-1, 1, -1, -1},
                     {-1, -1, -1, 1},  {1, 1, -1, 1},    {-1, -1, 1, -1},  {1, 1, 1, -1},    {1, -1, 1, 1},
                     {-1, 1, 1, 1},    {8, 0, 0, 0},     {4, 0, 12, 0},    {-4, 0, 12, 0},   {-8, 0, 0, 0},
                     {-4, 0, -12, 0},  {4, 0, -12, 0},   {0, -4, -4, 0},   {0, 4, -4, 0},    {0, -4, 4, 0},
                     {0, 4, 4, 0},     {-2, 2, -2, -2},  {2, -2, -2, -2},  {-2, -2, -2, 2},  {2, 2, -2, 2},
                     {-2, -2, 2, -2},  {2, 2, 2, -2},    {-2, 2, 2, 2},    {2, -2, 2, 2},    {-4, 2, -2, 0},
                     {4, -2, -2, 0},   {-4, 2, 2, 0},    {4, -2, 2, 0},    {1, -1, -7, 1},   {-1, 1, -7, 1},
                     {-3, 1, -5, 1},   {3, -1, -5, 1},   {-3, 1, 5, -1},   {3, -1, 5, -1},   {1, -1, 7, -1},
                     {-1, 1, 7, -1},   {-4, -2, -2, 0},  {4, 2, -2, 0},    {-4, -2, 2, 0},   {4, 2, 2, 0},
                     {-1, -1, -7, -1}, {1, 1, -7, -1},   {-3, -1, -5, -1}, {3, 1, -5, -1},   {-3, -1, 5, 1},
                     {3, 1, 5, 1},     {-1, -1, 7, 1},   {1, 1, 7, 1}}),
                 .expected_vertices = 103,
                 .expected_unit_edges = 312,
                 .expected_d_edges = 177,
                 .expected_chromatic = 5});

    e.push_back({.id = "composed100",
                 .summary = "root3_spindled9 scaled by 1/sqrt3 with the smart1 gadget on each 1/sqrt3 edge",
                 .tower = {{"s3", "3"}, {"s5", "5"}, {"s11", "11"}},
                 .d2 = "3/2 + s3*s11/6",
                 .derived = true,
                 .expected_vertices = 100});
    return e;
}

TwoDistGraph from_coordinates(const CatalogEntry& entry, const TowerPtr& tower) {
    FieldElement d2 = tower->parse(entry.d2);
    TwoDistGraph g;
    if (!entry.lattice.empty()) {
        g = build_lattice(entry.lattice, d2);
    } else {
        std::vector<Point> pts;
        for (const auto& [x, y] : entry.coords) pts.push_back(make_point(tower, x, y));
        g = build(std::move(pts), d2);
    }
    if (!entry.labels.empty()) g.labels = entry.labels;
    return g;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = make_entries();
    return entries;
}

const CatalogEntry& catalog_entry(std::string_view id) {
    for (const auto& e : catalog_entries())
        if (e.id == id) return e;
    throw UnknownId(std::string(id));
}

TwoDistGraph catalog(std::string_view id) { return catalog(id, Tower::build(catalog_entry(id).tower)); }

Gadget smart1_gadget(const TowerPtr& tower) { return Gadget{catalog("smart1_9", tower), 0, 1}; }

TwoDistGraph catalog(std::string_view id, const TowerPtr& tower) {
    const CatalogEntry& entry = catalog_entry(id);
    if (!entry.derived) return from_coordinates(entry, tower);

    const FieldElement one = tower->one();
    if (id == "root3_spindled9") return spindle(catalog("root3_k5e", tower), 0, 1, one).graph;
    if (id == "root6_spindled9") return spindle(catalog("root6_k5e", tower), 0, 1, one).graph;
    if (id == "exotic_spindled25") return spindle(catalog("exotic_13", tower), 0, 1, one).graph;
    if (id == "composed100") {
        TwoDistGraph base = catalog("root3_spindled9", tower);
        FieldElement scale = tower->parse("s3/3");
        return compose_by_edge_substitution(base, scale, tower->parse("1/3"), smart1_gadget(tower));
    }
    throw UnknownId(std::string(id));
}

}  // namespace planecolor
