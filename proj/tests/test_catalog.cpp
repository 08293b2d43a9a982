#include <doctest.h>

#include "planecolor/catalog.hpp"
#include "planecolor/coloring.hpp"
#include "planecolor/reference_data.hpp"

#include <set>

using namespace planecolor;

namespace {

std::set<Edge> to_indices(const reference::Pairs& pairs) {
    std::set<Edge> out;
    for (auto [a, b] : pairs) out.insert({std::size_t(a - 1), std::size_t(b - 1)});
    return out;
}

std::set<Edge> as_set(const std::vector<Edge>& e) { return {e.begin(), e.end()}; }

}  // namespace

TEST_CASE("every entry builds with its expected counts") {
    for (const auto& e : catalog_entries()) {
        CAPTURE(e.id);
        if (e.id == "composed100") continue;
        auto g = catalog(e.id);
        if (e.expected_vertices >= 0) CHECK(g.size() == std::size_t(e.expected_vertices));
        if (e.expected_unit_edges >= 0) CHECK(g.unit_edges.size() == std::size_t(e.expected_unit_edges));
        if (e.expected_d_edges >= 0) CHECK(g.d_edges.size() == std::size_t(e.expected_d_edges));
        if (e.expected_edges >= 0) CHECK(g.edge_count() == std::size_t(e.expected_edges));
        CHECK(g.labels.size() == g.size());
    }
    CHECK_THROWS_AS(catalog("nonexistent"), UnknownId);
}

TEST_CASE("chromatic numbers of the small entries") {
    for (const auto& e : catalog_entries()) {
        if (e.expected_chromatic < 0) continue;
        CAPTURE(e.id);
        CHECK(chromatic_number(catalog(e.id)) == e.expected_chromatic);
    }
}

TEST_CASE("reference edge lists") {
    auto r2 = catalog("root2_13");
    CHECK(as_set(r2.unit_edges) == to_indices(reference::root2_unit));
    CHECK(as_set(r2.d_edges) == to_indices(reference::root2_d));
    auto ex = catalog("exotic_13");
    CHECK(as_set(ex.unit_edges) == to_indices(reference::exotic_unit));
    CHECK(as_set(ex.d_edges) == to_indices(reference::exotic_d));
}

TEST_CASE("exotic pair is forced and farther than 1/2") {
    auto ex = catalog("exotic_13");
    CHECK(forced_pair(ex, 4, 0, 1));
    auto quarter = ex.tower()->parse("1/4");
    CHECK(sign(dist2(ex.points[0], ex.points[1]) - quarter) > 0);
}

TEST_CASE("smart gadgets") {
    auto s1 = catalog("smart1_9");
    auto a = *s1.find_label("A"), b = *s1.find_label("B");
    for (const char* v : {"1", "2", "3", "4"}) CHECK(s1.adjacent(a, *s1.find_label(v)));
    for (const char* v : {"5", "6", "7"}) CHECK(s1.adjacent(b, *s1.find_label(v)));
    for (const char* v : {"5", "6", "7"}) CHECK_FALSE(s1.adjacent(a, *s1.find_label(v)));
    for (const char* v : {"1", "2", "3", "4"}) CHECK_FALSE(s1.adjacent(b, *s1.find_label(v)));
    CHECK(sign(dist2(s1.points[a], s1.points[b]) - s1.tower()->parse("1/3")) == 0);
    CHECK(is_k_colorable(s1, 4, {{a, 0}, {b, 0}}).result == SolveStatus::NotColorable);
    CHECK(is_k_colorable(s1, 4).result == SolveStatus::Colorable);
    std::vector<std::size_t> core;
    for (std::size_t i = 2; i < 9; ++i) core.push_back(i);
    CHECK(is_k_colorable(induced(s1, core), 3).result == SolveStatus::NotColorable);

    auto s2 = catalog("smart2_33");
    for (int v = 1; v <= 15; ++v) CHECK(s2.adjacent(0, *s2.find_label(std::to_string(v))));
    std::vector<std::size_t> core2;
    for (std::size_t i = 2; i < 33; ++i) core2.push_back(i);
    CHECK(is_k_colorable(induced(s2, core2), 3).result == SolveStatus::NotColorable);
}

TEST_CASE("lattice and explicit forms agree") {
    for (const char* id : {"moser_spindle", "smart1_9", "two26"}) {
        CAPTURE(id);
        const auto& e = catalog_entry(id);
        auto lat = catalog(id);
        std::vector<Point> pts;
        for (const auto& v : e.lattice) pts.push_back(lattice_to_point(v, lat.tower()));
        auto explicit_form = build(pts, lat.d2);
        CHECK(explicit_form.unit_edges == lat.unit_edges);
        CHECK(explicit_form.d_edges == lat.d_edges);
    }
}

TEST_CASE("json round trip of every entry") {
    for (const auto& e : catalog_entries()) {
        CAPTURE(e.id);
        if (e.id == "composed100" || e.id == "tworoot3_103") continue;
        auto g = catalog(e.id);
        auto back = from_json(nlohmann::json::parse(to_json(g).dump()));
        CHECK(back.size() == g.size());
        CHECK(back.unit_edges == g.unit_edges);
        CHECK(back.d_edges == g.d_edges);
        CHECK(back.labels == g.labels);
        CHECK(back.tower()->same_as(*g.tower()));
        if (g.lattice.empty()) CHECK(back.points == g.points);
    }
    CHECK_THROWS_AS(from_json(nlohmann::json::parse("{}")), ParseError);
}

TEST_CASE("composition over a common tower") {
    auto g = catalog("composed100");
    CHECK(g.size() >= 9);
    CHECK(g.d2 == g.tower()->parse("3/2 + s3*s11/6"));
}
