#include "planecolor/verify.hpp"

#include "planecolor/catalog.hpp"
#include "planecolor/coloring.hpp"
#include "planecolor/embeddings.hpp"
#include "planecolor/reference_data.hpp"

#include <chrono>
#include <set>

namespace planecolor {

namespace {

CheckResult eq(std::string name, long long expected, long long computed) {
    return {std::move(name), std::to_string(expected), std::to_string(computed), expected == computed};
}

CheckResult truth(std::string name, bool expected, bool computed) {
    return {std::move(name), expected ? "true" : "false", computed ? "true" : "false", expected == computed};
}

CheckResult at_least(std::string name, long long bound, long long computed) {
    return {std::move(name), ">= " + std::to_string(bound), std::to_string(computed), computed >= bound};
}

std::string status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::Colorable: return "colorable";
        case SolveStatus::NotColorable: return "not_colorable";
        default: return "budget_exhausted";
    }
}

CheckResult status(std::string name, SolveStatus expected, SolveStatus computed) {
    return {std::move(name), status_name(expected), status_name(computed), expected == computed};
}

std::vector<CheckResult> counts(const TwoDistGraph& g, long vertices, long unit, long d, long edges) {
    std::vector<CheckResult> out{eq("vertices", vertices, g.size())};
    if (unit >= 0) out.push_back(eq("unit edges", unit, g.unit_edges.size()));
    if (d >= 0) out.push_back(eq("d edges", d, g.d_edges.size()));
    if (edges >= 0) out.push_back(eq("edges", edges, g.edge_count()));
    return out;
}

std::set<Edge> to_indices(const reference::Pairs& pairs) {
    std::set<Edge> out;
    for (auto [a, b] : pairs) out.insert({std::size_t(a - 1), std::size_t(b - 1)});
    return out;
}

CheckResult same_edges(std::string name, const reference::Pairs& expected, const std::vector<Edge>& computed) {
    std::set<Edge> c(computed.begin(), computed.end());
    auto e = to_indices(expected);
    return {std::move(name), std::to_string(e.size()) + " listed pairs",
            c == e ? "identical" : std::to_string(c.size()) + " pairs, different", c == e};
}

std::vector<CheckResult> spindle_case(const char* seed_id, const char* cos,
                                      const std::array<std::pair<std::string, std::string>, 4>& images) {
    auto seed = catalog(seed_id);
    auto r = spindle(seed, 0, 1, seed.tower()->one());
    auto out = counts(r.graph, 9, -1, -1, 19);
    out.push_back(eq("chromatic number", 5, chromatic_number(r.graph)));
    out.push_back(truth("rotation cosine is " + std::string(cos), true, r.cos == r.graph.tower()->parse(cos)));
    for (std::size_t i = 0; i < 4; ++i) {
        Point p = make_point(r.graph.tower(), images[i].first, images[i].second);
        out.push_back(truth("image " + std::to_string(i + 2) + "' coordinates", true, r.graph.points[r.image[i + 1]] == p));
    }
    return out;
}

std::vector<std::size_t> range(std::size_t from, std::size_t to) {
    std::vector<std::size_t> out;
    for (std::size_t i = from; i < to; ++i) out.push_back(i);
    return out;
}

std::vector<VerificationCase> make_cases() {
    std::vector<VerificationCase> cases;
    cases.push_back({"moser", "Moser spindle in lattice coordinates", false, [] {
                         auto g = catalog("moser_spindle");
                         auto out = counts(g, 7, 11, -1, -1);
                         out.push_back(eq("chromatic number", 4, chromatic_number(g)));
                         return out;
                     }});
    cases.push_back({"root3", "{1, sqrt3}: spindled K5 minus e is 5-chromatic", false,
                     [] { return spindle_case("root3_k5e", "7/8", reference::root3_images); }});
    cases.push_back({"root6", "{1, (sqrt6 + sqrt2)/2}: spindled K5 minus e is 5-chromatic", false,
                     [] { return spindle_case("root6_k5e", "3/4", reference::root6_images); }});
    cases.push_back({"root2", "{1, sqrt2}: 13-vertex 5-chromatic graph", false, [] {
                         auto g = catalog("root2_13");
                         auto out = counts(g, 13, 20, 14, -1);
                         out.push_back(same_edges("unit pairs", reference::root2_unit, g.unit_edges));
                         out.push_back(same_edges("sqrt2 pairs", reference::root2_d, g.d_edges));
                         out.push_back(eq("chromatic number", 5, chromatic_number(g)));
                         out.push_back(eq("4-colorings by enumeration", 0, brute_force_count(g, 4)));
                         return out;
                     }});
    cases.push_back({"exotic13", "13-vertex graph forcing vertices 1 and 2 to share a color", false, [] {
                         auto g = catalog("exotic_13");
                         std::vector<CheckResult> out;
                         out.push_back(same_edges("unit pairs", reference::exotic_unit, g.unit_edges));
                         out.push_back(same_edges("d pairs", reference::exotic_d, g.d_edges));
                         out.push_back(truth("vertices 1, 2 forced alike under 4 colors", true, forced_pair(g, 4, 0, 1)));
                         auto gap = dist2(g.points[0], g.points[1]) - g.tower()->parse("1/4");
                         out.push_back(truth("|1 2| > 1/2", true, sign(gap) > 0));
                         return out;
                     }});
    cases.push_back({"exotic", "spindled exotic graph is 5-chromatic", false, [] {
                         auto g = catalog("exotic_spindled25");
                         auto out = counts(g, 25, -1, -1, 67);
                         out.push_back(eq("chromatic number", 5, chromatic_number(g)));
                         return out;
                     }});
    cases.push_back({"smart1", "A, B at 1/sqrt3 cannot share a color", false, [] {
                         auto g = catalog("smart1_9");
                         std::size_t a = *g.find_label("A"), b = *g.find_label("B");
                         std::vector<CheckResult> out;
                         std::string adj_a, adj_b;
                         for (int v = 1; v <= 7; ++v) {
                             auto i = *g.find_label(std::to_string(v));
                             if (g.adjacent(a, i)) adj_a += std::to_string(v);
                             if (g.adjacent(b, i)) adj_b += std::to_string(v);
                         }
                         out.push_back({"neighbours of A among 1..7", "1234", adj_a, adj_a == "1234"});
                         out.push_back({"neighbours of B among 1..7", "567", adj_b, adj_b == "567"});
                         out.push_back(status("4-coloring with A, B alike", SolveStatus::NotColorable,
                                              is_k_colorable(g, 4, {{a, 3}, {b, 3}}).result));
                         out.push_back(status("3-coloring of vertices 1..7", SolveStatus::NotColorable,
                                              is_k_colorable(induced(g, range(2, 9)), 3).result));
                         return out;
                     }});
    cases.push_back({"smart2", "31-vertex core of the d = sqrt(5/3) graph is not 3-colorable", true, [] {
                         auto g = catalog("smart2_33");
                         std::size_t a = *g.find_label("A");
                         int adjacent = 0;
                         for (int v = 1; v <= 15; ++v) adjacent += g.adjacent(a, *g.find_label(std::to_string(v)));
                         std::vector<CheckResult> out{eq("vertices", 33, g.size()),
                                                      eq("A adjacent to 1..15", 15, adjacent)};
                         out.push_back(status("3-coloring of vertices 1..31", SolveStatus::NotColorable,
                                              is_k_colorable(induced(g, range(2, 33)), 3).result));
                         return out;
                     }});
    cases.push_back({"two", "{1, 2}: 26-vertex 5-chromatic graph", false, [] {
                         auto g = catalog("two26");
                         auto out = counts(g, 26, 75, 10, -1);
                         out.push_back(eq("chromatic number", 5, chromatic_number(g)));
                         return out;
                     }});
    cases.push_back({"tworoot3", "{1, 2/sqrt3}: 103-vertex 5-chromatic graph", true, [] {
                         auto g = catalog("tworoot3_103");
                         auto out = counts(g, 103, 312, 177, -1);
                         out.push_back(eq("chromatic number", 5, chromatic_number(g)));
                         return out;
                     }});
    cases.push_back({"twodistance", "d > 1 admitting a planar {1, d}-labeled K4", false, [] {
                         auto spectrum = k4_spectrum();
                         auto t = Tower::build({{"s3", "3"}, {"s5", "5"}});
                         std::vector<CheckResult> out{eq("distinct d^2 values", 4, spectrum.values.size())};
                         for (const char* x : {"2", "(3 + s5)/2", "3", "2 + s3"}) {
                             bool found = false;
                             for (const auto& v : spectrum.values) found = found || root_equals(v, t->parse(x));
                             out.push_back(truth(std::string("d^2 = ") + x, true, found));
                         }
                         return out;
                     }});
    cases.push_back({"w6", "wheel W6 embeddings", false, [] {
                         auto t = Tower::standard();
                         auto r = w6_embeddings(t->parse("(1/4)*(q3*2*s2 + 2*s3 + 2)"));
                         std::vector<CheckResult> out;
                         out.push_back(eq("classes at the exotic d (reflections identified)", 16, r.classes.size()));
                         out.push_back({"classes at the exotic d (reflections distinct)", "16",
                                        std::to_string(r.classes_without_reflections),
                                        r.classes_without_reflections == 16});
                         for (const char* d2 : {"2 + s2", "1 + s2/2", "2 + (s2*s3 - s2)/2"})
                             out.push_back(at_least(std::string("classes at d^2 = ") + d2, 1,
                                                    w6_embeddings(t->parse(d2)).classes.size()));
                         return out;
                     }});
    cases.push_back({"w6_uniqueness", "W6 is the only 6-vertex K4-free 4-chromatic graph", false, [] {
                         auto r = verify_w6_uniqueness();
                         std::vector<CheckResult> out{eq("isomorphism classes", 1, r.classes.size())};
                         if (!r.classes.empty()) out.push_back(eq("edges of the witness", 10, r.classes[0].edges().size()));
                         return out;
                     }});
    cases.push_back({"spindle_cos", "rotation cosines of the two K5 minus e spindles", false, [] {
                         auto t = Tower::build({{"s2", "2"}, {"s3", "3"}});
                         auto r6 = t->parse("(s2*s3 + s2)/2");
                         return std::vector<CheckResult>{
                             truth("cos for |12| = 2, unit bridge is 7/8", true,
                                   spindle_cos(t->constant(4), t->one()) == t->parse("7/8")),
                             truth("cos for |12| = sqrt2, unit bridge is 3/4", true,
                                   spindle_cos(t->constant(2), t->one()) == t->parse("3/4")),
                             truth("root6 seed has |12|^2 = 2", true,
                                   dist2(catalog("root6_k5e").points[0], catalog("root6_k5e").points[1]) ==
                                       catalog("root6_k5e").tower()->constant(2)),
                             truth("(sqrt6 + sqrt2)/2 squared is 2 + sqrt3", true, r6 * r6 == t->parse("2 + s3")),
                         };
                     }});
    cases.push_back({"composition", "smart1 gadget on every 1/sqrt3 edge of the scaled root3 graph", false, [] {
                         auto t = Tower::build(catalog_entry("composed100").tower);
                         auto base = catalog("root3_spindled9", t);
                         auto scale = t->parse("s3/3"), carrier = t->parse("1/3");
                         auto gadget = smart1_gadget(t);
                         std::vector<Point> scaled;
                         for (const auto& p : base.points) scaled.push_back({p.x * scale, p.y * scale});
                         auto g = catalog("composed100", t);
                         return std::vector<CheckResult>{
                             eq("carrier edges", 13, pairs_at(scaled, carrier).size()),
                             eq("unit edges of the scaled base", 6, pairs_at(scaled, t->one()).size()),
                             eq("placed vertices", 100, composition_placements(base, scale, carrier, gadget)),
                             eq("distinct vertices", 100, g.size()),
                         };
                     }});
    return cases;
}

}  // namespace

bool CaseReport::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return !checks.empty();
}

const std::vector<VerificationCase>& verification_cases() {
    static const std::vector<VerificationCase> cases = make_cases();
    return cases;
}

const VerificationCase& verification_case(const std::string& id) {
    for (const auto& c : verification_cases())
        if (c.id == id) return c;
    throw UnknownCase(id);
}

CaseReport run_case(const VerificationCase& c) {
    auto t0 = std::chrono::steady_clock::now();
    CaseReport r{c.id, c.description, {}, 0};
    try {
        r.checks = c.run();
    } catch (const std::exception& e) {
        r.checks.push_back({"completed without error", "no exception", e.what(), false});
    }
    r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

nlohmann::json to_json(const CaseReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}});
    return {{"id", r.id}, {"description", r.description}, {"pass", r.pass()}, {"checks", checks}, {"ms", r.ms}};
}

}  // namespace planecolor
