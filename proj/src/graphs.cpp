#include "planecolor/graphs.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace planecolor {

namespace {

void check_d2(const FieldElement& d2) {
    if (sign(d2 - d2.tower()->one()) <= 0) throw DNotGreaterThanOne();
}

std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
    return labels;
}

std::string decimal(const FieldElement& x) {
    RationalInterval iv = to_interval(x, Rational(1, 1000000));
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", Rational((iv.lo + iv.hi) / 2).get_d());
    return buf;
}

Integer json_integer(const nlohmann::json& v) {
    if (v.is_number_integer()) return Integer(std::to_string(v.get<long long>()));
    if (v.is_string()) {
        try {
            return Integer(v.get<std::string>());
        } catch (const std::invalid_argument&) {
        }
    }
    throw ParseError("lattice coordinate is not an integer: " + v.dump());
}

}  // namespace

std::vector<Edge> TwoDistGraph::edges() const {
    std::vector<Edge> all = unit_edges;
    all.insert(all.end(), d_edges.begin(), d_edges.end());
    std::sort(all.begin(), all.end());
    return all;
}

bool TwoDistGraph::adjacent(std::size_t u, std::size_t v) const {
    Edge e = std::minmax(u, v);
    return std::binary_search(unit_edges.begin(), unit_edges.end(), e) ||
           std::binary_search(d_edges.begin(), d_edges.end(), e);
}

std::optional<std::size_t> TwoDistGraph::find_label(std::string_view label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return i;
    return std::nullopt;
}

TwoDistGraph build(std::vector<Point> points, const FieldElement& d2) {
    check_d2(d2);
    if (points.empty()) throw GraphError("a graph needs at least one point");
    TwoDistGraph g{d2, std::move(points), {}, {}, {}, {}};
    const FieldElement one = d2.tower()->one();
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            FieldElement dd = dist2(g.points[i], g.points[j]);
            if (dd.is_zero()) throw DuplicatePoint(i, j);
            if (dd == one)
                g.unit_edges.emplace_back(i, j);
            else if (dd == d2)
                g.d_edges.emplace_back(i, j);
        }
    }
    g.labels = default_labels(g.size());
    return g;
}

TwoDistGraph build_lattice(std::vector<LatticeCoord> coords, const FieldElement& d2) {
    check_d2(d2);
    if (coords.empty()) throw GraphError("a graph needs at least one point");
    const TowerPtr& tower = d2.tower();
    TwoDistGraph g{d2, {}, {}, {}, std::move(coords), {}};
    for (const auto& c : g.lattice) g.points.push_back(lattice_to_point(c, tower));
    const FieldElement one = tower->one();
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            Qrt33 q = lattice_dist2(g.lattice[i], g.lattice[j]);
            if (sgn(q.p) == 0 && sgn(q.q) == 0) throw DuplicatePoint(i, j);
            if (sgn(q.q) == 0 && q.p == 1) {
                g.unit_edges.emplace_back(i, j);
                continue;
            }
            if (to_field(q, tower) == d2) g.d_edges.emplace_back(i, j);
        }
    }
    g.labels = default_labels(g.size());
    return g;
}

TwoDistGraph induced(const TwoDistGraph& g, const std::vector<std::size_t>& keep) {
    std::vector<Point> pts;
    std::vector<LatticeCoord> lat;
    std::vector<std::string> labels;
    for (auto v : keep) {
        pts.push_back(g.points.at(v));
        labels.push_back(g.labels.at(v));
        if (!g.lattice.empty()) lat.push_back(g.lattice.at(v));
    }
    TwoDistGraph h = build(std::move(pts), g.d2);
    h.lattice = std::move(lat);
    h.labels = std::move(labels);
    return h;
}

nlohmann::json to_json(const TwoDistGraph& g) {
    nlohmann::json doc;
    doc["tower"] = nlohmann::json::array();
    for (const auto& def : g.tower()->definitions())
        doc["tower"].push_back({{"name", def.name}, {"square", def.square}});
    doc["d2"] = g.d2.to_string();
    doc["lattice"] = !g.lattice.empty();
    doc["vertices"] = nlohmann::json::array();
    if (!g.lattice.empty()) {
        for (const auto& c : g.lattice) {
            nlohmann::json row = nlohmann::json::array();
            for (const Integer* z : {&c.a, &c.b, &c.c, &c.d}) {
                if (z->fits_slong_p())
                    row.push_back(z->get_si());
                else
                    row.push_back(z->get_str());
            }
            doc["vertices"].push_back(row);
        }
    } else {
        for (const auto& p : g.points) doc["vertices"].push_back({p.x.to_string(), p.y.to_string()});
    }
    doc["labels"] = g.labels;
    return doc;
}

TwoDistGraph from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw ParseError("graph document must be a JSON object");
    for (const char* key : {"tower", "d2", "vertices"})
        if (!doc.contains(key)) throw ParseError(std::string("graph document lacks '") + key + "'");
    if (!doc["tower"].is_array() || !doc["vertices"].is_array() || !doc["d2"].is_string())
        throw ParseError("graph document has fields of the wrong type");

    std::vector<Tower::GeneratorDef> defs;
    for (const auto& item : doc["tower"]) {
        if (item.is_object() && item.contains("name") && item.contains("square") && item["name"].is_string() &&
            item["square"].is_string())
            defs.push_back({item["name"].get<std::string>(), item["square"].get<std::string>()});
        else
            throw ParseError("tower entries must be {\"name\": ..., \"square\": ...}");
    }
    TowerPtr tower = Tower::build(defs);
    FieldElement d2 = tower->parse(doc["d2"].get<std::string>());
    const bool is_lattice = doc.value("lattice", false);
    const auto& verts = doc["vertices"];
    if (verts.empty()) throw ParseError("graph document has no vertices");

    TwoDistGraph g;
    if (is_lattice) {
        std::vector<LatticeCoord> coords;
        for (const auto& v : verts) {
            if (!v.is_array() || v.size() != 4) throw ParseError("lattice vertex must be [a,b,c,d]: " + v.dump());
            coords.push_back({json_integer(v[0]), json_integer(v[1]), json_integer(v[2]), json_integer(v[3])});
        }
        g = build_lattice(std::move(coords), d2);
    } else {
        std::vector<Point> pts;
        for (const auto& v : verts) {
            if (!v.is_array() || v.size() != 2 || !v[0].is_string() || !v[1].is_string())
                throw ParseError("vertex must be a pair of expression strings: " + v.dump());
            pts.push_back(make_point(tower, v[0].get<std::string>(), v[1].get<std::string>()));
        }
        g = build(std::move(pts), d2);
    }
    if (doc.contains("labels")) {
        const auto& labels = doc["labels"];
        if (!labels.is_array() || labels.size() != g.size()) throw ParseError("labels must match the vertex count");
        g.labels.clear();
        for (const auto& l : labels) {
            if (!l.is_string()) throw ParseError("labels must be strings");
            g.labels.push_back(l.get<std::string>());
        }
    }
    return g;
}

std::string to_dot(const TwoDistGraph& g, const std::string& name) {
    std::ostringstream os;
    os << "graph \"" << name << "\" {\n";
    os << "  node [shape=circle];\n";
    for (std::size_t i = 0; i < g.size(); ++i)
        os << "  " << i << " [label=\"" << g.labels.at(i) << "\", pos=\"" << decimal(g.points[i].x) << ","
           << decimal(g.points[i].y) << "!\"];\n";
    for (const auto& [u, v] : g.unit_edges) os << "  " << u << " -- " << v << " [color=red];\n";
    for (const auto& [u, v] : g.d_edges) os << "  " << u << " -- " << v << " [color=blue];\n";
    os << "}\n";
    return os.str();
}

}  // namespace planecolor
