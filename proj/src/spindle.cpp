#include "planecolor/spindle.hpp"

namespace planecolor {

namespace {

// n = k^2 m with m squarefree.
std::pair<Integer, Integer> split_square(Integer n) {
    Integer k = 1, m = 1;
    for (Integer p = 2; p * p <= n; ++p) {
        while (n % (p * p) == 0) {
            n /= p * p;
            k *= p;
        }
        if (n % p == 0) {
            n /= p;
            m *= p;
        }
    }
    return {k, m * n};
}

std::string fresh_name(const Tower& tower, const std::string& stem) {
    if (!tower.find(stem)) return stem;
    for (int i = 1;; ++i) {
        std::string name = stem + "_" + std::to_string(i);
        if (!tower.find(name)) return name;
    }
}

// Nonnegative root of x, extending the tower when x is not a square in it.
FieldElement root_extending(const FieldElement& x) {
    if (auto r = sqrt_in_field(x)) return *r;
    const Tower& tower = *x.tower();
    if (x.is_rational()) {
        const Rational& q = x.rational_part();
        auto [k, m] = split_square(q.get_num() * q.get_den());
        TowerPtr ext = tower.extend(fresh_name(tower, "s" + m.get_str()), tower.constant(Rational(m)));
        Rational factor(k, q.get_den());
        factor.canonicalize();
        return ext->generator(ext->levels() - 1) * factor;
    }
    TowerPtr ext = tower.extend(fresh_name(tower, "w"), x);
    return ext->generator(ext->levels() - 1);
}

std::optional<std::size_t> index_of(const std::vector<Point>& pts, const Point& p) {
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (pts[i] == p) return i;
    return std::nullopt;
}

}  // namespace

SpindleResult spindle(const TwoDistGraph& g, std::size_t pivot, std::size_t moved, const FieldElement& bridge2) {
    if (pivot >= g.size() || moved >= g.size() || pivot == moved) throw GraphError("spindle needs two distinct vertices");
    const TowerPtr& base = g.tower();
    if (bridge2 != base->one() && bridge2 != g.d2) throw BridgeNotForbidden();

    FieldElement c = spindle_cos(dist2(g.points[pivot], g.points[moved]), bridge2);
    FieldElement s = root_extending(base->one() - c * c);
    const TowerPtr tower = s.tower();
    c = c.lift(tower);

    std::vector<Point> pts;
    for (const auto& p : g.points) pts.push_back(p.lift(tower));
    const std::size_t n = pts.size();
    std::vector<std::string> labels = g.labels;
    std::vector<std::size_t> image(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i == pivot) {
            image[i] = pivot;
            continue;
        }
        Point q = rotate_about(pts[pivot], c, s, pts[i]);
        if (auto existing = index_of(pts, q)) {
            image[i] = *existing;
            continue;
        }
        image[i] = pts.size();
        pts.push_back(std::move(q));
        labels.push_back(g.labels[i] + "'");
    }

    TwoDistGraph h = build(std::move(pts), g.d2.lift(tower));
    h.labels = std::move(labels);
    if (image[moved] == moved) throw GraphError("rotation leaves the moved vertex in place");
    if (dist2(h.points[moved], h.points[image[moved]]) != bridge2.lift(tower))
        throw std::logic_error("spindle rotation missed the bridge length");
    return SpindleResult{std::move(h), pivot, Edge{moved, image[moved]}, c, s, std::move(image)};
}

std::vector<Edge> pairs_at(const std::vector<Point>& points, const FieldElement& len2) {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (dist2(points[i], points[j]) == len2) out.emplace_back(i, j);
    return out;
}

TwoDistGraph compose_by_edge_substitution(const TwoDistGraph& base, const FieldElement& scale,
                                          const FieldElement& carrier_len2, const Gadget& gadget, bool mirrored) {
    const TwoDistGraph& gg = gadget.graph;
    const Point& a = gg.points.at(gadget.anchor_a);
    const Point& b = gg.points.at(gadget.anchor_b);
    if (dist2(a, b) != carrier_len2) throw AnchorDistanceMismatch();

    std::vector<Point> pts;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < base.size(); ++i) {
        pts.push_back({base.points[i].x * scale, base.points[i].y * scale});
        labels.push_back(base.labels[i]);
    }
    const auto carriers = pairs_at(pts, carrier_len2);

    // Motion p -> P + R (M (p - A)) with M the optional reflection in line AB.
    const FieldElement vx = b.x - a.x, vy = b.y - a.y;
    const FieldElement inv_len2 = carrier_len2.inverse();
    for (const auto& [pi, qi] : carriers) {
        const Point p = pts[pi];
        const FieldElement wx = pts[qi].x - p.x, wy = pts[qi].y - p.y;
        const FieldElement cos = (vx * wx + vy * wy) * inv_len2;
        const FieldElement sin = (vx * wy - vy * wx) * inv_len2;
        for (std::size_t i = 0; i < gg.size(); ++i) {
            if (i == gadget.anchor_a || i == gadget.anchor_b) continue;
            FieldElement dx = gg.points[i].x - a.x, dy = gg.points[i].y - a.y;
            if (mirrored) {
                FieldElement rx = ((vx * vx - vy * vy) * dx + (vx * vy) * dy * Rational(2)) * inv_len2;
                FieldElement ry = ((vx * vy) * dx * Rational(2) + (vy * vy - vx * vx) * dy) * inv_len2;
                dx = std::move(rx);
                dy = std::move(ry);
            }
            Point q{p.x + cos * dx - sin * dy, p.y + sin * dx + cos * dy};
            if (index_of(pts, q)) continue;
            pts.push_back(std::move(q));
            labels.push_back(base.labels[pi] + "-" + base.labels[qi] + ":" + gg.labels[i]);
        }
    }
    TwoDistGraph out = build(std::move(pts), gg.d2);
    out.labels = std::move(labels);
    return out;
}

std::size_t composition_placements(const TwoDistGraph& base, const FieldElement& scale,
                                   const FieldElement& carrier_len2, const Gadget& gadget) {
    std::vector<Point> pts;
    for (const auto& p : base.points) pts.push_back({p.x * scale, p.y * scale});
    return base.size() + pairs_at(pts, carrier_len2).size() * (gadget.graph.size() - 2);
}

}  // namespace planecolor
