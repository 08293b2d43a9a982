#include "planecolor/embeddings.hpp"

#include "planecolor/interval.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

namespace planecolor {

// ---------------------------------------------------------------- K4

Polynomial cayley_menger4(const std::array<Polynomial, 6>& sq) {
    const Polynomial zero, one = Polynomial::constant(1);
    // Squared distance between points i and j, in kK4Edges order.
    auto d = [&](int i, int j) -> Polynomial {
        if (i == j) return zero;
        if (i > j) std::swap(i, j);
        for (std::size_t e = 0; e < kK4Edges.size(); ++e)
            if (kK4Edges[e] == std::pair<int, int>{i, j}) return sq[e];
        return zero;
    };
    std::vector<std::vector<Polynomial>> m(5, std::vector<Polynomial>(5));
    for (int c = 1; c < 5; ++c) m[0][c] = m[c][0] = one;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i + 1][j + 1] = d(i, j);
    return determinant(m);
}

Polynomial heron16(const Polynomial& a, const Polynomial& b, const Polynomial& c) {
    const Polynomial two = Polynomial::constant(2);
    return two * (a * b + b * c + c * a) - (a * a + b * b + c * c);
}

namespace {

constexpr std::array<std::array<int, 3>, 4> kK4Faces{{{0, 1, 3}, {0, 2, 4}, {1, 2, 5}, {3, 4, 5}}};

std::vector<XY> place_k4(const std::array<double, 6>& a) {
    std::vector<XY> p(4);
    double r01 = std::sqrt(a[0]);
    p[1] = {r01, 0};
    double x2 = (a[0] + a[1] - a[3]) / (2 * r01);
    p[2] = {x2, std::sqrt(std::max(0.0, a[1] - x2 * x2))};
    double x3 = (a[0] + a[2] - a[4]) / (2 * r01);
    double y3 = std::sqrt(std::max(0.0, a[2] - x3 * x3));
    auto miss = [&](double y) {
        double dx = x3 - p[2].first, dy = y - p[2].second;
        return std::abs(dx * dx + dy * dy - a[5]);
    };
    p[3] = {x3, miss(y3) <= miss(-y3) ? y3 : -y3};
    return p;
}

}  // namespace

K4Spectrum k4_spectrum() {
    K4Spectrum out;
    const Polynomial one = Polynomial::constant(1), t = Polynomial::x();
    for (int mask = 0; mask < 64; ++mask) {
        std::array<Polynomial, 6> sq;
        LengthAssignment labels;
        for (int e = 0; e < 6; ++e) {
            bool is_d = (mask >> e) & 1;
            sq[e] = is_d ? t : one;
            labels += is_d ? 'd' : '1';
        }
        Polynomial cm = cayley_menger4(sq);
        if (cm.degree() < 1) continue;
        Rational bound = root_bound(squarefree_part(cm));
        for (auto& root : isolate_roots(cm, Rational(1), bound)) {
            bool valid = true;
            for (const auto& f : kK4Faces)
                if (sign_at(heron16(sq[f[0]], sq[f[1]], sq[f[2]]), root) < 0) valid = false;
            if (!valid) continue;
            root.refine(Rational("1/1000000000000"));
            std::array<double, 6> a;
            for (int e = 0; e < 6; ++e) a[e] = ((mask >> e) & 1) ? root.approx() : 1.0;
            out.solutions.push_back({labels, cm, root, place_k4(a)});
        }
    }
    for (const auto& s : out.solutions) {
        bool seen = false;
        for (const auto& v : out.values)
            if (same_root(v, s.d2)) seen = true;
        if (!seen) out.values.push_back(s.d2);
    }
    for (auto& v : out.values) v.refine(Rational("1/1267650600228229401496703205376"));  // 2^-100
    std::sort(out.values.begin(), out.values.end(),
              [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.approx() < b.approx(); });
    return out;
}

// ---------------------------------------------------------------- W6

namespace {

constexpr int kRim = 5;

// Triangle type of hub angle i: bit 0 spoke i, bit 1 spoke i+1, bit 2 rim edge i (set = d).
int angle_type(int spokes, int rim, int i) {
    return ((spokes >> i) & 1) | (((spokes >> ((i + 1) % kRim)) & 1) << 1) | (((rim >> i) & 1) << 2);
}

struct Labeling {
    int spokes, rim, signs;  // bit i set: d (spokes, rim) or negative turn (signs)
};

std::string mask_string(int mask, char on, char off) {
    std::string s;
    for (int i = 0; i < kRim; ++i) s += ((mask >> i) & 1) ? on : off;
    return s;
}

int bit(int mask, int i) { return (mask >> (((i % kRim) + kRim) % kRim)) & 1; }

Labeling rotate(const Labeling& l) {
    Labeling r{0, 0, 0};
    for (int i = 0; i < kRim; ++i) {
        r.spokes |= bit(l.spokes, i) << ((i + 1) % kRim);
        r.rim |= bit(l.rim, i) << ((i + 1) % kRim);
        r.signs |= bit(l.signs, i) << ((i + 1) % kRim);
    }
    return r;
}

// Relabels rim vertex i as -i; the walk reverses, so turn signs flip.
Labeling reverse(const Labeling& l) {
    Labeling r{0, 0, 0};
    for (int i = 0; i < kRim; ++i) {
        int j = (kRim - i) % kRim, e = ((kRim - i - 1) % kRim + kRim) % kRim;
        r.spokes |= bit(l.spokes, i) << j;
        r.rim |= bit(l.rim, i) << e;
        r.signs |= (1 - bit(l.signs, i)) << e;
    }
    return r;
}

Labeling mirror(const Labeling& l) { return {l.spokes, l.rim, (~l.signs) & 31}; }

// Sign bits are cleared where the hub angle is 0 or pi.
Labeling normalize(Labeling l, int degenerate_types) {
    for (int i = 0; i < kRim; ++i)
        if ((degenerate_types >> angle_type(l.spokes, l.rim, i)) & 1) l.signs &= ~(1 << i);
    return l;
}

int code(const Labeling& l) { return l.spokes | (l.rim << 5) | (l.signs << 10); }

int canonical(Labeling l, bool with_mirror, int degenerate_types) {
    int best = code(normalize(l, degenerate_types));
    for (int m = 0; m < (with_mirror ? 2 : 1); ++m) {
        Labeling base = m ? mirror(l) : l;
        for (int rev = 0; rev < 2; ++rev) {
            Labeling cur = rev ? reverse(base) : base;
            for (int k = 0; k < kRim; ++k) {
                best = std::min(best, code(normalize(cur, degenerate_types)));
                cur = rotate(cur);
            }
        }
    }
    return best;
}

struct AngleTable {
    std::array<std::optional<Interval>, 8> gamma;  // nullopt: triangle violates the inequality
    int degenerate = 0;                             // bitmask over types
};

AngleTable angle_table(const FieldElement& d2, const Interval& t, mpfr_prec_t prec) {
    AngleTable table;
    const FieldElement one = d2.tower()->one();
    const Interval unit(Rational(1), prec);
    const Polynomial u = Polynomial::constant(1), x = Polynomial::x();
    for (int type = 0; type < 8; ++type) {
        const bool a = type & 1, b = type & 2, c = type & 4;
        // Exact triangle test on the squared sides.
        FieldElement h = heron16(a ? x : u, b ? x : u, c ? x : u).eval(d2);
        int s = sign(h);
        if (s < 0) continue;
        if (s == 0) table.degenerate |= 1 << type;
        const Interval& A = a ? t : unit;
        const Interval& B = b ? t : unit;
        const Interval& C = c ? t : unit;
        Interval cosg = (A + B - C) / ((A * B).sqrt() * 2);
        table.gamma[type] = cosg.acos();
    }
    return table;
}

struct Closure {
    Interval residual;  // sum of signed angles minus 2 pi k
    int winding;
};

Closure closure(const AngleTable& table, const Labeling& l, const Interval& two_pi) {
    Interval sum(two_pi.precision());
    for (int i = 0; i < kRim; ++i) {
        const Interval& g = *table.gamma[angle_type(l.spokes, l.rim, i)];
        sum = bit(l.signs, i) ? sum - g : sum + g;
    }
    int k = static_cast<int>(std::lround(sum.mid_d() / (2 * M_PI)));
    return {sum - two_pi * k, k};
}

}  // namespace

std::string W6Solution::key() const { return "spokes=" + spokes + " rim=" + rim + " signs=" + signs; }

W6Report w6_embeddings(const FieldElement& d2, double tol) {
    if (sign(d2 - d2.tower()->one()) <= 0) throw DNotGreaterThanOne();
    for (mpfr_prec_t prec = 128; prec <= 4096; prec *= 2) {
        const Interval t = Interval::of(d2, prec);
        const Interval two_pi = Interval::pi(prec) * 2;
        const Interval unit(Rational(1), prec);
        AngleTable table = angle_table(d2, t, prec);
        W6Report report;
        bool uncertain = false;
        std::set<int> seen_raw;
        for (int spokes = 0; spokes < 32 && !uncertain; ++spokes)
            for (int rim = 0; rim < 32 && !uncertain; ++rim) {
                bool valid = true;
                for (int i = 0; i < kRim; ++i)
                    if (!table.gamma[angle_type(spokes, rim, i)]) valid = false;
                if (!valid) continue;
                for (int signs = 0; signs < 32; ++signs) {
                    Labeling l = normalize({spokes, rim, signs}, table.degenerate);
                    if (!seen_raw.insert(code(l)).second) continue;
                    Closure c = closure(table, l, two_pi);
                    if (!c.residual.contains_zero()) continue;
                    if (!c.residual.width_at_most(tol)) {
                        uncertain = true;
                        break;
                    }
                    // Rim diagonals i, i+2: reject coincidences, note extra edges.
                    bool coincident = false, induced = true;
                    for (int i = 0; i < kRim; ++i) {
                        const Interval& g1 = *table.gamma[angle_type(l.spokes, l.rim, i)];
                        const Interval& g2 = *table.gamma[angle_type(l.spokes, l.rim, (i + 1) % kRim)];
                        Interval phi = (bit(l.signs, i) ? -g1 : g1) + (bit(l.signs, i + 1) ? -g2 : g2);
                        const Interval& A = bit(l.spokes, i) ? t : unit;
                        const Interval& C = bit(l.spokes, i + 2) ? t : unit;
                        Interval dist = A + C - (A * C).sqrt() * phi.cos() * 2;
                        if (dist.contains_zero()) coincident = true;
                        if ((dist - unit).contains_zero() || (dist - t).contains_zero()) induced = false;
                    }
                    if (coincident) {
                        ++report.rejected_coincident;
                        continue;
                    }
                    W6Solution s{mask_string(l.spokes, 'd', '1'), mask_string(l.rim, 'd', '1'),
                                 mask_string(l.signs, '-', '+'), c.winding, induced, {}};
                    s.placement.push_back({0, 0});
                    double theta = 0, d = std::sqrt(t.mid_d());
                    for (int i = 0; i < kRim; ++i) {
                        double r = bit(l.spokes, i) ? d : 1.0;
                        s.placement.push_back({r * std::cos(theta), r * std::sin(theta)});
                        double g = table.gamma[angle_type(l.spokes, l.rim, i)]->mid_d();
                        theta += bit(l.signs, i) ? -g : g;
                    }
                    report.raw.push_back(std::move(s));
                }
            }
        if (uncertain) continue;

        auto labeling_of = [](const W6Solution& s) {
            Labeling l{0, 0, 0};
            for (int i = 0; i < kRim; ++i) {
                l.spokes |= (s.spokes[i] == 'd') << i;
                l.rim |= (s.rim[i] == 'd') << i;
                l.signs |= (s.signs[i] == '-') << i;
            }
            return l;
        };
        std::set<int> with_mirror, without_mirror, induced_with, induced_without;
        for (const auto& s : report.raw) {
            Labeling l = labeling_of(s);
            int cm = canonical(l, true, table.degenerate);
            if (with_mirror.insert(cm).second) report.classes.push_back(s);
            without_mirror.insert(canonical(l, false, table.degenerate));
            if (s.induced) {
                induced_with.insert(cm);
                induced_without.insert(canonical(l, false, table.degenerate));
            }
        }
        report.classes_without_reflections = without_mirror.size();
        report.induced_classes = induced_with.size();
        report.induced_classes_without_reflections = induced_without.size();
        return report;
    }
    throw UncertifiedAtTolerance();
}

double W6Root::approx() const { return Rational((d2.lo + d2.hi) / 2).get_d(); }

namespace {

// Signed-angle sum of a labeling at t, in doubles; NaN outside the domain.
double closure_double(const std::array<double, 8>& gamma, const Labeling& l) {
    double sum = 0;
    for (int i = 0; i < kRim; ++i) {
        double g = gamma[angle_type(l.spokes, l.rim, i)];
        sum += bit(l.signs, i) ? -g : g;
    }
    return sum;
}

std::array<double, 8> gamma_double(double t) {
    std::array<double, 8> g;
    for (int type = 0; type < 8; ++type) {
        double a = (type & 1) ? t : 1, b = (type & 2) ? t : 1, c = (type & 4) ? t : 1;
        double cosg = (a + b - c) / (2 * std::sqrt(a * b));
        g[type] = (cosg < -1 - 1e-15 || cosg > 1 + 1e-15) ? NAN : std::acos(std::clamp(cosg, -1.0, 1.0));
    }
    return g;
}

// Certified sign of the closure residual at rational t, or 0 if undecided.
int residual_sign(const Labeling& l, int k, const Rational& t) {
    const mpfr_prec_t prec = 160;
    Interval ti(t, prec), unit(Rational(1), prec);
    Interval sum(prec);
    for (int i = 0; i < kRim; ++i) {
        int type = angle_type(l.spokes, l.rim, i);
        const Interval& A = (type & 1) ? ti : unit;
        const Interval& B = (type & 2) ? ti : unit;
        const Interval& C = (type & 4) ? ti : unit;
        Interval cosg = (A + B - C) / ((A * B).sqrt() * 2);
        if (cosg.lo_d() > 1 || cosg.hi_d() < -1) return 0;
        Interval g = cosg.acos();
        sum = bit(l.signs, i) ? sum - g : sum + g;
    }
    Interval r = sum - Interval::pi(prec) * (2L * k);
    return r.positive() ? 1 : r.negative() ? -1 : 0;
}

}  // namespace

std::vector<W6Root> w6_spectrum(const Rational& lo, const Rational& hi, const Rational& resolution, int grid) {
    std::vector<W6Root> roots;
    if (lo >= hi) return roots;
    if (resolution <= 0 || resolution >= hi - lo) throw ResolutionTooCoarse();
    if (lo < 1) throw DNotGreaterThanOne();

    std::vector<Rational> ts(grid + 1);
    std::vector<std::array<double, 8>> gam(grid + 1);
    for (int j = 0; j <= grid; ++j) {
        ts[j] = lo + (hi - lo) * Rational(j, grid);
        gam[j] = gamma_double(ts[j].get_d());
    }
    struct Found {
        RationalInterval iv;
        std::string labeling;
    };
    std::vector<Found> found;
    for (int spokes = 0; spokes < 32; ++spokes)
        for (int rim = 0; rim < 32; ++rim)
            for (int signs = 0; signs < 32; ++signs) {
                Labeling l{spokes, rim, signs};
                if (canonical(l, true, 0) != code(l)) continue;
                for (int k = -2; k <= 2; ++k) {
                    double prev = NAN;
                    for (int j = 0; j <= grid; ++j) {
                        double f = closure_double(gam[j], l) - 2 * M_PI * k;
                        if (!std::isnan(prev) && !std::isnan(f) && ((prev < 0) != (f < 0))) {
                            Rational a = ts[j - 1], b = ts[j];
                            int sa = residual_sign(l, k, a), sb = residual_sign(l, k, b);
                            if (sa != 0 && sb != 0 && sa != sb) {
                                while (b - a > resolution) {
                                    Rational m = (a + b) / 2;
                                    int sm = residual_sign(l, k, m);
                                    if (sm == 0) break;
                                    (sm == sa ? a : b) = m;
                                }
                                found.push_back({{a, b},
                                                 "spokes=" + mask_string(spokes, 'd', '1') + " rim=" +
                                                     mask_string(rim, 'd', '1') + " signs=" +
                                                     mask_string(signs, '-', '+') + " k=" + std::to_string(k)});
                            }
                        }
                        prev = f;
                    }
                }
            }
    std::sort(found.begin(), found.end(), [](const Found& a, const Found& b) { return a.iv.lo < b.iv.lo; });
    for (const auto& f : found) {
        if (!roots.empty() && f.iv.lo <= roots.back().d2.hi + resolution) {
            auto& r = roots.back();
            r.d2.lo = std::max(r.d2.lo, f.iv.lo);
            r.d2.hi = std::min(r.d2.hi, f.iv.hi);
            if (r.d2.lo > r.d2.hi) r.d2 = {std::min(r.d2.lo, r.d2.hi), std::max(r.d2.lo, r.d2.hi)};
            r.labelings.push_back(f.labeling);
        } else {
            roots.push_back({f.iv, {f.labeling}});
        }
    }
    return roots;
}

// ---------------------------------------------------------------- uniqueness

bool contains_k4(const AbstractGraph& g) {
    const std::size_t n = g.n;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            if (!g.adjacent(a, b)) continue;
            for (std::size_t c = b + 1; c < n; ++c) {
                if (!g.adjacent(a, c) || !g.adjacent(b, c)) continue;
                for (std::size_t d = c + 1; d < n; ++d)
                    if (g.adjacent(a, d) && g.adjacent(b, d) && g.adjacent(c, d)) return true;
            }
        }
    return false;
}

std::string canonical_form(const AbstractGraph& g) {
    if (g.n > 8) throw GraphError("canonical_form supports at most 8 vertices");
    std::vector<std::size_t> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string s;
        for (std::size_t i = 0; i < g.n; ++i)
            for (std::size_t j = i + 1; j < g.n; ++j) s += g.adjacent(perm[i], perm[j]) ? '1' : '0';
        if (best.empty() || s < best) best = s;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

UniquenessReport verify_w6_uniqueness() {
    constexpr std::size_t n = 6;
    std::vector<Edge> all;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) all.push_back({i, j});
    UniquenessReport report;
    std::map<std::string, AbstractGraph> classes;
    for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
        ++report.graphs_checked;
        std::vector<Edge> edges;
        for (std::size_t e = 0; e < all.size(); ++e)
            if ((mask >> e) & 1) edges.push_back(all[e]);
        AbstractGraph g(n, edges);
        if (contains_k4(g)) continue;
        if (is_k_colorable(g, 3).result != SolveStatus::NotColorable) continue;
        if (is_k_colorable(g, 4).result != SolveStatus::Colorable) continue;
        ++report.matching_labeled;
        classes.emplace(canonical_form(g), g);
    }
    for (auto& [form, g] : classes) report.classes.push_back(g);
    return report;
}

// ---------------------------------------------------------------- JSON

namespace {

nlohmann::json interval_json(const RationalInterval& iv) {
    return {{"lo", iv.lo.get_str()}, {"hi", iv.hi.get_str()}, {"approx", Rational((iv.lo + iv.hi) / 2).get_d()}};
}

nlohmann::json placement_json(const std::vector<XY>& pts) {
    nlohmann::json out = nlohmann::json::array();
    for (auto [x, y] : pts) out.push_back({x, y});
    return out;
}

}  // namespace

nlohmann::json to_json(const K4Spectrum& s) {
    nlohmann::json values = nlohmann::json::array(), sols = nlohmann::json::array();
    for (const auto& v : s.values) {
        nlohmann::json j = interval_json(v.interval);
        j["polynomial"] = v.poly.to_string();
        j["d_approx"] = std::sqrt(v.approx());
        values.push_back(j);
    }
    for (const auto& x : s.solutions)
        sols.push_back({{"assignment", x.assignment},
                        {"cayley_menger", x.cayley_menger.to_string()},
                        {"d2", interval_json(x.d2.interval)},
                        {"placement", placement_json(x.placement)}});
    return {{"values", values}, {"solutions", sols}};
}

nlohmann::json to_json(const W6Report& r) {
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& s : r.classes)
        classes.push_back({{"labeling", s.key()},
                           {"winding", s.winding},
                           {"induced", s.induced},
                           {"placement", placement_json(s.placement)}});
    return {{"raw_solutions", r.raw.size()},
            {"classes", r.classes.size()},
            {"classes_without_reflections", r.classes_without_reflections},
            {"induced_classes", r.induced_classes},
            {"induced_classes_without_reflections", r.induced_classes_without_reflections},
            {"rejected_coincident", r.rejected_coincident},
            {"solutions", classes}};
}

nlohmann::json to_json(const std::vector<W6Root>& roots) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : roots) {
        nlohmann::json j = interval_json(r.d2);
        j["d_approx"] = std::sqrt(r.approx());
        j["labelings"] = r.labelings;
        out.push_back(j);
    }
    return out;
}

}  // namespace planecolor
