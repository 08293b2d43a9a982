#include "planecolor/coloring.hpp"

#include <algorithm>
#include <bit>

namespace planecolor {

AbstractGraph::AbstractGraph(std::size_t vertices, const std::vector<Edge>& edges) : n(vertices), adj(vertices) {
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n || u == v) throw ColoringError("edge endpoint out of range");
        if (adjacent(u, v)) continue;
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());
}

bool AbstractGraph::adjacent(std::size_t u, std::size_t v) const {
    return std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end();
}

std::vector<Edge> AbstractGraph::edges() const {
    std::vector<Edge> out;
    for (std::size_t u = 0; u < n; ++u)
        for (auto v : adj[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

AbstractGraph AbstractGraph::with_edge(std::size_t u, std::size_t v) const {
    auto e = edges();
    e.emplace_back(std::min(u, v), std::max(u, v));
    return AbstractGraph(n, e);
}

nlohmann::json SolveReport::to_json() const {
    nlohmann::json out;
    switch (result) {
        case SolveStatus::Colorable: out["result"] = "colorable"; break;
        case SolveStatus::NotColorable: out["result"] = "not_colorable"; break;
        case SolveStatus::BudgetExhausted: out["result"] = "budget_exhausted"; break;
    }
    out["coloring"] = coloring ? nlohmann::json(coloring->colors) : nlohmann::json::array();
    out["nodes"] = nodes;
    out["ms"] = elapsed.count();
    return out;
}

bool is_proper(const AbstractGraph& g, const std::vector<int>& colors, int k) {
    if (colors.size() != g.n) return false;
    for (int c : colors)
        if (c < 0 || c >= k) return false;
    for (std::size_t u = 0; u < g.n; ++u)
        for (auto v : g.adj[u])
            if (colors[u] == colors[v]) return false;
    return true;
}

namespace {

using Mask = std::uint64_t;

struct Budget {};

// DSATUR backtracking. Colors not fixed by the precoloring are
// interchangeable, so among colors nobody uses yet only the lowest is tried.
class Solver {
public:
    Solver(const AbstractGraph& g, int k, std::uint64_t budget)
        : g_(g), k_(k), budget_(budget), color_(g.n, -1), forbid_count_(g.n * k, 0), forbidden_(g.n, 0),
          uses_(k, 0), fixed_(k, false) {}

    void fix_color(int c) { fixed_[c] = true; }

    bool assign_initial(std::size_t v, int c) {
        if (forbidden_[v] & bit(c)) return false;
        assign(v, c);
        return true;
    }

    bool run(const std::vector<std::size_t>& seed) {
        for (auto v : seed) {
            if (color_[v] >= 0) continue;
            int c = first_candidate(v);
            if (c < 0) return false;
            // A seed vertex adjacent to every earlier seed vertex has exactly
            // one interchangeable option; otherwise fall back to search.
            if (std::popcount(candidates(v)) != 1) break;
            assign(v, c);
        }
        return search();
    }

    const std::vector<int>& colors() const { return color_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    static Mask bit(int c) { return Mask{1} << c; }
    Mask all() const { return k_ == 64 ? ~Mask{0} : (Mask{1} << k_) - 1; }

    Mask candidates(std::size_t v) const {
        Mask avail = all() & ~forbidden_[v];
        Mask out = 0;
        bool fresh_taken = false;
        for (Mask m = avail; m; m &= m - 1) {
            int c = std::countr_zero(m);
            if (!fixed_[c] && uses_[c] == 0) {
                if (fresh_taken) continue;
                fresh_taken = true;
            }
            out |= bit(c);
        }
        return out;
    }

    int first_candidate(std::size_t v) const {
        Mask m = candidates(v);
        return m ? std::countr_zero(m) : -1;
    }

    void assign(std::size_t v, int c) {
        color_[v] = c;
        ++uses_[c];
        ++assigned_;
        for (auto w : g_.adj[v])
            if (forbid_count_[w * k_ + c]++ == 0) forbidden_[w] |= bit(c);
    }

    void unassign(std::size_t v) {
        int c = color_[v];
        color_[v] = -1;
        --uses_[c];
        --assigned_;
        for (auto w : g_.adj[v])
            if (--forbid_count_[w * k_ + c] == 0) forbidden_[w] &= ~bit(c);
    }

    // Most saturated uncolored vertex; ties by uncolored degree, then index.
    std::size_t pick() const {
        std::size_t best = g_.n;
        int best_sat = -1, best_deg = -1;
        for (std::size_t v = 0; v < g_.n; ++v) {
            if (color_[v] >= 0) continue;
            int sat = std::popcount(forbidden_[v]);
            if (sat < best_sat) continue;
            int deg = 0;
            if (sat >= best_sat) {
                for (auto w : g_.adj[v])
                    if (color_[w] < 0) ++deg;
            }
            if (sat > best_sat || deg > best_deg) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    bool neighbours_alive(std::size_t v) const {
        for (auto w : g_.adj[v])
            if (color_[w] < 0 && (forbidden_[w] & all()) == all()) return false;
        return true;
    }

    bool search() {
        if (assigned_ == g_.n) return true;
        std::size_t v = pick();
        for (Mask m = candidates(v); m; m &= m - 1) {
            int c = std::countr_zero(m);
            if (budget_ && nodes_ >= budget_) throw Budget{};
            ++nodes_;
            assign(v, c);
            if (neighbours_alive(v) && search()) return true;
            unassign(v);
        }
        return false;
    }

    const AbstractGraph& g_;
    int k_;
    std::uint64_t budget_;
    std::vector<int> color_;
    std::vector<int> forbid_count_;
    std::vector<Mask> forbidden_;
    std::vector<int> uses_;
    std::vector<bool> fixed_;
    std::size_t assigned_ = 0;
    std::uint64_t nodes_ = 0;
};

}  // namespace

SolveReport is_k_colorable(const AbstractGraph& g, int k, const Precolor& precolor, SolveOptions options) {
    if (k < 1 || k > 64) throw ColoringError("k must lie in 1..64");
    for (const auto& [v, c] : precolor) {
        if (v >= g.n) throw InvalidPrecolor("precolored vertex " + std::to_string(v) + " does not exist");
        if (c < 0 || c >= k) throw InvalidPrecolor("precolor " + std::to_string(c) + " is outside 0.." + std::to_string(k - 1));
    }
    for (const auto& [v, c] : precolor)
        for (auto w : g.adj[v])
            if (auto it = precolor.find(w); it != precolor.end() && it->second == c)
                throw InvalidPrecolor("precolor gives adjacent vertices " + std::to_string(v) + " and " +
                                      std::to_string(w) + " the same color");

    const auto start = std::chrono::steady_clock::now();
    SolveReport report;
    Solver solver(g, k, options.node_budget);
    for (const auto& [v, c] : precolor) {
        solver.fix_color(c);
        solver.assign_initial(v, c);
    }
    bool found = false;
    try {
        auto clique = greedy_clique(g);
        if (precolor.empty() && clique.size() > static_cast<std::size_t>(k))
            found = false;
        else
            found = solver.run(clique);
        report.result = found ? SolveStatus::Colorable : SolveStatus::NotColorable;
    } catch (const Budget&) {
        report.result = SolveStatus::BudgetExhausted;
    }
    report.nodes = solver.nodes();
    if (found) {
        Coloring col{solver.colors()};
        if (!is_proper(g, col.colors, k)) throw std::logic_error("solver produced an improper coloring");
        for (const auto& [v, c] : precolor)
            if (col.colors[v] != c) throw std::logic_error("solver ignored the precoloring");
        report.coloring = std::move(col);
    }
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

SolveReport is_k_colorable(const TwoDistGraph& g, int k, const Precolor& precolor, SolveOptions options) {
    return is_k_colorable(AbstractGraph::from(g), k, precolor, options);
}

std::vector<std::size_t> greedy_clique(const AbstractGraph& g) {
    std::vector<std::size_t> best;
    for (std::size_t seed = 0; seed < g.n; ++seed) {
        std::vector<std::size_t> clique{seed};
        std::vector<std::size_t> cand = g.adj[seed];
        while (!cand.empty()) {
            // Candidate with the most neighbours among the remaining candidates.
            std::size_t pick = cand.front();
            std::size_t pick_score = 0;
            for (auto c : cand) {
                std::size_t score = 0;
                for (auto d : cand)
                    if (g.adjacent(c, d)) ++score;
                if (score > pick_score) {
                    pick = c;
                    pick_score = score;
                }
            }
            clique.push_back(pick);
            std::vector<std::size_t> next;
            for (auto c : cand)
                if (c != pick && g.adjacent(c, pick)) next.push_back(c);
            cand = std::move(next);
        }
        if (clique.size() > best.size()) best = clique;
    }
    return best;
}

int greedy_color_count(const AbstractGraph& g) {
    std::vector<int> color(g.n, -1);
    std::vector<Mask> forbidden(g.n, 0);
    int used = 0;
    for (std::size_t step = 0; step < g.n; ++step) {
        std::size_t best = g.n;
        int best_sat = -1;
        for (std::size_t v = 0; v < g.n; ++v) {
            if (color[v] >= 0) continue;
            int sat = std::popcount(forbidden[v]);
            if (sat > best_sat) {
                best = v;
                best_sat = sat;
            }
        }
        int c = 0;
        while (c < 64 && (forbidden[best] & (Mask{1} << c))) ++c;
        color[best] = c;
        used = std::max(used, c + 1);
        for (auto w : g.adj[best]) forbidden[w] |= Mask{1} << c;
    }
    return used;
}

int chromatic_number(const AbstractGraph& g, SolveOptions options) {
    if (g.n == 0) return 0;
    int lower = static_cast<int>(greedy_clique(g).size());
    int upper = greedy_color_count(g);
    for (int k = lower; k < upper; ++k) {
        SolveReport r = is_k_colorable(g, k, {}, options);
        if (r.result == SolveStatus::BudgetExhausted) throw BudgetExhausted();
        if (r.colorable()) return k;
    }
    return upper;
}

int chromatic_number(const TwoDistGraph& g, SolveOptions options) {
    return chromatic_number(AbstractGraph::from(g), options);
}

bool forced_pair(const AbstractGraph& g, int k, std::size_t u, std::size_t v) {
    if (u == v || u >= g.n || v >= g.n || g.adjacent(u, v)) throw AdjacentPair();
    if (!is_k_colorable(g, k).colorable()) return false;
    return !is_k_colorable(g.with_edge(u, v), k).colorable();
}

bool forced_pair(const TwoDistGraph& g, int k, std::size_t u, std::size_t v) {
    return forced_pair(AbstractGraph::from(g), k, u, v);
}

namespace {

std::uint64_t count_from(const AbstractGraph& g, int k, std::vector<int>& colors, std::size_t v) {
    if (v == g.n) return 1;
    std::uint64_t total = 0;
    for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (auto w : g.adj[v])
            if (w < v && colors[w] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        colors[v] = c;
        total += count_from(g, k, colors, v + 1);
    }
    colors[v] = -1;
    return total;
}

}  // namespace

std::uint64_t brute_force_count(const AbstractGraph& g, int k) {
    if (g.n > 16) throw TooLarge();
    std::vector<int> colors(g.n, -1);
    return count_from(g, k, colors, 0);
}

std::uint64_t brute_force_count(const TwoDistGraph& g, int k) {
    return brute_force_count(AbstractGraph::from(g), k);
}

}  // namespace planecolor
