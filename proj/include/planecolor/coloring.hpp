#pragma once

// Exact k-colorability by DSATUR backtracking, chromatic numbers, forced
// pairs, and a brute-force counting oracle for small graphs.

#include "planecolor/graphs.hpp"

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace planecolor {

class ColoringError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidPrecolor : public ColoringError {
public:
    using ColoringError::ColoringError;
};

class AdjacentPair : public ColoringError {
public:
    AdjacentPair() : ColoringError("forced_pair needs two distinct non-adjacent vertices") {}
};

class TooLarge : public ColoringError {
public:
    TooLarge() : ColoringError("brute-force enumeration is limited to 16 vertices") {}
};

class BudgetExhausted : public ColoringError {
public:
    BudgetExhausted() : ColoringError("search node budget exhausted") {}
};

/// Plain adjacency structure; the solver's input.
struct AbstractGraph {
    std::size_t n = 0;
    std::vector<std::vector<std::size_t>> adj;

    AbstractGraph() = default;
    AbstractGraph(std::size_t vertices, const std::vector<Edge>& edges);
    static AbstractGraph from(const TwoDistGraph& g) { return AbstractGraph(g.size(), g.edges()); }

    bool adjacent(std::size_t u, std::size_t v) const;
    std::vector<Edge> edges() const;
    AbstractGraph with_edge(std::size_t u, std::size_t v) const;
};

struct Coloring {
    std::vector<int> colors;
};

enum class SolveStatus { Colorable, NotColorable, BudgetExhausted };

struct SolveReport {
    SolveStatus result = SolveStatus::NotColorable;
    std::optional<Coloring> coloring;
    std::uint64_t nodes = 0;
    std::chrono::duration<double, std::milli> elapsed{0};

    bool colorable() const { return result == SolveStatus::Colorable; }
    nlohmann::json to_json() const;
};

/// vertex -> color.
using Precolor = std::map<std::size_t, int>;

struct SolveOptions {
    std::uint64_t node_budget = 0;  // 0: unlimited
};

bool is_proper(const AbstractGraph& g, const std::vector<int>& colors, int k);

/// Complete search. Colorable results carry a re-verified witness.
SolveReport is_k_colorable(const AbstractGraph& g, int k, const Precolor& precolor = {}, SolveOptions options = {});
SolveReport is_k_colorable(const TwoDistGraph& g, int k, const Precolor& precolor = {}, SolveOptions options = {});

/// Greedily grown clique, seeded from every vertex; the largest found.
std::vector<std::size_t> greedy_clique(const AbstractGraph& g);
/// Colors used by a DSATUR greedy pass (an upper bound on chi).
int greedy_color_count(const AbstractGraph& g);

/// Throws BudgetExhausted if a search exceeds the budget.
int chromatic_number(const AbstractGraph& g, SolveOptions options = {});
int chromatic_number(const TwoDistGraph& g, SolveOptions options = {});

/// True iff g is k-colorable and every k-coloring gives u and v the same color.
bool forced_pair(const AbstractGraph& g, int k, std::size_t u, std::size_t v);
bool forced_pair(const TwoDistGraph& g, int k, std::size_t u, std::size_t v);

/// Number of proper k-colorings, by plain enumeration. At most 16 vertices.
std::uint64_t brute_force_count(const AbstractGraph& g, int k);
std::uint64_t brute_force_count(const TwoDistGraph& g, int k);

}  // namespace planecolor
