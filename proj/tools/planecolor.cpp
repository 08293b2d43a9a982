// planecolor: verification cases, chromatic queries, embeddings and exports.

#include "planecolor/catalog.hpp"
#include "planecolor/coloring.hpp"
#include "planecolor/embeddings.hpp"
#include "planecolor/verify.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using namespace planecolor;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kBudget = 3 };

const char* kColorNames[] = {"red", "purple", "green", "blue"};

unsigned thread_count() {
    if (const char* env = std::getenv("PLANECOLOR_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return static_cast<unsigned>(n);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::string color_name(int c) { return c >= 0 && c < 4 ? kColorNames[c] : std::to_string(c); }

int parse_color(const std::string& s) {
    for (int i = 0; i < 4; ++i)
        if (s == kColorNames[i]) return i;
    try {
        std::size_t used = 0;
        int c = std::stoi(s, &used);
        if (used == s.size() && c >= 0) return c;
    } catch (const std::exception&) {
    }
    throw CLI::ValidationError("--precolor", "unknown color '" + s + "'");
}

// Vertex indices take priority over labels.
std::size_t parse_vertex(const TwoDistGraph& g, const std::string& s) {
    try {
        std::size_t used = 0;
        unsigned long i = std::stoul(s, &used);
        if (used == s.size() && i < g.size()) return i;
    } catch (const std::exception&) {
    }
    if (auto i = g.find_label(s)) return *i;
    throw CLI::ValidationError("--precolor", "unknown vertex '" + s + "'");
}

// Accepts "7/4", "1.75" or "2".
Rational parse_rational(const std::string& text) {
    std::string s = text;
    Rational scale = 1;
    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::size_t decimals = s.size() - dot - 1;
        s.erase(dot, 1);
        for (std::size_t i = 0; i < decimals; ++i) scale *= 10;
    }
    Rational q;
    if (s.empty() || q.set_str(s, 10) != 0) throw CLI::ValidationError("--spectrum", "not a number: '" + text + "'");
    q.canonicalize();
    return q / scale;
}

Precolor parse_precolor(const TwoDistGraph& g, const std::string& spec) {
    Precolor out;
    std::stringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) throw CLI::ValidationError("--precolor", "expected vertex:color, got '" + item + "'");
        out[parse_vertex(g, item.substr(0, colon))] = parse_color(item.substr(colon + 1));
    }
    return out;
}

TwoDistGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(buf.str());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return from_json(doc);
}

// ---- verify

int cmd_verify(const std::string& id, bool include_slow, bool json) {
    std::vector<const VerificationCase*> selected;
    if (id == "all") {
        for (const auto& c : verification_cases())
            if (include_slow || !c.slow) selected.push_back(&c);
    } else {
        selected.push_back(&verification_case(id));
    }
    std::vector<CaseReport> reports(selected.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(thread_count(), selected.size()); ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next++) < selected.size();) reports[i] = run_case(*selected[i]);
        });
    for (auto& th : pool) th.join();

    bool all_pass = true;
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& r : reports) {
        all_pass = all_pass && r.pass();
        if (json) {
            doc.push_back(to_json(r));
            continue;
        }
        std::cout << (r.pass() ? "PASS " : "FAIL ") << r.id << "  " << r.description << "  (" << std::fixed
                  << std::setprecision(1) << r.ms << " ms)\n";
        for (const auto& c : r.checks)
            std::cout << "  [" << (c.pass ? "ok" : "!!") << "] " << c.name << ": expected " << c.expected
                      << ", computed " << c.computed << "\n";
    }
    if (json) std::cout << nlohmann::json{{"pass", all_pass}, {"cases", doc}}.dump(2) << "\n";
    return all_pass ? kPass : kFail;
}

// ---- chromatic

int cmd_chromatic(const std::string& path, int max_k, const std::string& precolor_spec, std::uint64_t budget,
                  bool json) {
    TwoDistGraph g = load_graph(path);
    Precolor pre = precolor_spec.empty() ? Precolor{} : parse_precolor(g, precolor_spec);
    SolveOptions opts{budget};
    nlohmann::json out{{"vertices", g.size()}, {"edges", g.edge_count()}};

    int lowest = 1;
    for (auto [v, c] : pre) lowest = std::max(lowest, c + 1);
    std::optional<SolveReport> witness;
    int chi = -1;
    std::uint64_t nodes = 0;
    if (max_k > 0) {
        SolveReport r = is_k_colorable(g, max_k, pre, opts);
        nodes = r.nodes;
        if (r.result == SolveStatus::BudgetExhausted) {
            std::cout << (json ? nlohmann::json{{"result", "budget_exhausted"}, {"nodes", nodes}}.dump(2)
                               : "budget exhausted after " + std::to_string(nodes) + " nodes")
                      << "\n";
            return kBudget;
        }
        out["k"] = max_k;
        out["result"] = r.result == SolveStatus::Colorable ? "colorable" : "not_colorable";
        if (r.coloring) witness = r;
    } else {
        for (int k = lowest; chi < 0; ++k) {
            SolveReport r = is_k_colorable(g, k, pre, opts);
            nodes += r.nodes;
            if (r.result == SolveStatus::BudgetExhausted) {
                std::cout << (json ? nlohmann::json{{"result", "budget_exhausted"}, {"k", k}, {"nodes", nodes}}.dump(2)
                                   : "budget exhausted at k = " + std::to_string(k))
                          << "\n";
                return kBudget;
            }
            if (r.result == SolveStatus::Colorable) {
                chi = k;
                witness = r;
            }
        }
        out["chromatic_number"] = chi;
    }
    out["nodes"] = nodes;
    if (witness) {
        nlohmann::json coloring = nlohmann::json::object();
        for (std::size_t v = 0; v < g.size(); ++v) coloring[g.labels[v]] = color_name(witness->coloring->colors[v]);
        out["coloring"] = coloring;
    }
    if (json) {
        std::cout << out.dump(2) << "\n";
    } else {
        if (max_k > 0) std::cout << out["k"] << "-coloring: " << out["result"].get<std::string>() << "\n";
        else std::cout << "chromatic number: " << chi << (pre.empty() ? "" : " (with precoloring)") << "\n";
        if (witness) {
            std::cout << "coloring:";
            for (std::size_t v = 0; v < g.size(); ++v)
                std::cout << " " << g.labels[v] << "=" << color_name(witness->coloring->colors[v]);
            std::cout << "\n";
        }
    }
    return kPass;
}

// ---- embed

int cmd_embed(const std::string& tmpl, const std::string& d2_text, const std::vector<std::string>& spectrum,
              bool spectrum_set, bool json) {
    if (tmpl == "k4") {
        auto s = k4_spectrum();
        if (json) {
            std::cout << to_json(s).dump(2) << "\n";
        } else {
            std::cout << "d^2 values admitting a planar K4 labeling:\n";
            for (const auto& v : s.values)
                std::cout << "  d^2 ~ " << std::setprecision(15) << v.approx() << "  d ~ " << std::sqrt(v.approx())
                          << "  root of " << v.poly.to_string() << "\n";
        }
        return kPass;
    }
    if (spectrum_set) {
        if (spectrum.size() != 2) throw CLI::ValidationError("--spectrum", "w6 needs a search interval: lo hi");
        auto roots = w6_spectrum(parse_rational(spectrum[0]), parse_rational(spectrum[1]));
        if (json) {
            std::cout << to_json(roots).dump(2) << "\n";
        } else {
            for (const auto& r : roots)
                std::cout << "d^2 ~ " << std::setprecision(15) << r.approx() << "  d ~ " << std::sqrt(r.approx())
                          << "  (" << r.labelings.size() << " labelings, e.g. " << r.labelings.front() << ")\n";
        }
        return kPass;
    }
    if (d2_text.empty()) throw CLI::ValidationError("--d2", "w6 needs --d2 or --spectrum");
    auto d2 = Tower::standard()->parse(d2_text);
    auto r = w6_embeddings(d2);
    if (json) {
        std::cout << to_json(r).dump(2) << "\n";
    } else {
        std::cout << r.classes.size() << " embeddings (congruence classes, reflections identified)\n"
                  << r.classes_without_reflections << " with reflections counted separately\n"
                  << r.raw.size() << " labeled solutions\n";
        for (const auto& s : r.classes) std::cout << "  " << s.key() << (s.induced ? "" : "  (extra edges)") << "\n";
    }
    return kPass;
}

// ---- export

int cmd_export(const std::string& id, const std::string& format, const std::string& output) {
    TwoDistGraph g = catalog(id);
    std::string text = format == "dot" ? to_dot(g, id) : to_json(g).dump(2) + "\n";
    if (output.empty() || output == "-") {
        std::cout << text;
    } else {
        std::ofstream out(output);
        if (!out) throw ParseError("cannot write " + output);
        out << text;
    }
    return kPass;
}

int cmd_list() {
    for (const auto& e : catalog_entries()) std::cout << e.id << "  " << e.summary << "\n";
    std::cout << "\nverification cases:\n";
    for (const auto& c : verification_cases())
        std::cout << "  " << c.id << (c.slow ? " (slow)" : "") << "  " << c.description << "\n";
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-distance graphs in the plane: construction, coloring and realizability"};
    app.require_subcommand(1);

    std::string verify_id;
    bool include_slow = false, json = false;
    auto* verify = app.add_subcommand("verify", "Run a verification case, or all of them");
    verify->add_option("id", verify_id, "case id or 'all'")->required();
    verify->add_flag("--include-slow", include_slow, "include long-running cases in 'all'");
    verify->add_flag("--json", json, "machine-readable report");

    std::string file, precolor;
    int max_k = 0;
    std::uint64_t budget = 0;
    auto* chromatic = app.add_subcommand("chromatic", "Chromatic number or k-colorability of a graph file");
    chromatic->add_option("file", file, "graph JSON")->required();
    chromatic->add_option("--max-k", max_k, "decide k-colorability for this k only")->check(CLI::PositiveNumber);
    chromatic->add_option("--precolor", precolor, "fixed colors, e.g. 0:blue,1:blue or A:3");
    chromatic->add_option("--budget", budget, "search node budget (0: unlimited)");
    chromatic->add_flag("--json", json, "machine-readable report");

    std::string tmpl, d2;
    std::vector<std::string> spectrum;
    auto* embed = app.add_subcommand("embed", "Two-distance realizations of K4 or the wheel W6");
    embed->add_option("template", tmpl, "k4 or w6")->required()->check(CLI::IsMember({"k4", "w6"}));
    embed->add_option("--d2", d2, "squared distance, e.g. \"(1/4)*(q3*2*s2 + 2*s3 + 2)\"");
    auto* spectrum_opt = embed->add_option("--spectrum", spectrum, "scan d^2 over (lo, hi) (w6) or list all (k4)")
                             ->expected(0, 2)
                             ->allow_extra_args(false);
    embed->add_flag("--json", json, "machine-readable report");

    std::string export_id, format = "json", output;
    auto* exp = app.add_subcommand("export", "Write a catalog graph as JSON or DOT");
    exp->add_option("id", export_id, "catalog id")->required();
    exp->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
    exp->add_option("-o,--output", output, "output file (default stdout)");

    auto* list = app.add_subcommand("list", "List catalog entries and verification cases");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (verify->parsed()) return cmd_verify(verify_id, include_slow, json);
        if (chromatic->parsed()) return cmd_chromatic(file, max_k, precolor, budget, json);
        if (embed->parsed()) return cmd_embed(tmpl, d2, spectrum, spectrum_opt->count() > 0, json);
        if (exp->parsed()) return cmd_export(export_id, format, output);
        if (list->parsed()) return cmd_list();
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const BudgetExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBudget;
    } catch (const UnknownCase& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UnknownId& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
