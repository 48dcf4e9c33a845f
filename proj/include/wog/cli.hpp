#pragma once

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wog/classify.hpp"
#include "wog/families.hpp"
#include "wog/height.hpp"
#include "wog/io.hpp"
#include "wog/pseudoforest.hpp"

namespace wog::cli {

enum ExitCode : int { Ok = 0, Falsified = 1, UsageError = 2, Inconclusive = 3 };

/// --field beats WOG_FIELD, which beats QQ.
inline FieldChoice resolve_field(const std::string& flag)
{
    if (!flag.empty())
        return parse_field(flag);
    if (const char* env = std::getenv("WOG_FIELD"); env && *env)
        return parse_field(env);
    return FieldChoice::rationals();
}

namespace detail {

inline void write_output(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f)
        throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
    f << text;
}

inline int cmd_invariants(const std::string& path, const std::string& field_flag, const std::string& format,
                          std::ostream& out)
{
    const auto g = read_graph_file(path);
    const auto field = resolve_field(field_flag);
    const auto ideal = edge_ideal(g);
    const auto table = betti_table(ideal, field);
    const auto dim = krull_dim(ideal);
    if (format == "json") {
        json j{{"ideal", to_json(ideal)},
               {"betti", to_json(table)},
               {"depth", table.depth()},
               {"dim", dim},
               {"reg", table.reg()},
               {"pdim", table.pdim()},
               {"field", field.name()}};
        out << j.dump(2) << '\n';
    } else {
        out << "ideal: " << ideal.to_string() << '\n'
            << "field: " << field.name() << '\n'
            << table.to_text() << "depth: " << table.depth() << '\n'
            << "dim: " << dim << '\n'
            << "reg: " << table.reg() << '\n'
            << "pdim: " << table.pdim() << '\n';
    }
    return Ok;
}

inline int cmd_certify(const std::string& path, std::ostream& out)
{
    const auto g = read_graph_file(path);
    if (const auto cert = depth_zero_certificate(g))
        out << to_json(*cert).dump(2) << '\n';
    else
        out << "none\n";
    return Ok;
}

struct ConstructArgs {
    std::string family;
    std::size_t t = 0, l = 0, n = 0;
    std::uint32_t r = 0;
    std::vector<std::uint32_t> weights;
    std::optional<std::uint64_t> seed;
    std::string lift;
    std::optional<std::size_t> vertex;
    std::string field;
};

inline int cmd_construct(const ConstructArgs& a, bool have_r, std::ostream& out)
{
    auto need_r = [&] {
        if (!have_r)
            throw Error(ErrorCode::InvalidParameters, "--r is required");
    };
    std::optional<WeightedOrientedGraph> g;
    if (!a.lift.empty()) {
        if (!a.family.empty())
            throw Error(ErrorCode::InvalidParameters, "use either --family or --lift");
        need_r();
        const auto base = read_graph_file(a.lift);
        for (auto w : base.weights())
            if (w != 1)
                throw Error(ErrorCode::InvalidParameters, "--lift expects an unweighted graph (all weights 1)");
        const auto und = base.underlying();
        if (a.vertex) {
            if (*a.vertex < 1 || *a.vertex > und.num_vertices())
                throw Error(ErrorCode::InvalidParameters, "--vertex out of range");
            g = lift_graph(und, *a.vertex - 1, a.r);
        } else {
            g = lift_graph(und, a.r, resolve_field(a.field));
        }
    } else if (a.family == "G") {
        need_r();
        g = a.seed ? family_G_random(a.t, a.l, a.r, *a.seed) : family_G(a.t, a.l, a.r);
    } else if (a.family == "cycle") {
        const auto w = a.weights.empty() ? std::vector<std::uint32_t>(a.n, 1) : a.weights;
        g = cycle_naturally_oriented(a.n, w);
    } else if (a.family == "path") {
        g = path(a.n);
    } else if (a.family == "star") {
        const auto w = a.weights.empty() ? std::vector<std::uint32_t>(a.n, 1) : a.weights;
        g = star(a.n, w);
    } else if (a.family == "complete") {
        const auto w = a.weights.empty() ? std::vector<std::uint32_t>(a.n, 1) : a.weights;
        g = complete(a.n, w);
    } else if (a.family == "bipartite-cycle") {
        need_r();
        g = bipartite_cycle_with_leaves(a.n, a.r);
    } else {
        throw Error(ErrorCode::InvalidParameters,
                    "unknown family '" + a.family + "' (G, cycle, path, star, complete, bipartite-cycle)");
    }
    out << to_json(*g).dump(2) << '\n';
    return Ok;
}

struct EnumArgs {
    std::size_t n = 0;
    std::uint32_t weight_cap = 1;
    std::int64_t reg_cap = 3;
    std::string klass = "all";
    std::size_t jobs = 0;
    bool no_dedup = false;
    std::string field;
    std::string out_path;
    std::string format;
    std::string projection = "ddr";
    std::string theorem;

    EnumerationConfig config() const
    {
        EnumerationConfig c;
        c.n = n;
        c.weight_cap = weight_cap;
        c.reg_cap = reg_cap;
        c.class_filter = parse_class_filter(klass);
        c.jobs = jobs;
        c.dedup = !no_dedup;
        c.field = resolve_field(field);
        return c;
    }
};

inline int cmd_classify(const EnumArgs& a, std::ostream& out)
{
    const auto atlas = compute_atlas(a.config(), parse_projection(a.projection));
    const auto text = a.format == "csv" ? to_csv(atlas) : to_json(atlas).dump(2) + "\n";
    write_output(a.out_path, text, out);
    if (!a.out_path.empty())
        out << atlas.size() << " tuples written to " << a.out_path << '\n';
    return Ok;
}

inline int cmd_verify(const EnumArgs& a, std::ostream& out)
{
    const auto report = verify_theorem(a.theorem, a.config());
    const auto text = a.format == "json" ? to_json(report).dump(2) + "\n" : to_text(report);
    write_output(a.out_path, text, out);
    return exit_code(report.verdict);
}

inline int cmd_export_cas(const std::string& path, const std::string& field_flag, std::ostream& out)
{
    out << export_cas(edge_ideal(read_graph_file(path)), resolve_field(field_flag));
    return Ok;
}

} // namespace detail

/// Runs one subcommand; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Invariants of edge ideals of weighted oriented graphs", "wog"};
    app.require_subcommand(1);

    std::string graph_path, field, format;

    auto* inv = app.add_subcommand("invariants", "Betti table, depth, dim, reg and pdim of a graph");
    inv->add_option("graph", graph_path, "graph JSON file")->required();
    inv->add_option("--field", field, "q, gf2 or gfP (default: $WOG_FIELD or q)");
    inv->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));

    auto* cert = app.add_subcommand("certify-depth-zero", "search for a depth-zero certificate");
    cert->add_option("graph", graph_path, "graph JSON file")->required();

    detail::ConstructArgs ca;
    std::uint64_t seed = 0;
    auto* con = app.add_subcommand("construct", "build a graph family member or a weight lift");
    con->add_option("--family", ca.family, "G, cycle, path, star, complete or bipartite-cycle");
    con->add_option("--t", ca.t, "number of y vertices of G");
    con->add_option("--l", ca.l, "number of leaves of G");
    auto* r_opt = con->add_option("--r", ca.r, "regularity parameter");
    con->add_option("--n", ca.n, "vertex count");
    con->add_option("--weights", ca.weights, "vertex weights")->expected(1, -1);
    auto* seed_opt = con->add_option("--seed", seed, "random y-y orientations for G");
    con->add_option("--lift", ca.lift, "unweighted graph JSON to lift");
    con->add_option("--vertex", ca.vertex, "lift vertex (1-based); default is the regularity witness");
    con->add_option("--field", ca.field, "field for the witness search");

    detail::EnumArgs ea;
    auto add_enum_options = [&](CLI::App* sub) {
        sub->add_option("--n", ea.n, "vertex count")->required();
        sub->add_option("--weight-cap", ea.weight_cap, "maximum vertex weight")->required();
        sub->add_option("--reg-cap", ea.reg_cap, "closed forms truncated at this regularity");
        sub->add_option("--jobs", ea.jobs, "worker threads (default: available parallelism)");
        sub->add_flag("--no-dedup", ea.no_dedup, "enumerate labeled graphs instead of classes");
        sub->add_option("--field", ea.field, "q, gf2 or gfP (default: $WOG_FIELD or q)");
        sub->add_option("--out", ea.out_path, "write to a file instead of stdout");
    };
    auto* cls = app.add_subcommand("classify", "enumerate WOGs and collect invariant tuples");
    add_enum_options(cls);
    cls->add_option("--class", ea.klass, "all, tree or bipartite")
        ->check(CLI::IsMember({"all", "tree", "bipartite"}));
    cls->add_option("--projection", ea.projection, "dd, ddr or betti_size")
        ->check(CLI::IsMember({"dd", "ddr", "betti_size"}));
    cls->add_option("--format", ea.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    auto* ver = app.add_subcommand("verify", "check a classification statement under caps");
    add_enum_options(ver);
    ver->add_option("--theorem", ea.theorem, "theorem name")->required()->check(CLI::IsMember(theorem_names()));
    ver->add_option("--format", ea.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* cas = app.add_subcommand("export-cas", "Macaulay2 script of the edge ideal");
    cas->add_option("graph", graph_path, "graph JSON file")->required();
    cas->add_option("--field", field, "q, gf2 or gfP (default: $WOG_FIELD or q)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return UsageError;
    }

    try {
        if (*inv)
            return detail::cmd_invariants(graph_path, field, format, out);
        if (*cert)
            return detail::cmd_certify(graph_path, out);
        if (*con) {
            if (*seed_opt)
                ca.seed = seed;
            return detail::cmd_construct(ca, static_cast<bool>(*r_opt), out);
        }
        if (*cls)
            return detail::cmd_classify(ea, out);
        if (*ver)
            return detail::cmd_verify(ea, out);
        if (*cas)
            return detail::cmd_export_cas(graph_path, field, out);
    } catch (const Error& e) {
        err << e.what() << '\n';
        return UsageError;
    }
    return UsageError;
}

} // namespace wog::cli
