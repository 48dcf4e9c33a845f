#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wog/betti.hpp"
#include "wog/classify.hpp"
#include "wog/graph.hpp"
#include "wog/monomial.hpp"
#include "wog/pseudoforest.hpp"

namespace wog {

using nlohmann::json;

// ---- monomials and ideals ----

inline json to_json(const Monomial& m)
{
    return json(std::vector<Monomial::Exponent>(m.exponents().begin(), m.exponents().end()));
}

inline Monomial monomial_from_json(const json& j)
{
    try {
        return Monomial(j.get<std::vector<Monomial::Exponent>>());
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("monomial: ") + e.what());
    }
}

inline json to_json(const MonomialIdeal& ideal)
{
    json gens = json::array();
    for (const auto& g : ideal.mingens())
        gens.push_back(to_json(g));
    return {{"vars", ideal.context().names()}, {"gens", gens}};
}

inline MonomialIdeal ideal_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("vars") || !j.contains("gens"))
        throw Error(ErrorCode::ParseError, "ideal needs \"vars\" and \"gens\"");
    std::vector<std::string> vars;
    try {
        vars = j.at("vars").get<std::vector<std::string>>();
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("vars: ") + e.what());
    }
    std::vector<Monomial> gens;
    for (const auto& g : j.at("gens"))
        gens.push_back(monomial_from_json(g));
    return MonomialIdeal(RingContext(std::move(vars)), std::move(gens));
}

// ---- Betti tables ----

inline json to_json(const BettiTable& t)
{
    json entries = json::array();
    for (const auto& [key, b] : t.entries())
        entries.push_back({{"i", key.first}, {"deg", to_json(key.second)}, {"beta", b}});
    return {{"entries", entries}, {"pdim", t.pdim()}, {"reg", t.reg()}, {"depth", t.depth()}};
}

inline BettiTable betti_table_from_json(const json& j, std::size_t num_vars)
{
    BettiTable t(num_vars);
    try {
        for (const auto& e : j.at("entries"))
            t.add(e.at("i").get<std::size_t>(), monomial_from_json(e.at("deg")), e.at("beta").get<std::uint64_t>());
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("Betti table: ") + e.what());
    }
    return t;
}

// ---- graphs (1-based on disk) ----

inline json to_json(const WeightedOrientedGraph& g)
{
    json edges = json::array();
    for (const auto& e : g.edges())
        edges.push_back({{"from", e.from + 1}, {"to", e.to + 1}});
    return {{"n", g.num_vertices()}, {"weights", g.weights()}, {"edges", edges}};
}

inline WeightedOrientedGraph graph_from_json(const json& j)
{
    if (!j.is_object())
        throw Error(ErrorCode::ParseError, "graph must be a JSON object");
    for (const char* key : {"n", "weights", "edges"})
        if (!j.contains(key))
            throw Error(ErrorCode::ParseError, std::string("graph is missing \"") + key + "\"");
    try {
        const auto n = j.at("n").get<std::int64_t>();
        if (n < 1)
            throw Error(ErrorCode::InvalidGraph, "n must be positive");
        std::vector<std::uint32_t> weights;
        for (const auto& w : j.at("weights")) {
            const auto v = w.get<std::int64_t>();
            if (v < 1)
                throw Error(ErrorCode::InvalidGraph, "weights must be positive");
            weights.push_back(static_cast<std::uint32_t>(v));
        }
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_object() || !e.contains("from") || !e.contains("to"))
                throw Error(ErrorCode::ParseError, "edges must be oriented {\"from\", \"to\"} objects");
            const auto from = e.at("from").get<std::int64_t>();
            const auto to = e.at("to").get<std::int64_t>();
            if (from < 1 || to < 1 || from > n || to > n)
                throw Error(ErrorCode::InvalidGraph, "edge endpoint out of range 1.." + std::to_string(n));
            edges.push_back({static_cast<std::size_t>(from - 1), static_cast<std::size_t>(to - 1)});
        }
        return WeightedOrientedGraph(static_cast<std::size_t>(n), std::move(edges), std::move(weights));
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("graph: ") + e.what());
    }
}

inline json parse_json_text(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

inline json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str());
}

inline WeightedOrientedGraph read_graph_file(const std::string& path)
{
    return graph_from_json(read_json_file(path));
}

inline json to_json(const PseudoForestCertificate& c)
{
    json edges = json::array();
    for (const auto& e : c.chosen_in_edge)
        edges.push_back({{"from", e.from + 1}, {"to", e.to + 1}});
    return {{"chosen_in_edges", edges}};
}

// ---- atlases and reports ----

inline json to_json(const EnumerationConfig& c)
{
    return {{"n", c.n},
            {"weight_cap", c.weight_cap},
            {"reg_cap", c.reg_cap},
            {"class", to_string(c.class_filter)},
            {"dedup", c.dedup},
            {"field", c.field.name()}};
}

inline FieldChoice parse_field(const std::string& s)
{
    if (s == "q" || s == "Q" || s == "QQ" || s == "rationals")
        return FieldChoice::rationals();
    if (s == "gf2" || s == "GF2" || s == "GF(2)")
        return FieldChoice::gf2();
    if (s.size() > 2 && (s.rfind("gf", 0) == 0 || s.rfind("GF", 0) == 0)) {
        std::string digits = s.substr(2);
        if (!digits.empty() && digits.front() == '(' && digits.back() == ')')
            digits = digits.substr(1, digits.size() - 2);
        if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos && digits.size() < 10)
            return FieldChoice::prime(static_cast<std::uint32_t>(std::stoul(digits)));
    }
    throw Error(ErrorCode::ParseError, "unknown field '" + s + "' (use q, gf2 or gfP)");
}

inline EnumerationConfig config_from_json(const json& j)
{
    try {
        EnumerationConfig c;
        c.n = j.at("n").get<std::size_t>();
        c.weight_cap = j.at("weight_cap").get<std::uint32_t>();
        c.reg_cap = j.value("reg_cap", c.reg_cap);
        c.class_filter = parse_class_filter(j.value("class", std::string("all")));
        c.dedup = j.value("dedup", true);
        c.field = parse_field(j.value("field", std::string("QQ")));
        return c;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("config: ") + e.what());
    }
}

inline json to_json(const Atlas& a)
{
    json tuples = json::array();
    for (const auto& [t, e] : a.tuples())
        tuples.push_back({{"tuple", t},
                          {"witness", to_json(e.witness)},
                          {"ordinal", {e.ordinal.graph_index, e.ordinal.orientation, e.ordinal.weight_index}}});
    return {{"n", a.n()},
            {"config", to_json(a.config())},
            {"projection", to_string(a.projection())},
            {"coordinates", coordinate_names(a.projection())},
            {"graphs_seen", a.graphs_seen()},
            {"tuples", tuples}};
}

inline Atlas atlas_from_json(const json& j)
{
    try {
        Atlas a(config_from_json(j.at("config")), parse_projection(j.at("projection").get<std::string>()));
        for (const auto& t : j.at("tuples")) {
            const auto ord = t.at("ordinal").get<std::vector<std::uint64_t>>();
            if (ord.size() != 3)
                throw Error(ErrorCode::ParseError, "ordinal must have three fields");
            a.record(t.at("tuple").get<Tuple>(), graph_from_json(t.at("witness")),
                     Ordinal{static_cast<std::size_t>(ord[0]), ord[1], ord[2]});
        }
        a.set_graphs_seen(j.value("graphs_seen", std::uint64_t{0}));
        return a;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("atlas: ") + e.what());
    }
}

/// Header line of coordinate names, then one sorted tuple per line.
inline std::string to_csv(const Atlas& a)
{
    std::ostringstream os;
    const auto names = coordinate_names(a.projection());
    for (std::size_t i = 0; i < names.size(); ++i)
        os << (i ? "," : "") << names[i];
    os << '\n';
    for (const auto& [t, e] : a.tuples()) {
        for (std::size_t i = 0; i < t.size(); ++i)
            os << (i ? "," : "") << t[i];
        os << '\n';
    }
    return os.str();
}

inline json to_json(const VerificationReport& r)
{
    json j{{"theorem", r.theorem},
           {"verdict", to_string(r.verdict)},
           {"config", to_json(r.config)},
           {"graphs_checked", r.graphs_checked}};
    if (r.projection) {
        j["coordinates"] = coordinate_names(*r.projection);
        j["enumerated"] = r.enumerated;
        j["expected"] = r.expected;
        json unsound = json::array();
        for (const auto& [t, g] : r.unsound)
            unsound.push_back({{"tuple", t}, {"witness", to_json(g)}});
        j["unsound"] = unsound;
        j["unrealized_under_caps"] = r.unrealized;
        j["realized"] = r.expected.size() - r.unrealized.size();
    } else {
        j["cases"] = r.cases;
        j["mismatches"] = r.mismatches;
        json ces = json::array();
        for (const auto& c : r.counterexamples)
            ces.push_back({{"graph", to_json(c.graph)}, {"detail", c.detail}});
        j["counterexamples"] = ces;
    }
    j["truncation"] = r.truncation ? json(*r.truncation) : json(nullptr);
    j["notes"] = r.notes;
    return j;
}

inline std::string tuple_set_text(const TupleSet& s)
{
    std::string out = "{";
    bool first = true;
    for (const auto& t : s) {
        out += (first ? "" : ", ") + detail::tuple_text(t);
        first = false;
    }
    return out + "}";
}

inline std::string to_text(const VerificationReport& r)
{
    std::ostringstream os;
    os << to_string(r.verdict) << ' ' << r.theorem << " (n=" << r.config.n << ", W=" << r.config.weight_cap
       << ", class=" << to_string(r.config.class_filter) << ", field=" << r.config.field.name() << ")\n";
    os << "graphs checked: " << r.graphs_checked << '\n';
    if (r.projection) {
        os << "coordinates: ";
        const auto names = coordinate_names(*r.projection);
        for (std::size_t i = 0; i < names.size(); ++i)
            os << (i ? "," : "") << names[i];
        os << '\n';
        os << "enumerated " << r.enumerated.size() << ": " << tuple_set_text(r.enumerated) << '\n';
        os << "closed form under caps " << r.expected.size() << ": " << tuple_set_text(r.expected) << '\n';
        os << "realized " << r.expected.size() - r.unrealized.size() << "/" << r.expected.size() << " tuples\n";
        os << "soundness: " << (r.unsound.empty() ? "ok" : "VIOLATED") << '\n';
        for (const auto& [t, g] : r.unsound)
            os << "  outside closed form: " << detail::tuple_text(t) << " witness " << to_json(g).dump() << '\n';
        if (!r.unrealized.empty())
            os << "unrealized under caps (inconclusive): " << tuple_set_text(r.unrealized) << '\n';
    } else {
        os << "cases: " << r.cases << ", mismatches: " << r.mismatches << '\n';
        for (const auto& c : r.counterexamples)
            os << "  " << c.detail << ": " << to_json(c.graph).dump() << '\n';
    }
    if (r.truncation)
        os << "truncation: " << *r.truncation << '\n';
    for (const auto& note : r.notes)
        os << "note: " << note << '\n';
    return os.str();
}

// ---- computer algebra export ----

/// Macaulay2 script declaring the ring and the ideal, e.g.
///   R = QQ[x1,x2,x3];
///   I = monomialIdeal(x1*x2^2,x2*x3);
inline std::string export_cas(const MonomialIdeal& ideal, const FieldChoice& field = FieldChoice::rationals())
{
    std::ostringstream os;
    const std::string coeffs = field.is_rationals() ? "QQ" : "ZZ/" + std::to_string(field.characteristic());
    os << "R = " << coeffs << "[";
    const auto& names = ideal.context().names();
    for (std::size_t i = 0; i < names.size(); ++i)
        os << (i ? "," : "") << names[i];
    os << "];\nI = monomialIdeal(";
    for (std::size_t i = 0; i < ideal.size(); ++i)
        os << (i ? "," : "") << ideal.mingens()[i].to_string(ideal.context());
    os << ");\n";
    return os.str();
}

/// Generator tokens of an exported script, in order.
inline std::vector<std::string> parse_cas_generators(const std::string& script)
{
    const auto open = script.find("monomialIdeal(");
    if (open == std::string::npos)
        throw Error(ErrorCode::ParseError, "no monomialIdeal(...) in script");
    const auto begin = open + std::string("monomialIdeal(").size();
    const auto close = script.find(')', begin);
    if (close == std::string::npos)
        throw Error(ErrorCode::ParseError, "unterminated monomialIdeal(");
    std::vector<std::string> out;
    std::stringstream ss(script.substr(begin, close - begin));
    std::string tok;
    while (std::getline(ss, tok, ','))
        out.push_back(tok);
    return out;
}

} // namespace wog
