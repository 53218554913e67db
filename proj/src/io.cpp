#include "surcsp/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace surcsp::io {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& object, const std::set<std::string>& allowed,
                         const std::string& path) {
    for (const auto& [key, value] : object.items())
        if (!allowed.count(key))
            throw ParseError(path + ": unknown field '" + key + "'");
}

const json& require(const json& object, const std::string& key, const std::string& path) {
    auto it = object.find(key);
    if (it == object.end()) throw ParseError(path + ": missing field '" + key + "'");
    return *it;
}

Signature parse_signature(const json& node) {
    if (!node.is_array()) throw ParseError("signature: expected an array");
    std::vector<RelationSymbol> symbols;
    for (size_t i = 0; i < node.size(); ++i) {
        const std::string path = "signature[" + std::to_string(i) + "]";
        const json& entry = node[i];
        if (!entry.is_object()) throw ParseError(path + ": expected an object");
        reject_unknown_keys(entry, {"name", "arity"}, path);
        const json& name = require(entry, "name", path);
        const json& arity = require(entry, "arity", path);
        if (!name.is_string()) throw ParseError(path + ".name: expected a string");
        if (!arity.is_number_integer() || arity.get<long long>() < 1)
            throw ParseError(path + ".arity: expected a positive integer");
        symbols.push_back({name.get<std::string>(), arity.get<int>()});
    }
    try {
        return Signature(symbols);
    } catch (const Error& e) {
        throw ParseError("signature: " + std::string(e.what()));
    }
}

Structure parse_structure(const json& node, const Signature& signature, const std::string& path,
                          bool require_positive_size) {
    if (!node.is_object()) throw ParseError(path + ": expected an object");
    reject_unknown_keys(node, {"size", "relations"}, path);
    const json& size_node = require(node, "size", path);
    if (!size_node.is_number_integer() || size_node.get<long long>() < 0)
        throw ParseError(path + ".size: expected a nonnegative integer");
    const int size = size_node.get<int>();
    if (require_positive_size && size < 1)
        throw ParseError(path + ".size: template domain must be nonempty");

    const json& relations = require(node, "relations", path);
    if (!relations.is_object()) throw ParseError(path + ".relations: expected an object");
    std::set<std::string> allowed;
    for (const auto& sym : signature.relations()) allowed.insert(sym.name);
    reject_unknown_keys(relations, allowed, path + ".relations");

    std::vector<std::vector<std::vector<int>>> tuples;
    for (const auto& sym : signature.relations()) {
        auto it = relations.find(sym.name);
        if (it == relations.end())
            throw ParseError(path + ".relations: missing relation '" + sym.name + "'");
        const json& list = *it;
        const std::string rel_path = path + ".relations." + sym.name;
        if (!list.is_array()) throw ParseError(rel_path + ": expected an array of tuples");
        std::vector<std::vector<int>> parsed;
        for (size_t t = 0; t < list.size(); ++t) {
            const std::string tuple_path = rel_path + "[" + std::to_string(t) + "]";
            const json& tuple = list[t];
            if (!tuple.is_array()) throw ParseError(tuple_path + ": expected an array");
            if (tuple.size() != static_cast<size_t>(sym.arity))
                throw ParseError(tuple_path + ": expected arity " + std::to_string(sym.arity) +
                                 ", got " + std::to_string(tuple.size()));
            std::vector<int> entries;
            for (size_t j = 0; j < tuple.size(); ++j) {
                const json& entry = tuple[j];
                if (!entry.is_number_integer())
                    throw ParseError(tuple_path + "[" + std::to_string(j) +
                                     "]: expected an integer");
                const long long v = entry.get<long long>();
                if (v < 0 || v >= size)
                    throw ParseError(tuple_path + "[" + std::to_string(j) +
                                     "] out of range: value " + std::to_string(v) +
                                     " outside [0, " + std::to_string(size) + ")");
                entries.push_back(static_cast<int>(v));
            }
            parsed.push_back(std::move(entries));
        }
        auto sorted = parsed;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw ParseError(rel_path + ": duplicate tuple");
        tuples.push_back(std::move(parsed));
    }
    try {
        return Structure(signature, size, std::move(tuples));
    } catch (const Error& e) {
        throw ParseError(path + ": " + std::string(e.what()));
    }
}

}  // namespace

Problem parse_problem(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("invalid JSON: " + std::string(e.what()));
    }
    if (!root.is_object()) throw ParseError("top level: expected an object");
    reject_unknown_keys(root, {"signature", "template", "instance", "meta"}, "top level");

    const Signature signature = parse_signature(require(root, "signature", "top level"));
    Problem problem;
    problem.templ = parse_structure(require(root, "template", "top level"), signature, "template",
                                    true);
    problem.instance = parse_structure(require(root, "instance", "top level"), signature,
                                       "instance", false);
    if (root.contains("meta")) {
        const json& meta = root["meta"];
        if (!meta.is_object()) throw ParseError("meta: expected an object");
        reject_unknown_keys(meta, {"description", "origin"}, "meta");
        ProblemMeta parsed;
        if (meta.contains("description")) {
            if (!meta["description"].is_string())
                throw ParseError("meta.description: expected a string");
            parsed.description = meta["description"].get<std::string>();
        }
        if (meta.contains("origin")) {
            if (!meta["origin"].is_string()) throw ParseError("meta.origin: expected a string");
            parsed.origin = meta["origin"].get<std::string>();
        }
        problem.meta = std::move(parsed);
    }
    return problem;
}

namespace {

json structure_to_json(const Structure& structure) {
    json relations = json::object();
    for (int r = 0; r < structure.signature().relation_count(); ++r) {
        auto sorted = structure.tuples(r);
        std::sort(sorted.begin(), sorted.end());
        relations[structure.signature().relation(r).name] = sorted;
    }
    return json{{"size", structure.size()}, {"relations", relations}};
}

}  // namespace

std::string emit_problem(const Problem& problem) {
    std::vector<RelationSymbol> symbols = problem.templ.signature().relations();
    std::vector<size_t> order(symbols.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return symbols[a].name < symbols[b].name; });

    json signature = json::array();
    for (size_t i : order)
        signature.push_back({{"name", symbols[i].name}, {"arity", symbols[i].arity}});

    json root{{"signature", signature},
              {"template", structure_to_json(problem.templ)},
              {"instance", structure_to_json(problem.instance)}};
    if (problem.meta) {
        json meta = json::object();
        if (problem.meta->description) meta["description"] = *problem.meta->description;
        if (problem.meta->origin) meta["origin"] = *problem.meta->origin;
        root["meta"] = meta;
    }
    return root.dump(2) + "\n";
}

namespace {

Problem make_problem(Structure templ, int instance_size,
                     std::vector<std::vector<std::vector<int>>> instance_tuples,
                     const std::string& origin, const std::string& description) {
    Problem problem;
    problem.instance = Structure(templ.signature(), instance_size, std::move(instance_tuples));
    problem.templ = std::move(templ);
    problem.meta = ProblemMeta{description, origin};
    return problem;
}

std::vector<std::vector<int>> path_edges(int length) {
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < length; ++i) edges.push_back({i, i + 1});
    return edges;
}

}  // namespace

std::vector<std::string> gallery_names() {
    return {"c6", "cycle:5", "c4ref", "no-rainbow", "asym-cut", "hard-ptas"};
}

Problem gallery_problem(const std::string& name) {
    if (name == "c6")
        return make_problem(templates::build_cycle(6), 7, {path_edges(6)}, "c6",
                            "hexagon template with a 7-element path instance");
    if (name.rfind("cycle:", 0) == 0) {
        int n = 0;
        try {
            size_t used = 0;
            n = std::stoi(name.substr(6), &used);
            if (used != name.size() - 6) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw InvalidArgument("gallery: malformed cycle size in '" + name + "'");
        }
        return make_problem(templates::build_cycle(n), n + 1, {path_edges(n)}, name,
                            "cycle template with a path instance one element longer");
    }
    if (name == "c4ref")
        return make_problem(templates::build_reflexive_cycle4(), 5, {path_edges(4)}, "c4ref",
                            "reflexive 4-cycle template with a 5-element path instance");
    if (name == "no-rainbow")
        return make_problem(templates::build_no_rainbow(), 3, {{{0, 1, 2}}}, "no-rainbow",
                            "no-rainbow template with a single all-distinct triple");
    if (name == "asym-cut")
        return make_problem(templates::build_asymmetric_cut(), 3,
                            {{{0, 1}, {0, 2}, {1, 2}}, {}}, "asym-cut",
                            "asymmetric-cut template with an equality triangle");
    if (name == "hard-ptas")
        return make_problem(templates::build_hard_but_ptas(), 4, {{{0, 1, 2}, {1, 2, 3}}},
                            "hard-ptas",
                            "surjectively hard but easy-without-surjectivity template");
    throw InvalidArgument("unknown gallery name '" + name + "'");
}

namespace {

json rational_to_json(const Rational& r) { return to_string(r); }

json bound_to_json(const RatioBound& bound) {
    json out{{"r_random", rational_to_json(bound.r_random)},
             {"k_max", bound.k_max},
             {"template_size", bound.template_size}};
    out["structural_factor"] =
        bound.structural_factor ? rational_to_json(*bound.structural_factor) : json(nullptr);
    out["ratio"] = bound.ratio ? rational_to_json(*bound.ratio) : json(nullptr);
    return out;
}

}  // namespace

std::string report_to_json(const SolveReport& report) {
    json out{{"assignment", report.assignment},
             {"value", report.value},
             {"mode", report.mode}};
    out["seed"] = report.seed ? json(*report.seed) : json(nullptr);
    out["guarantee"] = report.guarantee ? bound_to_json(*report.guarantee) : json(nullptr);
    if (report.choices_enumerated) out["choices_enumerated"] = *report.choices_enumerated;
    if (report.cutoff_n0) out["cutoff_n0"] = *report.cutoff_n0;
    return out.dump(2) + "\n";
}

std::string classification_to_json(const Structure& templ, const templates::BooleanClass& cls) {
    json witnesses = json::array();
    for (size_t r = 0; r < cls.witnesses.size(); ++r) {
        json entry{{"relation", templ.signature().relation(static_cast<int>(r)).name}};
        if (cls.witnesses[r]) {
            entry["positive"] = cls.witnesses[r]->positive ? json(*cls.witnesses[r]->positive)
                                                           : json(nullptr);
            entry["negative"] = cls.witnesses[r]->negative ? json(*cls.witnesses[r]->negative)
                                                           : json(nullptr);
        } else {
            entry["positive"] = nullptr;
            entry["negative"] = nullptr;
        }
        witnesses.push_back(entry);
    }
    json out{{"zero_valid", cls.zero_valid},
             {"one_valid", cls.one_valid},
             {"two_monotone", cls.two_monotone},
             {"witnesses", witnesses}};
    return out.dump(2) + "\n";
}

}  // namespace surcsp::io
