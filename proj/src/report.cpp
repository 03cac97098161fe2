#include "edgestab/report.hpp"

#include "edgestab/io.hpp"
#include "edgestab/matching.hpp"

#include <sstream>

#ifndef EDGESTAB_VERSION
#define EDGESTAB_VERSION "0.0.0"
#endif

namespace edgestab {

using nlohmann::ordered_json;

namespace {

bool same_spec(const FamilySpec& a, const FamilySpec& b)
{
    return a.family == b.family && a.params == b.params && a.probability == b.probability && a.seed == b.seed;
}

bool same_trace(const NormalizationTrace& a, const NormalizationTrace& b)
{
    if (a.replacements.size() != b.replacements.size())
        return false;
    for (std::size_t i = 0; i < a.replacements.size(); ++i) {
        const auto& x = a.replacements[i];
        const auto& y = b.replacements[i];
        if (x.removed != y.removed || x.inserted != y.inserted || x.pivot != y.pivot || x.fan != y.fan
            || x.free_at_pivot != y.free_at_pivot || x.fan_colors != y.fan_colors)
            return false;
    }
    return true;
}

ordered_json edge_json(const Edge& e) { return ordered_json::array({e.u, e.v}); }

Edge edge_from(const ordered_json& j) { return make_edge(j.at(0).get<Vertex>(), j.at(1).get<Vertex>()); }

ordered_json edges_json(const EdgeSet& edges)
{
    auto out = ordered_json::array();
    for (const auto& e : edges)
        out.push_back(edge_json(e));
    return out;
}

EdgeSet edges_from(const ordered_json& j)
{
    EdgeSet out;
    for (const auto& item : j)
        out.push_back(edge_from(item));
    return out;
}

std::string kind_name(InputDescriptor::Kind kind)
{
    switch (kind) {
    case InputDescriptor::Kind::file: return "file";
    case InputDescriptor::Kind::stdin_stream: return "stdin";
    case InputDescriptor::Kind::family: return "family";
    }
    return "stdin";
}

InputDescriptor::Kind kind_from(const std::string& name)
{
    if (name == "file")
        return InputDescriptor::Kind::file;
    if (name == "stdin")
        return InputDescriptor::Kind::stdin_stream;
    if (name == "family")
        return InputDescriptor::Kind::family;
    throw std::invalid_argument("unknown input kind: " + name);
}

std::string class_name(EdgeClass c) { return c == EdgeClass::class1 ? "class1" : "class2"; }

EdgeClass class_from(const std::string& name)
{
    if (name == "class1")
        return EdgeClass::class1;
    if (name == "class2")
        return EdgeClass::class2;
    throw std::invalid_argument("unknown edge class: " + name);
}

template <typename T>
void put_optional(ordered_json& j, const char* key, const std::optional<T>& value)
{
    if (value)
        j[key] = *value;
    else
        j[key] = nullptr;
}

} // namespace

bool ReportDocument::operator==(const ReportDocument& o) const
{
    const auto spec_eq = [](const std::optional<FamilySpec>& a, const std::optional<FamilySpec>& b) {
        return a.has_value() == b.has_value() && (!a || same_spec(*a, *b));
    };
    const auto stab_eq = [](const std::optional<StabilitySection>& a, const std::optional<StabilitySection>& b) {
        if (a.has_value() != b.has_value())
            return false;
        return !a
            || (a->value == b->value && a->exact == b->exact && a->method == b->method && a->witness == b->witness
                && a->chi_after == b->chi_after);
    };
    const auto bounds_eq = [](const std::vector<BoundComparison>& a, const std::vector<BoundComparison>& b) {
        if (a.size() != b.size())
            return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i].method != b[i].method || a[i].applicable != b[i].applicable || a[i].value != b[i].value
                || a[i].respected != b[i].respected)
                return false;
        return true;
    };
    const auto set_eq = [](const std::optional<MitigatingSet>& a, const std::optional<MitigatingSet>& b) {
        return a.has_value() == b.has_value()
            && (!a || (a->edges == b->edges && a->chi_before == b->chi_before && a->chi_after == b->chi_after));
    };
    const auto trace_eq = [](const std::optional<NormalizationTrace>& a, const std::optional<NormalizationTrace>& b) {
        return a.has_value() == b.has_value() && (!a || same_trace(*a, *b));
    };
    return tool == o.tool && version == o.version && command == o.command && input.kind == o.input.kind
        && input.path == o.input.path && input.format == o.input.format && spec_eq(input.family, o.input.family)
        && order == o.order && size == o.size && graph6 == o.graph6 && max_degree == o.max_degree && chi == o.chi
        && edge_class == o.edge_class && stab_eq(stability, o.stability) && bounds_eq(bounds, o.bounds)
        && set_eq(normalized, o.normalized) && trace_eq(trace, o.trace) && timings == o.timings;
}

std::string version_string() { return EDGESTAB_VERSION; }

ReportDocument describe_graph(const Graph& g, const InputDescriptor& input, SearchBudget& budget)
{
    ReportDocument doc;
    doc.version = version_string();
    doc.input = input;
    doc.order = g.order();
    doc.size = g.size();
    doc.graph6 = write_graph6(g);
    doc.max_degree = g.max_degree();
    if (g.empty())
        return doc;

    const auto profile = degree_profile(g);
    const int t = profile.t(profile.delta);

    BoundComparison bipartite{StabilityMethod::bipartite_formula, is_bipartite(g), 0, std::nullopt};
    if (bipartite.applicable)
        bipartite.value = t - matching_number(core(g).graph);

    const int chi = chromatic_index(g, budget);
    BoundComparison class2{StabilityMethod::class2_bound, chi > profile.delta, 0, std::nullopt};
    if (class2.applicable)
        class2.value = class2_bound(profile);

    BoundComparison general{StabilityMethod::general_bound, true, general_bound(g), std::nullopt};
    doc.bounds = {bipartite, class2, general};
    return doc;
}

void compare_bounds(ReportDocument& doc, int exact_es)
{
    for (auto& b : doc.bounds)
        if (b.applicable)
            b.respected = exact_es <= b.value;
}

void to_json(ordered_json& j, const ReportDocument& doc)
{
    j = ordered_json::object();
    j["tool"] = doc.tool;
    j["version"] = doc.version;
    j["command"] = doc.command;

    ordered_json input = ordered_json::object();
    input["kind"] = kind_name(doc.input.kind);
    if (doc.input.kind == InputDescriptor::Kind::file)
        input["path"] = doc.input.path;
    if (!doc.input.format.empty())
        input["format"] = doc.input.format;
    if (doc.input.family) {
        const auto& spec = *doc.input.family;
        input["family"] = to_string(spec.family);
        input["params"] = spec.params;
        if (spec.family == Family::random || spec.family == Family::random_bipartite) {
            input["probability"] = spec.probability;
            input["seed"] = spec.seed;
        }
    }
    j["input"] = std::move(input);

    j["graph"] = {{"order", doc.order}, {"size", doc.size}, {"graph6", doc.graph6}, {"max_degree", doc.max_degree}};
    put_optional(j, "chi", doc.chi);
    if (doc.edge_class)
        j["class"] = class_name(*doc.edge_class);
    else
        j["class"] = nullptr;

    if (doc.stability) {
        const auto& s = *doc.stability;
        j["es"] = {{"value", s.value}, {"exact", s.exact}, {"method", to_string(s.method)},
            {"witness", edges_json(s.witness)}, {"chi_after", s.chi_after}};
    } else {
        j["es"] = nullptr;
    }

    auto bounds = ordered_json::array();
    for (const auto& b : doc.bounds) {
        ordered_json entry = {{"method", to_string(b.method)}, {"applicable", b.applicable}};
        if (b.applicable)
            entry["value"] = b.value;
        put_optional(entry, "respected", b.respected);
        bounds.push_back(std::move(entry));
    }
    j["bounds"] = std::move(bounds);

    if (doc.normalized) {
        j["normalized"] = {{"edges", edges_json(doc.normalized->edges)}, {"chi_before", doc.normalized->chi_before},
            {"chi_after", doc.normalized->chi_after}};
    }
    if (doc.trace) {
        auto steps = ordered_json::array();
        for (const auto& r : doc.trace->replacements) {
            steps.push_back({{"removed", edge_json(r.removed)}, {"inserted", edge_json(r.inserted)},
                {"pivot", r.pivot}, {"fan", r.fan}, {"free_at_pivot", r.free_at_pivot},
                {"fan_colors", r.fan_colors}});
        }
        j["trace"] = std::move(steps);
    }
    if (doc.timings)
        j["timings"] = *doc.timings;
}

void from_json(const ordered_json& j, ReportDocument& doc)
{
    doc = ReportDocument{};
    doc.tool = j.at("tool").get<std::string>();
    doc.version = j.at("version").get<std::string>();
    doc.command = j.at("command").get<std::string>();

    const auto& input = j.at("input");
    doc.input.kind = kind_from(input.at("kind").get<std::string>());
    doc.input.path = input.value("path", "");
    doc.input.format = input.value("format", "");
    if (input.contains("family")) {
        FamilySpec spec;
        spec.family = family_from_string(input.at("family").get<std::string>());
        spec.params = input.at("params").get<std::vector<int>>();
        spec.probability = input.value("probability", FamilySpec{}.probability);
        spec.seed = input.value("seed", std::uint64_t{0});
        doc.input.family = spec;
    }

    const auto& graph = j.at("graph");
    doc.order = graph.at("order").get<int>();
    doc.size = graph.at("size").get<int>();
    doc.graph6 = graph.at("graph6").get<std::string>();
    doc.max_degree = graph.at("max_degree").get<int>();
    if (!j.at("chi").is_null())
        doc.chi = j.at("chi").get<int>();
    if (!j.at("class").is_null())
        doc.edge_class = class_from(j.at("class").get<std::string>());

    if (!j.at("es").is_null()) {
        const auto& es = j.at("es");
        StabilitySection s;
        s.value = es.at("value").get<int>();
        s.exact = es.at("exact").get<bool>();
        s.method = stability_method_from_string(es.at("method").get<std::string>());
        s.witness = edges_from(es.at("witness"));
        s.chi_after = es.at("chi_after").get<int>();
        doc.stability = s;
    }

    for (const auto& entry : j.at("bounds")) {
        BoundComparison b;
        b.method = stability_method_from_string(entry.at("method").get<std::string>());
        b.applicable = entry.at("applicable").get<bool>();
        b.value = entry.value("value", 0);
        if (!entry.at("respected").is_null())
            b.respected = entry.at("respected").get<bool>();
        doc.bounds.push_back(b);
    }

    if (j.contains("normalized")) {
        const auto& n = j.at("normalized");
        doc.normalized = MitigatingSet{edges_from(n.at("edges")), n.at("chi_before").get<int>(), n.at("chi_after").get<int>()};
    }
    if (j.contains("trace")) {
        NormalizationTrace trace;
        for (const auto& step : j.at("trace")) {
            FanReplacement r;
            r.removed = edge_from(step.at("removed"));
            r.inserted = edge_from(step.at("inserted"));
            r.pivot = step.at("pivot").get<Vertex>();
            r.fan = step.at("fan").get<std::vector<Vertex>>();
            r.free_at_pivot = step.at("free_at_pivot").get<int>();
            r.fan_colors = step.at("fan_colors").get<std::vector<int>>();
            trace.replacements.push_back(std::move(r));
        }
        doc.trace = std::move(trace);
    }
    if (j.contains("timings"))
        doc.timings = j.at("timings").get<std::map<std::string, double>>();
}

std::string render_text(const ReportDocument& doc)
{
    std::ostringstream out;
    out << "graph: n=" << doc.order << " m=" << doc.size << " max_degree=" << doc.max_degree << " graph6=" << doc.graph6
        << '\n';
    if (doc.chi)
        out << "chi': " << *doc.chi << (doc.edge_class == EdgeClass::class2 ? " (class 2)" : " (class 1)") << '\n';
    if (doc.stability) {
        const auto& s = *doc.stability;
        out << (s.exact ? "es: " : "es <= ") << s.value << " (" << to_string(s.method) << ")\n";
        out << "set:";
        for (const auto& e : s.witness)
            out << ' ' << to_string(e);
        out << "\nchi' after removal: " << s.chi_after << '\n';
    }
    if (!doc.bounds.empty()) {
        out << "bounds:";
        for (const auto& b : doc.bounds) {
            if (!b.applicable)
                continue;
            out << ' ' << to_string(b.method) << '=' << b.value;
            if (b.respected)
                out << (*b.respected ? "" : " (VIOLATED)");
        }
        out << '\n';
    }
    if (doc.normalized) {
        out << "normalized set:";
        for (const auto& e : doc.normalized->edges)
            out << ' ' << to_string(e);
        out << "\nchi' " << doc.normalized->chi_before << " -> " << doc.normalized->chi_after << '\n';
    }
    if (doc.trace) {
        for (const auto& r : doc.trace->replacements) {
            out << "replace " << to_string(r.removed) << " -> " << to_string(r.inserted) << " fan";
            for (Vertex v : r.fan)
                out << ' ' << v;
            out << " colors " << r.free_at_pivot << ';';
            for (int c : r.fan_colors)
                out << ' ' << c;
            out << '\n';
        }
    }
    if (doc.timings)
        for (const auto& [phase, seconds] : *doc.timings)
            out << "time " << phase << ": " << seconds << "s\n";
    return out.str();
}

} // namespace edgestab
