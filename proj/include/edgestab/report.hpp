#pragma once

#include "edgestab/generators.hpp"
#include "edgestab/graph.hpp"
#include "edgestab/stability.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace edgestab {

struct InputDescriptor {
    enum class Kind { file, stdin_stream, family };

    Kind kind = Kind::stdin_stream;
    std::string path;   // file only
    std::string format; // graph6 or edgelist; empty for families
    std::optional<FamilySpec> family;
};

/// One method's upper bound on es, evaluated on the input graph.
struct BoundComparison {
    StabilityMethod method = StabilityMethod::general_bound;
    bool applicable = false;
    int value = 0;
    /// Set when an exact value is known: value >= es.
    std::optional<bool> respected;
};

struct StabilitySection {
    int value = 0;
    bool exact = false;
    StabilityMethod method = StabilityMethod::exact;
    EdgeSet witness;
    int chi_after = 0;
};

struct ReportDocument {
    std::string tool = "edgestab";
    std::string version;
    std::string command;
    InputDescriptor input;

    int order = 0;
    int size = 0;
    std::string graph6;
    int max_degree = 0;
    std::optional<int> chi;
    std::optional<EdgeClass> edge_class;
    std::optional<StabilitySection> stability;
    std::vector<BoundComparison> bounds;
    /// Output of normalize, with the replacements that produced it.
    std::optional<MitigatingSet> normalized;
    std::optional<NormalizationTrace> trace;
    /// Wall-clock seconds per phase; only filled on request so that the
    /// default output is byte-for-byte reproducible.
    std::optional<std::map<std::string, double>> timings;

    bool operator==(const ReportDocument&) const;
};

std::string version_string();

/// Order, size, graph6, max degree and the three bound entries.
ReportDocument describe_graph(const Graph& g, const InputDescriptor& input, SearchBudget& budget);

/// Fills `respected` on every applicable bound.
void compare_bounds(ReportDocument& doc, int exact_es);

void to_json(nlohmann::ordered_json& j, const ReportDocument& doc);
void from_json(const nlohmann::ordered_json& j, ReportDocument& doc);

/// Plain-text rendering used when --json is not given.
std::string render_text(const ReportDocument& doc);

} // namespace edgestab
