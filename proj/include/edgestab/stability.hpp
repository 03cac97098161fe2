#pragma once

#include "edgestab/budget.hpp"
#include "edgestab/coloring.hpp"
#include "edgestab/graph.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace edgestab {

/// An edge set F of G together with the chromatic indices before and after
/// its removal. Mitigating when chi_after < chi_before.
struct MitigatingSet {
    EdgeSet edges;
    int chi_before = 0;
    int chi_after = 0;

    int size() const { return static_cast<int>(edges.size()); }
};

enum class StabilityMethod { exact, class2_bound, general_bound, bipartite_formula };

std::string to_string(StabilityMethod method);
StabilityMethod stability_method_from_string(const std::string& name);

struct StabilityReport {
    int es = 0;
    MitigatingSet witness;
    StabilityMethod method = StabilityMethod::exact;
    /// Upper bound from whichever constructive method applies to the graph.
    int bound_value = 0;
};

/// One fan replacement: `removed` = uv is swapped for `inserted` = u v_r.
struct FanReplacement {
    Edge removed;
    Edge inserted;
    Vertex pivot = 0;          // u
    std::vector<Vertex> fan;   // v_0 = v, ..., v_r
    int free_at_pivot = 0;     // the color c missing at u
    std::vector<int> fan_colors; // c_0, ..., c_{r-1}
};

struct NormalizationTrace {
    std::vector<FanReplacement> replacements;
};

struct NormalizationResult {
    MitigatingSet set;
    NormalizationTrace trace;
};

class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The normalization found a strictly smaller mitigating set, so its input
/// was not of minimum size.
class NotMinimumError : public std::runtime_error {
public:
    explicit NotMinimumError(MitigatingSet smaller)
        : std::runtime_error("input set is not a minimum mitigating set; a mitigating set of size "
              + std::to_string(smaller.size()) + " exists")
        , smaller_(std::move(smaller))
    {
    }

    const MitigatingSet& smaller() const { return smaller_; }

private:
    MitigatingSet smaller_;
};

/// max(d(u), d(v)) >= max_degree(g) - 1.
bool meets_high_degree(const Graph& g, const Edge& e);

/// chromatic_index(g - edges) < chromatic_index(g). Edges must be in g.
bool is_mitigating(const Graph& g, std::span<const Edge> edges, SearchBudget& budget);
bool is_mitigating(const Graph& g, std::span<const Edge> edges);

/// Fills chi_before/chi_after for the given edge set.
MitigatingSet evaluate_set(const Graph& g, std::span<const Edge> edges, SearchBudget& budget);

struct ExactOptions {
    /// Only consider edges meeting a vertex of degree >= max_degree-1.
    bool prune_by_degree = true;
};

/// Minimum mitigating set size by enumeration in increasing size, then in
/// canonical (lexicographic) order; the witness is the first set found.
StabilityReport exact_es(const Graph& g, ExactOptions options, SearchBudget& budget);
StabilityReport exact_es(const Graph& g, ExactOptions options = {});

/// Every mitigating set of minimum size, in canonical order.
std::vector<EdgeSet> all_minimum_mitigating_sets(const Graph& g, ExactOptions options, SearchBudget& budget);
std::vector<EdgeSet> all_minimum_mitigating_sets(const Graph& g, ExactOptions options = {});

/// Cycle-breaking inside the max-degree core; requires a Class 2 graph.
/// At most floor((t_max - 1) / 2) edges.
MitigatingSet class2_bound_set(const Graph& g, SearchBudget& budget);
MitigatingSet class2_bound_set(const Graph& g);

/// Iterative edge removal for arbitrary graphs; see general_bound_guarantee.
MitigatingSet general_bound_set(const Graph& g, SearchBudget& budget);
MitigatingSet general_bound_set(const Graph& g);

/// Exact value for bipartite graphs: t_max minus the matching number of the
/// core, with a witness built from a maximum core matching.
StabilityReport bipartite_es_set(const Graph& g, SearchBudget& budget);
StabilityReport bipartite_es_set(const Graph& g);

/// Replaces edges of a minimum mitigating set that miss every vertex of
/// degree >= max_degree-1, one fan at a time. Throws NotMinimumError when the
/// fan construction exposes a smaller mitigating set and PreconditionError
/// when the input is not mitigating.
NormalizationResult normalize_min_mitigating(const Graph& g, std::span<const Edge> edges, SearchBudget& budget);
NormalizationResult normalize_min_mitigating(const Graph& g, std::span<const Edge> edges);

struct CompleteMinusMatching {
    bool matches = false;
    int n = 0; // order is 2n+1
    int s = 0; // size of the removed matching
};

/// Recognizes K_{2n+1} minus s independent edges with 0 <= s <= n-1.
CompleteMinusMatching recognize_k2n1_minus_matching(const Graph& g);

/// Class 2 prediction for connected graphs whose core has three vertices.
/// Throws PreconditionError otherwise.
bool recognize_core3_class2(const Graph& g);

/// floor((t_max - 1) / 2).
int class2_bound(const DegreeProfile& profile);

/// t_max + floor((t_{max-1} - 1) / 2) when t_{max-1} >= 1, t_max - 1 when
/// t_{max-1} = 0 and the core has an edge, t_max otherwise.
int general_bound(const Graph& g);

/// Size guaranteed for general_bound_set: t_max when s = 0 and the core is
/// edgeless, otherwise t_max + floor((s - 1) / 2) with floor(-1/2) = -1.
int general_bound_guarantee(const Graph& g);

/// The bound of whichever result applies: bipartite formula, Class 2 bound,
/// or the general bound.
int applicable_bound(const Graph& g, SearchBudget& budget);

} // namespace edgestab
