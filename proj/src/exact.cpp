#include "edgestab/stability.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace edgestab {

namespace {

// Enumerates k-subsets of the candidate edges in lexicographic order of
// their edge indices, keeping only subsets whose removal leaves every degree
// at most `target` (a necessary condition for chi' <= target).
class SubsetSearch {
public:
    /// Candidates are the edges with an endpoint of degree >= min_degree.
    SubsetSearch(const Graph& g, int target, int min_degree, SearchBudget& budget)
        : g_(g)
        , budget_(budget)
        , target_(target)
        , degree_(g.degrees())
    {
        for (int i = 0; i < g.size(); ++i) {
            const Edge& e = g.edge(i);
            if (std::max(g.degree(e.u), g.degree(e.v)) >= min_degree)
                candidates_.push_back(i);
        }

        const auto m = candidates_.size();
        available_.assign(static_cast<std::size_t>(g.order()), std::vector<int>(m + 1, 0));
        for (std::size_t p = m; p-- > 0;) {
            for (auto& row : available_)
                row[p] = row[p + 1];
            const Edge& e = g.edge(candidates_[p]);
            ++available_[static_cast<std::size_t>(e.u)][p];
            ++available_[static_cast<std::size_t>(e.v)][p];
        }
    }

    std::size_t candidate_count() const { return candidates_.size(); }

    /// Visits k-subsets in order until `visit` returns true. Returns whether
    /// any visit returned true.
    bool run(int k, const std::function<bool(const EdgeSet&)>& visit)
    {
        // Counting bound: each color class has at most floor(n/2) edges.
        if (g_.size() - k > target_ * (g_.order() / 2))
            return false;
        visit_ = &visit;
        chosen_.clear();
        return descend(0, k);
    }

private:
    bool feasible(std::size_t pos, int remaining) const
    {
        int total_need = 0;
        for (Vertex v = 0; v < g_.order(); ++v) {
            const int need = degree_[static_cast<std::size_t>(v)] - target_;
            if (need <= 0)
                continue;
            if (need > remaining || need > available_[static_cast<std::size_t>(v)][pos])
                return false;
            total_need += need;
        }
        return total_need <= 2 * remaining;
    }

    bool descend(std::size_t pos, int remaining)
    {
        budget_.charge();
        if (!feasible(pos, remaining))
            return false;
        if (remaining == 0)
            return leaf();
        if (candidates_.size() - pos < static_cast<std::size_t>(remaining))
            return false;

        const Edge& e = g_.edge(candidates_[pos]);
        --degree_[static_cast<std::size_t>(e.u)];
        --degree_[static_cast<std::size_t>(e.v)];
        chosen_.push_back(e);
        const bool found = descend(pos + 1, remaining - 1);
        chosen_.pop_back();
        ++degree_[static_cast<std::size_t>(e.u)];
        ++degree_[static_cast<std::size_t>(e.v)];
        if (found)
            return true;
        return descend(pos + 1, remaining);
    }

    bool leaf()
    {
        if (!reduces())
            return false;
        return (*visit_)(chosen_);
    }

    bool reduces()
    {
        const Graph rest = remove_edges(g_, chosen_);
        if (rest.empty() || rest.max_degree() < target_)
            return true;
        if (fournier_class1(rest))
            return true;
        return k_edge_colorable(rest, target_, budget_).has_value();
    }

    const Graph& g_;
    SearchBudget& budget_;
    int target_;
    std::vector<int> degree_;
    std::vector<int> candidates_;
    std::vector<std::vector<int>> available_; // [vertex][pos]: candidates at v from pos on
    EdgeSet chosen_;
    const std::function<bool(const EdgeSet&)>* visit_ = nullptr;
};

void require_edges(const Graph& g)
{
    if (g.empty())
        throw GraphError("stability index is undefined for an edgeless graph");
}

// The index splits over components: only components attaining chi'(G) need
// edges removed, and each needs exactly its own minimum. Because the
// components occupy disjoint edge index sets, the union of their
// lexicographically first minimum sets is the first minimum set of G.
struct ComponentPlan {
    int chi = 0;
    std::vector<InducedSubgraph> critical;
};

ComponentPlan plan_components(const Graph& g, SearchBudget& budget)
{
    ComponentPlan plan;
    std::vector<std::pair<InducedSubgraph, int>> parts;
    for (const auto& comp : connected_components(g)) {
        if (comp.size() < 2)
            continue;
        auto sub = induced_subgraph(g, comp);
        const int chi = chromatic_index(sub.graph, budget);
        plan.chi = std::max(plan.chi, chi);
        parts.emplace_back(std::move(sub), chi);
    }
    for (auto& [sub, chi] : parts)
        if (chi == plan.chi)
            plan.critical.push_back(std::move(sub));
    return plan;
}

int candidate_threshold(const Graph& g, ExactOptions options)
{
    return options.prune_by_degree ? g.max_degree() - 1 : 0;
}

EdgeSet to_parent(const InducedSubgraph& sub, const EdgeSet& local)
{
    EdgeSet out;
    for (const auto& e : local)
        out.push_back(make_edge(sub.to_parent[static_cast<std::size_t>(e.u)], sub.to_parent[static_cast<std::size_t>(e.v)]));
    return out;
}

} // namespace

StabilityReport exact_es(const Graph& g, ExactOptions options, SearchBudget& budget)
{
    require_edges(g);
    const auto plan = plan_components(g, budget);
    EdgeSet witness;
    for (const auto& sub : plan.critical) {
        SubsetSearch search(sub.graph, plan.chi - 1, candidate_threshold(g, options), budget);
        EdgeSet local;
        bool found = false;
        for (int k = 1; k <= static_cast<int>(search.candidate_count()) && !found; ++k) {
            found = search.run(k, [&](const EdgeSet& set) {
                local = set;
                return true;
            });
        }
        if (!found)
            throw std::logic_error("no mitigating set among the candidate edges");
        const auto mapped = to_parent(sub, local);
        witness.insert(witness.end(), mapped.begin(), mapped.end());
    }
    std::sort(witness.begin(), witness.end());

    const Graph rest = remove_edges(g, witness);
    StabilityReport report;
    report.es = static_cast<int>(witness.size());
    report.witness = MitigatingSet{witness, plan.chi, chromatic_index(rest, budget)};
    report.method = StabilityMethod::exact;
    report.bound_value = applicable_bound(g, budget);
    return report;
}

StabilityReport exact_es(const Graph& g, ExactOptions options)
{
    SearchBudget budget;
    return exact_es(g, options, budget);
}

std::vector<EdgeSet> all_minimum_mitigating_sets(const Graph& g, ExactOptions options, SearchBudget& budget)
{
    require_edges(g);
    const auto plan = plan_components(g, budget);
    std::vector<EdgeSet> combined{EdgeSet{}};
    for (const auto& sub : plan.critical) {
        SubsetSearch search(sub.graph, plan.chi - 1, candidate_threshold(g, options), budget);
        std::vector<EdgeSet> local;
        for (int k = 1; k <= static_cast<int>(search.candidate_count()) && local.empty(); ++k) {
            search.run(k, [&](const EdgeSet& set) {
                local.push_back(to_parent(sub, set));
                return false;
            });
        }
        if (local.empty())
            throw std::logic_error("no mitigating set among the candidate edges");
        std::vector<EdgeSet> next;
        for (const auto& prefix : combined) {
            for (const auto& part : local) {
                EdgeSet merged = prefix;
                merged.insert(merged.end(), part.begin(), part.end());
                std::sort(merged.begin(), merged.end());
                next.push_back(std::move(merged));
            }
        }
        combined = std::move(next);
    }
    std::sort(combined.begin(), combined.end());
    return combined;
}

std::vector<EdgeSet> all_minimum_mitigating_sets(const Graph& g, ExactOptions options)
{
    SearchBudget budget;
    return all_minimum_mitigating_sets(g, options, budget);
}

} // namespace edgestab
