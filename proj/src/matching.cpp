#include "edgestab/matching.hpp"

#include <algorithm>

namespace edgestab {

namespace {

class Blossom {
public:
    explicit Blossom(const Graph& g)
        : g_(g)
        , n_(static_cast<std::size_t>(g.order()))
        , match_(n_, -1)
        , parent_(n_, -1)
        , base_(n_)
        , in_tree_(n_, 0)
        , in_blossom_(n_, 0)
    {
    }

    EdgeSet run()
    {
        // Greedy start in canonical edge order.
        for (const auto& e : g_.edges()) {
            if (mate(e.u) < 0 && mate(e.v) < 0) {
                mate(e.u) = e.v;
                mate(e.v) = e.u;
            }
        }
        for (Vertex root = 0; root < g_.order(); ++root) {
            if (mate(root) >= 0)
                continue;
            const Vertex end = find_augmenting_path(root);
            // Flip the alternating path ending at `end`.
            for (Vertex v = end; v >= 0;) {
                const Vertex pv = parent_[idx(v)];
                const Vertex next = mate(pv);
                mate(v) = pv;
                mate(pv) = v;
                v = next;
            }
        }
        EdgeSet out;
        for (Vertex v = 0; v < g_.order(); ++v)
            if (mate(v) > v)
                out.push_back(Edge{v, mate(v)});
        return out;
    }

private:
    static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }
    int& mate(Vertex v) { return match_[idx(v)]; }

    Vertex lowest_common_ancestor(Vertex a, Vertex b)
    {
        std::vector<char> seen(n_, 0);
        for (;;) {
            a = base_[idx(a)];
            seen[idx(a)] = 1;
            if (mate(a) < 0)
                break;
            a = parent_[idx(mate(a))];
        }
        for (;;) {
            b = base_[idx(b)];
            if (seen[idx(b)])
                return b;
            b = parent_[idx(mate(b))];
        }
    }

    void mark_path(Vertex v, Vertex b, Vertex child)
    {
        while (base_[idx(v)] != b) {
            in_blossom_[idx(base_[idx(v)])] = 1;
            in_blossom_[idx(base_[idx(mate(v))])] = 1;
            parent_[idx(v)] = child;
            child = mate(v);
            v = parent_[idx(mate(v))];
        }
    }

    // Returns the free vertex ending an augmenting path from root, or -1.
    Vertex find_augmenting_path(Vertex root)
    {
        std::fill(in_tree_.begin(), in_tree_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), -1);
        for (std::size_t i = 0; i < n_; ++i)
            base_[i] = static_cast<Vertex>(i);
        in_tree_[idx(root)] = 1;
        std::vector<Vertex> queue{root};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Vertex v = queue[head];
            for (Vertex to : g_.neighbors(v)) {
                if (base_[idx(v)] == base_[idx(to)] || mate(v) == to)
                    continue;
                if (to == root || (mate(to) >= 0 && parent_[idx(mate(to))] >= 0)) {
                    const Vertex b = lowest_common_ancestor(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
                    mark_path(v, b, to);
                    mark_path(to, b, v);
                    for (std::size_t i = 0; i < n_; ++i) {
                        if (in_blossom_[idx(base_[i])]) {
                            base_[i] = b;
                            if (!in_tree_[i]) {
                                in_tree_[i] = 1;
                                queue.push_back(static_cast<Vertex>(i));
                            }
                        }
                    }
                } else if (parent_[idx(to)] < 0) {
                    parent_[idx(to)] = v;
                    if (mate(to) < 0)
                        return to;
                    in_tree_[idx(mate(to))] = 1;
                    queue.push_back(mate(to));
                }
            }
        }
        return -1;
    }

    const Graph& g_;
    std::size_t n_;
    std::vector<int> match_;
    std::vector<Vertex> parent_;
    std::vector<Vertex> base_;
    std::vector<char> in_tree_;
    std::vector<char> in_blossom_;
};

} // namespace

EdgeSet maximum_matching(const Graph& g)
{
    return Blossom(g).run();
}

bool is_matching(const Graph& g, std::span<const Edge> edges)
{
    std::vector<char> touched(static_cast<std::size_t>(g.order()), 0);
    for (const auto& raw : edges) {
        const Edge e = make_edge(raw.u, raw.v);
        if (!g.has_edge(e.u, e.v))
            throw GraphError("edge " + to_string(e) + " is not in the graph");
        for (Vertex x : {e.u, e.v}) {
            if (touched[static_cast<std::size_t>(x)])
                return false;
            touched[static_cast<std::size_t>(x)] = 1;
        }
    }
    return true;
}

} // namespace edgestab
