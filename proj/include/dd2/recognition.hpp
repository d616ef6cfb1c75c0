#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <variant>

#include "dd2/graph.hpp"

namespace dd2 {

/// Outcome of DD2 recognition. A graph is DD2 iff its vertex set splits into a
/// dominating set and a disjoint 2-dominating set; equivalently, it has no
/// isolated vertex and every weak support vertex s has a neighbor that is
/// neither a leaf nor a support. `witness` is the smallest-id violator.
struct RecognitionReport {
    bool is_dd2 = false;
    std::optional<int> witness;
    bool witness_is_isolated = false;
};

/// Disjoint (dominating, 2-dominating) vertex partition.
struct DD2Pair {
    VertexSet a;  // dominating side
    VertexSet b;  // 2-dominating side
};

/// Edge subset of a parent graph over the full vertex set.
struct SpanningSubgraph {
    Graph parent;
    EdgeSet kept;

    Graph as_graph() const { return subgraph_with_edges(parent, kept); }
};

/// Non-edges whose addition makes a graph DD2.
struct EdgeAdditionPlan {
    EdgeSet additions;
};

struct Star {
    int center;
};
struct CycleC4 {
    VertexSet vertices;
};
struct CoronaSubdivision {
    VertexSet side_a;  // all of degree exactly 2
    VertexSet side_b;  // every vertex a leaf or at distance two from a leaf
};
struct NotMinimal {};

/// The only shapes a connected minimal DD2 graph can take: a star K_{1,t}
/// (t >= 2), the 4-cycle, or the subdivision of a connected corona multigraph.
using MinimalComponentKind = std::variant<Star, CycleC4, CoronaSubdivision, NotMinimal>;

namespace detail {

// Mutable edge-subset view used by recognition and the deletion greedy.
// Edges are parent-indexed; drop/restore keep degrees in sync so a full
// recognition pass costs O(n + m) without allocation.
class SubgraphView {
public:
    explicit SubgraphView(const Graph& g)
        : n_(g.vertex_count()),
          kept_(g.edges().size(), 1),
          deg_(static_cast<size_t>(n_), 0),
          inc_(static_cast<size_t>(n_)),
          pendant_count_(static_cast<size_t>(n_), 0) {
        const auto& es = g.edges();
        for (size_t i = 0; i < es.size(); ++i) {
            auto [u, v] = es[i];
            inc_[static_cast<size_t>(u)].push_back({v, static_cast<int>(i)});
            inc_[static_cast<size_t>(v)].push_back({u, static_cast<int>(i)});
            ++deg_[static_cast<size_t>(u)];
            ++deg_[static_cast<size_t>(v)];
        }
        edges_ = &es;
    }

    bool kept(int ei) const { return kept_[static_cast<size_t>(ei)] != 0; }

    void drop(int ei) {
        kept_[static_cast<size_t>(ei)] = 0;
        --deg_[static_cast<size_t>((*edges_)[static_cast<size_t>(ei)].first)];
        --deg_[static_cast<size_t>((*edges_)[static_cast<size_t>(ei)].second)];
    }

    void restore(int ei) {
        kept_[static_cast<size_t>(ei)] = 1;
        ++deg_[static_cast<size_t>((*edges_)[static_cast<size_t>(ei)].first)];
        ++deg_[static_cast<size_t>((*edges_)[static_cast<size_t>(ei)].second)];
    }

    // Smallest-id isolated vertex or weak support with no certificate
    // neighbor; -1 when the current subgraph is a spanning DD2 graph.
    int find_violator(bool* isolated_out = nullptr) {
        std::fill(pendant_count_.begin(), pendant_count_.end(), 0);
        for (int v = 0; v < n_; ++v) {
            if (deg_[static_cast<size_t>(v)] != 1) continue;
            for (auto [w, ei] : inc_[static_cast<size_t>(v)]) {
                if (kept_[static_cast<size_t>(ei)]) {
                    ++pendant_count_[static_cast<size_t>(w)];
                    break;
                }
            }
        }
        for (int v = 0; v < n_; ++v) {
            if (deg_[static_cast<size_t>(v)] == 0) {
                if (isolated_out) *isolated_out = true;
                return v;
            }
            if (pendant_count_[static_cast<size_t>(v)] != 1) continue;
            bool certified = false;
            for (auto [w, ei] : inc_[static_cast<size_t>(v)]) {
                if (!kept_[static_cast<size_t>(ei)]) continue;
                if (deg_[static_cast<size_t>(w)] != 1 &&
                    pendant_count_[static_cast<size_t>(w)] == 0) {
                    certified = true;
                    break;
                }
            }
            if (!certified) {
                if (isolated_out) *isolated_out = false;
                return v;
            }
        }
        return -1;
    }

    EdgeSet kept_edges() const {
        EdgeSet out;
        for (size_t i = 0; i < kept_.size(); ++i)
            if (kept_[i]) out.push_back((*edges_)[i]);
        return out;
    }

private:
    int n_;
    const EdgeSet* edges_;
    std::vector<char> kept_;
    std::vector<int> deg_;
    std::vector<std::vector<std::pair<int, int>>> inc_;
    std::vector<int> pendant_count_;
};

} // namespace detail

inline RecognitionReport is_dd2(const Graph& g) {
    detail::SubgraphView view(g);
    RecognitionReport r;
    bool isolated = false;
    int w = view.find_violator(&isolated);
    if (w < 0) {
        r.is_dd2 = true;
    } else {
        r.witness = w;
        r.witness_is_isolated = isolated;
    }
    return r;
}

/// True iff (V(parent), kept) has no isolated vertex and is DD2.
inline bool is_spanning_dd2(const Graph& parent, const EdgeSet& kept) {
    Graph h = subgraph_with_edges(parent, kept);
    if (h.min_degree() == 0) return false;
    return is_dd2(h).is_dd2;
}

/// Classifies one connected component of g against the minimal-DD2 shapes.
/// P3 reads both as a star and as a corona subdivision; Star wins.
inline MinimalComponentKind classify_minimal_component(const Graph& g, const VertexSet& comp) {
    if (comp.empty()) throw precondition_error("empty component");
    {
        // comp must be exactly the component of its first vertex
        std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
        std::vector<int> stack{comp.front()};
        seen[static_cast<size_t>(comp.front())] = 1;
        size_t count = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++count;
            if (!contains(comp, v))
                throw precondition_error("vertex set is not a connected component");
            for (int w : g.neighbors(v))
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    stack.push_back(w);
                }
        }
        if (count != comp.size())
            throw precondition_error("vertex set is not a connected component");
    }

    // Star K_{1,t}, t >= 2: one center adjacent to everything, rest leaves.
    if (comp.size() >= 3) {
        int center = -1;
        bool star = true;
        for (int v : comp) {
            int d = g.degree(v);
            if (d == static_cast<int>(comp.size()) - 1) {
                if (center >= 0) { star = false; break; }
                center = v;
            } else if (d != 1) {
                star = false;
                break;
            }
        }
        if (star && center >= 0) return Star{center};
    }

    if (comp.size() == 4) {
        bool all2 = true;
        for (int v : comp) all2 = all2 && g.degree(v) == 2;
        if (all2) return CycleC4{comp};
    }

    // Corona subdivision (two-sided test): 2-color the component; one side
    // must be all of degree exactly 2 and every vertex of the other side must
    // be a leaf or at distance exactly two from some leaf.
    {
        std::vector<int> color(static_cast<size_t>(g.vertex_count()), -1);
        std::vector<int> stack{comp.front()};
        color[static_cast<size_t>(comp.front())] = 0;
        bool bip = true;
        while (!stack.empty() && bip) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (color[static_cast<size_t>(w)] == -1) {
                    color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(v)];
                    stack.push_back(w);
                } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(v)]) {
                    bip = false;
                    break;
                }
            }
        }
        if (bip) {
            for (int side = 0; side <= 1; ++side) {
                VertexSet side_a, side_b;
                bool deg_ok = true;
                for (int v : comp) {
                    if (color[static_cast<size_t>(v)] == side) {
                        side_a.push_back(v);
                        if (g.degree(v) != 2) { deg_ok = false; break; }
                    } else {
                        side_b.push_back(v);
                    }
                }
                if (!deg_ok || side_a.empty()) continue;
                bool leaves_ok = true;
                for (int b : side_b) {
                    if (g.degree(b) == 1) continue;
                    bool near_leaf = false;
                    for (int a : g.neighbors(b)) {
                        for (int l : g.neighbors(a)) {
                            if (l != b && g.degree(l) == 1) { near_leaf = true; break; }
                        }
                        if (near_leaf) break;
                    }
                    if (!near_leaf) { leaves_ok = false; break; }
                }
                if (leaves_ok) return CoronaSubdivision{side_a, side_b};
            }
        }
    }

    return NotMinimal{};
}

/// Structural minimality test: the subgraph is spanning DD2 and every one of
/// its components is a star, a C4, or a corona subdivision.
inline bool is_minimal_spanning_dd2(const Graph& g, const SpanningSubgraph& h) {
    if (!(h.parent == g)) throw precondition_error("subgraph parent mismatch");
    Graph hg = h.as_graph();
    if (hg.min_degree() == 0 && hg.vertex_count() > 0) return false;
    if (!is_dd2(hg).is_dd2) return false;
    for (const auto& comp : components(hg))
        if (std::holds_alternative<NotMinimal>(classify_minimal_component(hg, comp)))
            return false;
    return true;
}

/// Definitional cross-check: spanning DD2 and no single kept edge deletable.
inline bool is_minimal_spanning_dd2_by_deletion(const Graph& g, const EdgeSet& kept) {
    if (!is_spanning_dd2(g, kept)) return false;
    Graph hg = subgraph_with_edges(g, kept);
    detail::SubgraphView view(hg);
    for (size_t i = 0; i < kept.size(); ++i) {
        view.drop(static_cast<int>(i));
        bool still = view.find_violator() < 0;
        view.restore(static_cast<int>(i));
        if (still) return false;
    }
    return true;
}

enum class DeletionOrder { lex, reverse_lex, low_degree_first, shuffled };

namespace detail {

inline uint32_t splitmix32(uint32_t& state) {
    uint32_t z = (state += 0x9e3779b9u);
    z = (z ^ (z >> 16)) * 0x21f0aaadu;
    z = (z ^ (z >> 15)) * 0x735a2d97u;
    return z ^ (z >> 15);
}

} // namespace detail

/// Edge permutation realizing a deletion-order policy; `shuffled` is a seeded
/// Fisher-Yates permutation (stable across platforms).
inline EdgeSet make_deletion_order(const Graph& g, DeletionOrder order, uint32_t seed = 0) {
    EdgeSet es = g.edges();
    switch (order) {
        case DeletionOrder::lex:
            break;
        case DeletionOrder::reverse_lex:
            std::reverse(es.begin(), es.end());
            break;
        case DeletionOrder::low_degree_first:
            std::stable_sort(es.begin(), es.end(), [&](const Edge& a, const Edge& b) {
                return g.degree(a.first) + g.degree(a.second) <
                       g.degree(b.first) + g.degree(b.second);
            });
            break;
        case DeletionOrder::shuffled: {
            uint32_t state = seed * 0x9e3779b9u + 0x7f4a7c15u;
            for (size_t i = es.size(); i > 1; --i) {
                size_t j = detail::splitmix32(state) % i;
                std::swap(es[i - 1], es[j]);
            }
            break;
        }
    }
    return es;
}

/// Greedy minimalization: repeatedly deletes, in the given order with repeated
/// passes until a fixpoint, any edge whose removal leaves a spanning DD2
/// graph. Deletability is not monotone under deletions, hence the passes.
inline SpanningSubgraph minimalize(const Graph& g, const EdgeSet& order) {
    if (!is_dd2(g).is_dd2)
        throw precondition_error("minimalize requires a DD2 input graph");
    if (order.size() != g.edges().size())
        throw precondition_error("deletion order must cover every edge exactly once");

    std::vector<int> order_idx;
    order_idx.reserve(order.size());
    std::vector<char> seen(order.size(), 0);
    for (const auto& e : order) {
        auto it = std::lower_bound(g.edges().begin(), g.edges().end(),
                                   make_edge(e.first, e.second));
        if (it == g.edges().end() || *it != make_edge(e.first, e.second))
            throw precondition_error("deletion order contains a non-edge");
        int idx = static_cast<int>(it - g.edges().begin());
        if (seen[static_cast<size_t>(idx)])
            throw precondition_error("deletion order repeats an edge");
        seen[static_cast<size_t>(idx)] = 1;
        order_idx.push_back(idx);
    }

    detail::SubgraphView view(g);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int ei : order_idx) {
            if (!view.kept(ei)) continue;
            view.drop(ei);
            if (view.find_violator() < 0) {
                changed = true;
            } else {
                view.restore(ei);
            }
        }
    }
    return SpanningSubgraph{g, view.kept_edges()};
}

inline SpanningSubgraph minimalize(const Graph& g,
                                   DeletionOrder order = DeletionOrder::lex,
                                   uint32_t seed = 0) {
    return minimalize(g, make_deletion_order(g, order, seed));
}

inline bool verify_pair(const Graph& g, const DD2Pair& p) {
    std::vector<int> side(static_cast<size_t>(g.vertex_count()), -1);
    for (int v : p.a) {
        if (v < 0 || v >= g.vertex_count() || side[static_cast<size_t>(v)] != -1) return false;
        side[static_cast<size_t>(v)] = 0;
    }
    for (int v : p.b) {
        if (v < 0 || v >= g.vertex_count() || side[static_cast<size_t>(v)] != -1) return false;
        side[static_cast<size_t>(v)] = 1;
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (side[static_cast<size_t>(v)] == -1) return false;

    for (int v : p.b) {
        bool dominated = false;
        for (int w : g.neighbors(v))
            if (side[static_cast<size_t>(w)] == 0) { dominated = true; break; }
        if (!dominated) return false;
    }
    for (int v : p.a) {
        int b_neighbors = 0;
        for (int w : g.neighbors(v))
            if (side[static_cast<size_t>(w)] == 1 && ++b_neighbors >= 2) break;
        if (b_neighbors < 2) return false;
    }
    return true;
}

/// Extracts a DD2 pair by minimalizing and reading the per-component shapes:
/// star centers dominate their leaves, C4s split along the side of their
/// minimum-id vertex, corona subdivisions along the degree-2 side. Edge
/// addition never breaks domination, so the pair is valid in g itself.
inline DD2Pair find_dd2_pair(const Graph& g) {
    SpanningSubgraph h = minimalize(g);
    Graph hg = h.as_graph();
    DD2Pair p;
    for (const auto& comp : components(hg)) {
        MinimalComponentKind kind = classify_minimal_component(hg, comp);
        if (const Star* s = std::get_if<Star>(&kind)) {
            p.a.push_back(s->center);
            for (int v : comp)
                if (v != s->center) p.b.push_back(v);
        } else if (std::get_if<CycleC4>(&kind)) {
            // 2-color from the minimum-id vertex; its side is the A side
            int root = comp.front();
            for (int v : comp) {
                int dist = (v == root) ? 0
                           : hg.has_edge(root, v) ? 1
                                                  : 2;
                (dist % 2 == 0 ? p.a : p.b).push_back(v);
            }
        } else if (const CoronaSubdivision* c = std::get_if<CoronaSubdivision>(&kind)) {
            p.a.insert(p.a.end(), c->side_a.begin(), c->side_a.end());
            p.b.insert(p.b.end(), c->side_b.begin(), c->side_b.end());
        } else {
            throw precondition_error("minimalize produced a non-minimal component");
        }
    }
    std::sort(p.a.begin(), p.a.end());
    std::sort(p.b.begin(), p.b.end());
    return p;
}

} // namespace dd2
