#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "maghom/common.hpp"

namespace maghom {

/// Immutable simple undirected graph on vertices 0..n-1 with precomputed
/// all-pairs extended distances (kInf between components).
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edge_list);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    Dist dist(int u, int v) const { return dist_[static_cast<std::size_t>(u) * n_ + v]; }
    bool has_edge(int u, int v) const { return dist(u, v) == 1; }
    bool connected() const;
    Dist diameter() const; // kInf if disconnected

    /// Length of a shortest cycle; kInf for forests.
    Dist girth() const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_; // sorted, u < v
    std::vector<std::vector<int>> adj_;      // sorted neighbor lists
    std::vector<Dist> dist_;                 // row-major n*n
};

/// Induced subgraph of a parent graph, identified by its vertex set.
struct SubgraphRef {
    const Graph* parent = nullptr;
    std::vector<int> vertices; // sorted, unique, subset of parent vertices

    SubgraphRef(const Graph& g, std::vector<int> verts);

    /// The induced subgraph materialized as a standalone graph; vertex i of the
    /// result is vertices[i].
    Graph induced() const;
    bool contains(int v) const;
    std::size_t local_index(int v) const; // position of v in vertices
};

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edge_list);

// Family constructors with canonical numbering:
//   cycle(n):     ring 0-1-...-(n-1)-0, n >= 3
//   path(n):      0-1-...-(n-1), n >= 1
//   complete(n):  all pairs, n >= 1
//   wheel(rim):   rim vertices 0..rim-1 in a ring, hub = rim, rim >= 3
//   tree(edges):  validated to be connected and acyclic
//   polyomino:    cells as integer grid coordinates; vertices are the grid
//                 points of the cells sorted by (x, y), edges the unit
//                 segments; cells must be edge-connected
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph wheel_graph(int rim);
Graph tree_graph(int n, const std::vector<std::pair<int, int>>& edge_list);
Graph polyomino_graph(const std::vector<std::pair<int, int>>& cells);

/// Attachment of a later glue piece to the partial gluing. Vertex attachments
/// identify piece[0] with host[0]; edge attachments also identify piece[1]
/// with host[1] and require both pairs to be edges.
struct Attachment {
    bool is_edge = false;
    std::array<int, 2> piece{-1, -1};
    std::array<int, 2> host{-1, -1};

    static Attachment vertex(int piece_v, int host_v) { return {false, {piece_v, -1}, {host_v, -1}}; }
    static Attachment edge(int pu, int pv, int hu, int hv) { return {true, {pu, pv}, {hu, hv}}; }
};

struct GlueSpec {
    std::vector<Graph> pieces;
    std::vector<Attachment> attachments; // one per piece after the first
};

struct GlueResult {
    Graph graph;
    // piece_maps[s][v] = vertex of the glued graph carrying vertex v of piece s.
    std::vector<std::vector<int>> piece_maps;
};

/// Quotient of the pieces under the identifications. Identified vertices keep
/// the lower existing index; fresh vertices of piece s are appended in order.
/// Parallel edges collapse (simple-graph invariant).
GlueResult glue(const GlueSpec& spec);

Graph cartesian_product(const Graph& g1, const Graph& g2);
/// Vertex (x1, x2) of g1 box g2 under the canonical numbering x1 * n2 + x2.
inline int product_vertex(const Graph& g2, int x1, int x2) { return x1 * g2.num_vertices() + x2; }

/// d_H(x, y) == d_G(x, y) for all x, y in H (kInf compares equal).
bool is_convex(const Graph& g, const SubgraphRef& h);

/// For each x with finite distance to the convex subgraph H, the vertex
/// pi(x) in H with d(x, h) = d(x, pi(x)) + d(pi(x), h) for every h in H.
/// Entries are -1 for vertices in components not meeting H. Returns nullopt
/// if some x has no such vertex; throws if H is not convex.
std::optional<std::vector<int>> projection(const Graph& g, const SubgraphRef& h);

struct GeodesicStats {
    std::vector<std::uint64_t> counts; // row-major n*n; pairs at distance kInf get 0
    std::uint64_t max_count = 0;       // g(G)

    std::uint64_t count(int n, int u, int v) const { return counts[static_cast<std::size_t>(u) * n + v]; }
};

/// Number of shortest x-y paths per ordered pair, and g(G) = max over pairs.
GeodesicStats geodesic_stats(const Graph& g);

} // namespace maghom
