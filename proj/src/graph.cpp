#include "maghom/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace maghom {

Graph::Graph(int n, std::vector<std::pair<int, int>> edge_list) : n_(n) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    std::set<std::pair<int, int>> uniq;
    for (auto [u, v] : edge_list) {
        if (u == v) throw std::invalid_argument("graph: loop edge at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("graph: edge endpoint out of range");
        uniq.insert({std::min(u, v), std::max(u, v)});
    }
    edges_.assign(uniq.begin(), uniq.end());
    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());

    dist_.assign(static_cast<std::size_t>(n_) * n_, kInf);
    std::vector<int> frontier, next;
    for (int s = 0; s < n_; ++s) {
        Dist* row = dist_.data() + static_cast<std::size_t>(s) * n_;
        row[s] = 0;
        frontier.assign(1, s);
        Dist d = 0;
        while (!frontier.empty()) {
            ++d;
            next.clear();
            for (int u : frontier)
                for (int v : adj_[u])
                    if (row[v] == kInf) {
                        row[v] = d;
                        next.push_back(v);
                    }
            frontier.swap(next);
        }
    }
}

bool Graph::connected() const {
    if (n_ <= 1) return true;
    for (int v = 1; v < n_; ++v)
        if (dist(0, v) == kInf) return false;
    return true;
}

Dist Graph::diameter() const {
    Dist d = 0;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v) {
            if (dist(u, v) == kInf) return kInf;
            d = std::max(d, dist(u, v));
        }
    return d;
}

Dist Graph::girth() const {
    // BFS from each vertex; first cross/back edge closes a shortest cycle
    // through the root.
    Dist best = kInf;
    std::vector<Dist> depth(n_);
    std::vector<int> par(n_);
    for (int s = 0; s < n_; ++s) {
        std::fill(depth.begin(), depth.end(), kInf);
        depth[s] = 0;
        par[s] = -1;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj_[u]) {
                if (v == par[u]) continue;
                if (depth[v] == kInf) {
                    depth[v] = depth[u] + 1;
                    par[v] = u;
                    q.push(v);
                } else if (depth[v] >= depth[u]) {
                    best = std::min<Dist>(best, depth[u] + depth[v] + 1);
                }
            }
        }
    }
    return best;
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edge_list) {
    return Graph(n, edge_list);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return Graph(n, std::move(e));
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path: need n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Graph(n, std::move(e));
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete: need n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j});
    return Graph(n, std::move(e));
}

Graph wheel_graph(int rim) {
    if (rim < 3) throw std::invalid_argument("wheel: need rim >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < rim; ++i) {
        e.push_back({i, (i + 1) % rim});
        e.push_back({i, rim});
    }
    return Graph(rim + 1, std::move(e));
}

Graph tree_graph(int n, const std::vector<std::pair<int, int>>& edge_list) {
    Graph g(n, edge_list);
    if (g.num_edges() != n - 1 || !g.connected())
        throw std::invalid_argument("tree: edge list is not a tree");
    return g;
}

Graph polyomino_graph(const std::vector<std::pair<int, int>>& cells) {
    if (cells.empty()) throw std::invalid_argument("polyomino: no cells");
    std::set<std::pair<int, int>> cs(cells.begin(), cells.end());

    // cells must be edge-connected
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> stack{*cs.begin()};
    seen.insert(*cs.begin());
    while (!stack.empty()) {
        auto [x, y] = stack.back();
        stack.pop_back();
        for (auto [dx, dy] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
            std::pair<int, int> nb{x + dx, y + dy};
            if (cs.count(nb) && !seen.count(nb)) {
                seen.insert(nb);
                stack.push_back(nb);
            }
        }
    }
    if (seen.size() != cs.size())
        throw std::invalid_argument("polyomino: cells are not edge-connected");

    std::map<std::pair<int, int>, int> pt;
    for (auto [x, y] : cs)
        for (auto [dx, dy] : {std::pair{0, 0}, {1, 0}, {1, 1}, {0, 1}})
            pt.insert({{x + dx, y + dy}, 0});
    int id = 0;
    for (auto& [p, i] : pt) i = id++;

    std::set<std::pair<int, int>> e;
    for (auto [x, y] : cs) {
        int a = pt[{x, y}], b = pt[{x + 1, y}], c = pt[{x + 1, y + 1}], d = pt[{x, y + 1}];
        e.insert({std::min(a, b), std::max(a, b)});
        e.insert({std::min(b, c), std::max(b, c)});
        e.insert({std::min(c, d), std::max(c, d)});
        e.insert({std::min(d, a), std::max(d, a)});
    }
    return Graph(id, {e.begin(), e.end()});
}

GlueResult glue(const GlueSpec& spec) {
    if (spec.pieces.empty()) throw std::invalid_argument("glue: no pieces");
    if (spec.attachments.size() + 1 != spec.pieces.size())
        throw std::invalid_argument("glue: need one attachment per piece after the first");

    std::vector<std::vector<int>> maps(spec.pieces.size());
    std::set<std::pair<int, int>> edges;
    auto add_edges = [&](const Graph& p, const std::vector<int>& m) {
        for (auto [u, v] : p.edges()) {
            int a = m[u], b = m[v];
            edges.insert({std::min(a, b), std::max(a, b)});
        }
    };

    int next = spec.pieces[0].num_vertices();
    maps[0].resize(next);
    for (int v = 0; v < next; ++v) maps[0][v] = v;
    add_edges(spec.pieces[0], maps[0]);

    for (std::size_t s = 1; s < spec.pieces.size(); ++s) {
        const Graph& p = spec.pieces[s];
        const Attachment& at = spec.attachments[s - 1];
        auto check_piece_v = [&](int v) {
            if (v < 0 || v >= p.num_vertices())
                throw std::invalid_argument("glue: piece vertex out of range");
        };
        auto check_host_v = [&](int v) {
            if (v < 0 || v >= next) throw std::invalid_argument("glue: host vertex out of range");
        };
        std::vector<int> m(p.num_vertices(), -1);
        check_piece_v(at.piece[0]);
        check_host_v(at.host[0]);
        m[at.piece[0]] = at.host[0];
        if (at.is_edge) {
            check_piece_v(at.piece[1]);
            check_host_v(at.host[1]);
            if (!p.has_edge(at.piece[0], at.piece[1]))
                throw std::invalid_argument("glue: attachment pair is not an edge of the piece");
            std::pair<int, int> he{std::min(at.host[0], at.host[1]), std::max(at.host[0], at.host[1])};
            if (!edges.count(he))
                throw std::invalid_argument("glue: attachment pair is not an edge of the host");
            m[at.piece[1]] = at.host[1];
        }
        for (int v = 0; v < p.num_vertices(); ++v)
            if (m[v] < 0) m[v] = next++;
        maps[s] = std::move(m);
        add_edges(p, maps[s]);
    }
    return {Graph(next, {edges.begin(), edges.end()}), std::move(maps)};
}

Graph cartesian_product(const Graph& g1, const Graph& g2) {
    int n1 = g1.num_vertices(), n2 = g2.num_vertices();
    std::vector<std::pair<int, int>> e;
    for (int x = 0; x < n1; ++x)
        for (auto [u, v] : g2.edges()) e.push_back({x * n2 + u, x * n2 + v});
    for (auto [u, v] : g1.edges())
        for (int y = 0; y < n2; ++y) e.push_back({u * n2 + y, v * n2 + y});
    return Graph(n1 * n2, std::move(e));
}

SubgraphRef::SubgraphRef(const Graph& g, std::vector<int> verts) : parent(&g), vertices(std::move(verts)) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    for (int v : vertices)
        if (v < 0 || v >= g.num_vertices())
            throw std::invalid_argument("subgraph: vertex out of range");
}

bool SubgraphRef::contains(int v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

std::size_t SubgraphRef::local_index(int v) const {
    return std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin();
}

Graph SubgraphRef::induced() const {
    std::vector<std::pair<int, int>> e;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (parent->has_edge(vertices[i], vertices[j]))
                e.push_back({static_cast<int>(i), static_cast<int>(j)});
    return Graph(static_cast<int>(vertices.size()), std::move(e));
}

bool is_convex(const Graph& g, const SubgraphRef& h) {
    Graph ind = h.induced();
    for (std::size_t i = 0; i < h.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < h.vertices.size(); ++j)
            if (ind.dist(static_cast<int>(i), static_cast<int>(j)) != g.dist(h.vertices[i], h.vertices[j]))
                return false;
    return true;
}

std::optional<std::vector<int>> projection(const Graph& g, const SubgraphRef& h) {
    if (!is_convex(g, h)) throw std::invalid_argument("projection: subgraph is not convex");
    std::vector<int> pi(g.num_vertices(), -1);
    for (int x = 0; x < g.num_vertices(); ++x) {
        bool meets = false;
        for (int v : h.vertices)
            if (is_finite(g.dist(x, v))) {
                meets = true;
                break;
            }
        if (!meets) continue;
        int found = -1;
        for (int c : h.vertices) {
            bool ok = true;
            for (int v : h.vertices)
                if (g.dist(x, v) != dist_add(g.dist(x, c), g.dist(c, v))) {
                    ok = false;
                    break;
                }
            if (ok) {
                found = c;
                break;
            }
        }
        if (found < 0) return std::nullopt;
        pi[x] = found;
    }
    return pi;
}

GeodesicStats geodesic_stats(const Graph& g) {
    int n = g.num_vertices();
    GeodesicStats st;
    st.counts.assign(static_cast<std::size_t>(n) * n, 0);
    // counts along BFS layers: c(s,v) = sum of c(s,u) over neighbors u one
    // layer closer to s
    std::vector<int> order(n);
    for (int s = 0; s < n; ++s) {
        auto* row = st.counts.data() + static_cast<std::size_t>(s) * n;
        int m = 0;
        for (int v = 0; v < n; ++v)
            if (is_finite(g.dist(s, v))) order[m++] = v;
        std::sort(order.begin(), order.begin() + m,
                  [&](int a, int b) { return g.dist(s, a) < g.dist(s, b); });
        row[s] = 1;
        for (int i = 0; i < m; ++i) {
            int v = order[i];
            if (v == s) continue;
            std::uint64_t c = 0;
            for (int u : g.neighbors(v))
                if (g.dist(s, u) == g.dist(s, v) - 1) c += row[u];
            row[v] = c;
        }
    }
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) st.max_count = std::max(st.max_count, st.counts[static_cast<std::size_t>(u) * n + v]);
    return st;
}

} // namespace maghom
