#include "maghom/complexes.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "maghom/linalg.hpp"

namespace maghom {

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::vector<int>> facets) {
    if (facets.empty()) throw std::invalid_argument("complex: empty facet list");
    std::set<std::vector<int>> fs;
    for (auto f : facets) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        if (f.empty()) throw std::invalid_argument("complex: empty facet");
        for (int v : f)
            if (v < 0) throw std::invalid_argument("complex: negative vertex label");
        fs.insert(std::move(f));
    }
    // drop facets contained in another
    std::vector<std::vector<int>> maximal;
    for (const auto& f : fs) {
        bool contained = false;
        for (const auto& g : fs)
            if (f != g && std::includes(g.begin(), g.end(), f.begin(), f.end())) {
                contained = true;
                break;
            }
        if (!contained) maximal.push_back(f);
    }

    SimplicialComplex k;
    std::size_t top_dim = 0;
    for (const auto& f : maximal) top_dim = std::max(top_dim, f.size());
    k.faces_.resize(top_dim);
    std::vector<std::set<std::vector<int>>> by_dim(top_dim);
    // downward closure via subset enumeration per facet
    for (const auto& f : maximal) {
        const int m = static_cast<int>(f.size());
        for (unsigned mask = 1; mask < (1u << m); ++mask) {
            std::vector<int> face;
            for (int i = 0; i < m; ++i)
                if (mask & (1u << i)) face.push_back(f[i]);
            by_dim[face.size() - 1].insert(std::move(face));
        }
        k.pure_ = k.pure_ && f.size() == top_dim;
        k.max_label_ = std::max(k.max_label_, f.back());
    }
    for (std::size_t d = 0; d < top_dim; ++d) k.faces_[d].assign(by_dim[d].begin(), by_dim[d].end());
    k.facets_ = std::move(maximal);
    std::sort(k.facets_.begin(), k.facets_.end(),
              [](const auto& a, const auto& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
    return k;
}

bool SimplicialComplex::has_face(const std::vector<int>& sorted_face) const {
    int d = static_cast<int>(sorted_face.size()) - 1;
    if (d < 0 || d > dimension()) return false;
    return std::binary_search(faces_[d].begin(), faces_[d].end(), sorted_face);
}

SimplicialComplex single_simplex(int m) {
    if (m < 0) throw std::invalid_argument("single_simplex: negative dimension");
    std::vector<int> f(m + 1);
    for (int i = 0; i <= m; ++i) f[i] = i;
    return SimplicialComplex::from_facets({f});
}

SimplicialComplex simplex_boundary(int m) {
    if (m < 1) throw std::invalid_argument("simplex_boundary: need m >= 1");
    std::vector<std::vector<int>> facets;
    for (int skip = 0; skip <= m; ++skip) {
        std::vector<int> f;
        for (int i = 0; i <= m; ++i)
            if (i != skip) f.push_back(i);
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex rp2_minimal() {
    return SimplicialComplex::from_facets({{0, 1, 2},
                                           {0, 2, 3},
                                           {0, 3, 4},
                                           {0, 4, 5},
                                           {0, 1, 5},
                                           {1, 2, 4},
                                           {2, 3, 5},
                                           {1, 3, 4},
                                           {2, 4, 5},
                                           {1, 3, 5}});
}

int AugmentedPoset::longest_chain() const {
    std::vector<int> best(size(), 0);
    // covers are emitted with lower element indices first, so one forward
    // sweep suffices
    std::vector<std::vector<int>> below(size());
    for (auto [lo, hi] : covers) below[hi].push_back(lo);
    for (int v = 0; v < size(); ++v)
        for (int lo : below[v]) best[v] = std::max(best[v], best[lo] + 1);
    return best[top()];
}

AugmentedPoset augmented_poset(const SimplicialComplex& k) {
    AugmentedPoset p;
    p.elements.push_back({}); // empty face = bottom
    std::map<std::vector<int>, int> index;
    for (int d = 0; d <= k.dimension(); ++d)
        for (const auto& f : k.faces(d)) {
            index[f] = static_cast<int>(p.elements.size());
            p.elements.push_back(f);
        }
    p.top_adjoined = k.facets().size() > 1;

    for (int d = 0; d <= k.dimension(); ++d)
        for (const auto& f : k.faces(d)) {
            int fi = index[f];
            if (d == 0) {
                p.covers.push_back({0, fi});
            } else {
                std::vector<int> sub(f.size() - 1);
                for (std::size_t skip = 0; skip < f.size(); ++skip) {
                    std::size_t w = 0;
                    for (std::size_t i = 0; i < f.size(); ++i)
                        if (i != skip) sub[w++] = f[i];
                    p.covers.push_back({index[sub], fi});
                }
            }
        }
    if (p.top_adjoined) {
        int top = p.top();
        for (const auto& f : k.facets()) p.covers.push_back({index[f], top});
    }
    std::sort(p.covers.begin(), p.covers.end());
    return p;
}

Graph ky_graph(const SimplicialComplex& k) {
    if (!k.is_pure())
        throw std::invalid_argument("ky_graph: complex is not pure-dimensional");
    AugmentedPoset p = augmented_poset(k);
    std::vector<std::pair<int, int>> edges(p.covers.begin(), p.covers.end());
    return Graph(p.size(), std::move(edges));
}

SimplicialComplex pachner_subdivide(const SimplicialComplex& k, const std::vector<int>& facet) {
    std::vector<int> f = facet;
    std::sort(f.begin(), f.end());
    const auto& fs = k.facets();
    if (std::find(fs.begin(), fs.end(), f) == fs.end() || static_cast<int>(f.size()) != k.dimension() + 1)
        throw std::invalid_argument("pachner_subdivide: not a top-dimensional facet");
    int fresh = k.max_vertex_label() + 1;
    std::vector<std::vector<int>> out;
    for (const auto& g : fs)
        if (g != f) out.push_back(g);
    for (std::size_t skip = 0; skip < f.size(); ++skip) {
        std::vector<int> g;
        for (std::size_t i = 0; i < f.size(); ++i)
            if (i != skip) g.push_back(f[i]);
        g.push_back(fresh);
        out.push_back(std::move(g));
    }
    return SimplicialComplex::from_facets(std::move(out));
}

std::vector<HomologyGroup> complex_homology(const SimplicialComplex& k) {
    const int dim = k.dimension();

    // oriented boundary of sorted simplices; degree -1 is the empty face,
    // giving reduced homology via the augmentation
    auto boundary = [&](int d) -> SparseIntMatrix {
        if (d == 0) {
            SparseIntMatrix m(1, k.num_faces(0));
            for (int j = 0; j < m.cols; ++j) m.col_entries[j].push_back({0, 1});
            return m;
        }
        const auto& rows = k.faces(d - 1);
        const auto& cols = k.faces(d);
        SparseIntMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
        std::vector<int> sub(d);
        for (std::size_t j = 0; j < cols.size(); ++j) {
            const auto& f = cols[j];
            for (int skip = 0; skip <= d; ++skip) {
                int w = 0;
                for (int i = 0; i <= d; ++i)
                    if (i != skip) sub[w++] = f[i];
                auto it = std::lower_bound(rows.begin(), rows.end(), sub);
                m.col_entries[j].push_back(
                    {static_cast<std::int32_t>(it - rows.begin()), skip % 2 == 0 ? 1 : -1});
            }
            std::sort(m.col_entries[j].begin(), m.col_entries[j].end());
        }
        return m;
    };

    std::vector<HomologyGroup> out(dim + 1);
    SmithResult below = smith_normal_form(boundary(0)); // rank of the augmentation
    for (int d = 0; d <= dim; ++d) {
        SmithResult above = d + 1 <= dim ? smith_normal_form(boundary(d + 1)) : SmithResult{};
        out[d].free_rank = k.num_faces(d) - below.rank - above.rank;
        out[d].torsion = above.nontrivial();
        below = std::move(above);
    }
    return out;
}

} // namespace maghom
