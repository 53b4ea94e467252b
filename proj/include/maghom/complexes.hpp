#pragma once

#include <vector>

#include "maghom/common.hpp"
#include "maghom/graph.hpp"
#include "maghom/homology.hpp"

namespace maghom {

/// Facet-defined simplicial complex with the full face lattice materialized.
/// Faces are sorted vertex lists, grouped by dimension and lexicographically
/// ordered within each group.
class SimplicialComplex {
public:
    static SimplicialComplex from_facets(std::vector<std::vector<int>> facets);

    int dimension() const { return static_cast<int>(faces_.size()) - 1; }
    /// Every maximal face is top-dimensional; required by the KY construction.
    bool is_pure() const { return pure_; }
    int num_vertices() const { return static_cast<int>(faces_.empty() ? 0 : faces_[0].size()); }
    int max_vertex_label() const { return max_label_; }

    const std::vector<std::vector<int>>& faces(int dim) const { return faces_[dim]; }
    int num_faces(int dim) const {
        return dim >= 0 && dim <= dimension() ? static_cast<int>(faces_[dim].size()) : 0;
    }
    const std::vector<std::vector<int>>& facets() const { return facets_; }
    bool has_face(const std::vector<int>& sorted_face) const;

private:
    std::vector<std::vector<std::vector<int>>> faces_; // [dim][i] = sorted face
    std::vector<std::vector<int>> facets_;             // maximal faces, lex order
    bool pure_ = true;
    int max_label_ = -1;
};

// Built-in complexes. The RP2 facet list is certified in-repo by
// complex_homology returning reduced H_1 = Z_2.
SimplicialComplex single_simplex(int m);
SimplicialComplex simplex_boundary(int m); // boundary of the m-simplex, an (m-1)-sphere
SimplicialComplex rp2_minimal();

/// Face poset with the empty face as bottom and a top adjoined only when the
/// complex has more than one maximal face. Element 0 is the bottom; faces
/// follow in (dimension, lex) order; the adjoined top, when present, is last.
struct AugmentedPoset {
    std::vector<std::vector<int>> elements; // element 0 = {} (bottom)
    bool top_adjoined = false;
    std::vector<std::pair<int, int>> covers; // (lower, upper)

    int size() const { return static_cast<int>(elements.size()) + (top_adjoined ? 1 : 0); }
    int bottom() const { return 0; }
    int top() const { return size() - 1; }
    /// Longest chain from bottom to top (dynamic programming; independent of
    /// any graph distance computation).
    int longest_chain() const;
};

AugmentedPoset augmented_poset(const SimplicialComplex& k);

/// Underlying graph of the Hasse diagram of the augmented face poset.
/// Requires a pure complex; vertex numbering follows AugmentedPoset order.
Graph ky_graph(const SimplicialComplex& k);

/// The 1 -> (m+1) Pachner move: replaces a facet by the cone over its
/// boundary; the new vertex takes the next free label.
SimplicialComplex pachner_subdivide(const SimplicialComplex& k, const std::vector<int>& facet);

/// Reduced simplicial homology over Z per degree 0..dim.
std::vector<HomologyGroup> complex_homology(const SimplicialComplex& k);

} // namespace maghom
