#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "maghom/common.hpp"
#include "maghom/graph.hpp"

namespace maghom {

/// Ordered generating set of MC_{k,l}(G): all (k+1)-tuples of vertices with
/// consecutive entries distinct, at finite distance, and total length l.
/// Tuples are stored flat in lexicographic order.
class PathBasis {
public:
    PathBasis(int k, int l) : k_(k), l_(l) {}

    int degree() const { return k_; }
    int length() const { return l_; }
    std::size_t size() const { return k_ >= 0 ? verts_.size() / (k_ + 1) : 0; }

    std::span<const std::int32_t> tuple(std::size_t i) const {
        return {verts_.data() + i * (k_ + 1), static_cast<std::size_t>(k_ + 1)};
    }
    /// Position of a tuple in the basis (binary search), or nullopt.
    std::optional<std::size_t> index_of(std::span<const std::int32_t> t) const;

    void push_back(std::span<const std::int32_t> t) { verts_.insert(verts_.end(), t.begin(), t.end()); }

private:
    int k_, l_;
    std::vector<std::int32_t> verts_;
};

/// Sparse integer matrix, stored column-major with rows sorted inside each
/// column. No explicit zeros, no duplicate positions.
struct SparseIntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<std::int32_t, std::int64_t>>> col_entries;

    SparseIntMatrix() = default;
    SparseIntMatrix(int r, int c) : rows(r), cols(c), col_entries(c) {}

    std::size_t nnz() const;
    bool is_zero() const { return nnz() == 0; }
    /// (row, col, value) triples sorted by (row, col).
    std::vector<std::tuple<std::int32_t, std::int32_t, std::int64_t>> triples() const;
    /// "rows cols nnz" header, then sorted "r c v" lines.
    void dump(std::ostream& os) const;
    static SparseIntMatrix parse(std::istream& is);
};

/// Product check helper for the d(circ)d = 0 property.
bool product_is_zero(const SparseIntMatrix& a, const SparseIntMatrix& b);

PathBasis enumerate_paths(const Graph& g, int k, int l);

/// Boundary MC_{k,l} -> MC_{k-1,l} in the lexicographic bases: column for
/// tuple x sums (-1)^i over interior faces that preserve the length;
/// coincident faces accumulate, zeros are dropped. k >= 1.
SparseIntMatrix boundary_matrix(const Graph& g, int k, int l);
SparseIntMatrix boundary_matrix(const Graph& g, const PathBasis& rows_basis, const PathBasis& cols_basis);

/// Exact generator counts |MC_{k,l}| for k <= kmax, l <= lmax, computed by
/// dynamic programming over (endpoint, degree, length) without materializing
/// bases. Indexed [k][l].
std::vector<std::vector<Int>> chain_ranks(const Graph& g, int kmax, int lmax);

} // namespace maghom
