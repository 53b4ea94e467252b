#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "maghom/common.hpp"
#include "maghom/graph.hpp"
#include "maghom/linalg.hpp"
#include "maghom/magchain.hpp"

namespace maghom {

enum class CoeffMode { Z, Q, Fp };

/// Finitely generated abelian group: Z^free_rank plus one cyclic summand per
/// invariant factor (d_1 | d_2 | ..., each >= 2). In Q / Fp mode the torsion
/// list is empty and free_rank is the dimension.
struct HomologyGroup {
    long long free_rank = 0;
    std::vector<Int> torsion;

    bool operator==(const HomologyGroup& o) const { return free_rank == o.free_rank && torsion == o.torsion; }
};

struct CellEntry {
    int k = 0, l = 0;
    bool skipped = false;
    HomologyGroup group;
};

struct BigradedTable {
    CoeffMode mode = CoeffMode::Z;
    std::uint64_t p = 0; // set in Fp mode
    int kmax = 0, lmax = 0;
    std::vector<CellEntry> cells; // sorted by (l, k); k <= l only

    const CellEntry* find(int k, int l) const;
    /// Rank of the cell, with cells outside the stored range being zero.
    long long rank(int k, int l) const;
    bool complete() const;
    /// First skipped cell if any.
    std::optional<std::pair<int, int>> first_skipped() const;
};

struct CellLimits {
    double cell_seconds = 900.0;
    std::size_t max_generators = 20'000'000;
    std::size_t max_dense_snf = 4096;
};

struct TableOptions {
    CellLimits limits;
    int jobs = 1;
};

/// MH_{k,l}(G) in the requested coefficients. Z mode reports free rank and
/// invariant factors; Q and Fp report dimensions. Throws CellTimeout /
/// ResourceExceeded when the limits are hit.
HomologyGroup homology_at(const Graph& g, int k, int l, CoeffMode mode = CoeffMode::Z, std::uint64_t p = 0,
                          const CellLimits& limits = {});

/// All cells 0 <= k <= min(kmax, l), l <= lmax. Cells whose resource ceiling
/// is hit are marked skipped, never silently wrong. Results are independent
/// of the parallelism degree.
BigradedTable homology_table(const Graph& g, int kmax, int lmax, CoeffMode mode = CoeffMode::Z,
                             std::uint64_t p = 0, const TableOptions& opt = {});

/// Only the requested (k, l) cells.
BigradedTable homology_cells(const Graph& g, const std::vector<std::pair<int, int>>& cells,
                             CoeffMode mode = CoeffMode::Z, std::uint64_t p = 0, const TableOptions& opt = {});

/// Q-vs-Fp dimension probe at one bigrading: (dim over Q, dim over Fp).
/// A strict difference certifies p-torsion adjacent to the cell without
/// running the integer Smith form.
struct TorsionProbe {
    long long dim_q = 0;
    long long dim_p = 0;
    bool gap() const { return dim_p != dim_q; }
};
TorsionProbe torsion_detect(const Graph& g, int k, int l, std::uint64_t p, const CellLimits& limits = {});

} // namespace maghom
