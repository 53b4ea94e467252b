#include "maghom/homology.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

namespace maghom {

const CellEntry* BigradedTable::find(int k, int l) const {
    auto it = std::lower_bound(cells.begin(), cells.end(), std::pair{l, k}, [](const CellEntry& c, std::pair<int, int> t) {
        return std::pair{c.l, c.k} < t;
    });
    if (it != cells.end() && it->k == k && it->l == l) return &*it;
    return nullptr;
}

long long BigradedTable::rank(int k, int l) const {
    const CellEntry* c = find(k, l);
    return c ? c->group.free_rank : 0;
}

bool BigradedTable::complete() const {
    return std::none_of(cells.begin(), cells.end(), [](const CellEntry& c) { return c.skipped; });
}

std::optional<std::pair<int, int>> BigradedTable::first_skipped() const {
    for (const auto& c : cells)
        if (c.skipped) return std::pair{c.k, c.l};
    return std::nullopt;
}

namespace {

struct RankInfo {
    long long rank = 0;
    std::vector<Int> torsion; // nontrivial invariant factors (Z mode only)
};

/// Rank (and in Z mode the torsion content) of the boundary MC_{k,l} -> MC_{k-1,l}.
RankInfo boundary_rank(const Graph& g, const PathBasis& rows, const PathBasis& cols, CoeffMode mode,
                       std::uint64_t p, const CellLimits& limits, const Deadline& dl) {
    RankInfo info;
    if (rows.size() == 0 || cols.size() == 0) return info;
    SparseIntMatrix d = boundary_matrix(g, rows, cols);
    switch (mode) {
    case CoeffMode::Fp:
        info.rank = rank_mod(d, p, dl);
        break;
    case CoeffMode::Q:
        info.rank = rank_over_q(d, dl);
        break;
    case CoeffMode::Z: {
        long long rq = rank_over_q(d, dl);
        SmithResult snf = smith_normal_form(d, {limits.max_dense_snf}, dl);
        if (snf.rank != rq)
            throw std::logic_error("homology: modular rank disagrees with Smith rank");
        info.rank = snf.rank;
        info.torsion = snf.nontrivial();
        break;
    }
    }
    return info;
}

void check_generator_limit(const PathBasis& b, const CellLimits& limits) {
    if (b.size() > limits.max_generators)
        throw ResourceExceeded("homology: generator count exceeds ceiling");
}

/// All cells (0..K, l) for one length, sharing bases and boundary ranks along
/// the chain MC_{*,l}.
std::vector<CellEntry> column_cells(const Graph& g, int K, int l, CoeffMode mode, std::uint64_t p,
                                    const CellLimits& limits) {
    Deadline dl(limits.cell_seconds);
    std::vector<CellEntry> out;
    int k = 0;
    try {
        PathBasis below = enumerate_paths(g, 0, l); // becomes rows of d_k
        check_generator_limit(below, limits);
        RankInfo rk; // rank of d_k : MC_k -> MC_{k-1}; zero map for k = 0
        for (k = 0; k <= K; ++k) {
            PathBasis above = enumerate_paths(g, k + 1, l);
            check_generator_limit(above, limits);
            RankInfo rk1 = boundary_rank(g, below, above, mode, p, limits, dl);
            CellEntry cell;
            cell.k = k;
            cell.l = l;
            cell.group.free_rank = static_cast<long long>(below.size()) - rk.rank - rk1.rank;
            if (mode == CoeffMode::Z) cell.group.torsion = std::move(rk1.torsion);
            out.push_back(std::move(cell));
            below = std::move(above);
            rk = std::move(rk1);
            rk.torsion.clear();
        }
    } catch (const CellTimeout&) {
        for (; k <= K; ++k) out.push_back({k, l, true, {}});
    } catch (const ResourceExceeded&) {
        for (; k <= K; ++k) out.push_back({k, l, true, {}});
    }
    return out;
}

void validate_mode(CoeffMode mode, std::uint64_t p) {
    if (mode == CoeffMode::Fp && !is_prime_u64(p))
        throw std::invalid_argument("homology: Fp mode needs a prime p");
}

} // namespace

HomologyGroup homology_at(const Graph& g, int k, int l, CoeffMode mode, std::uint64_t p,
                          const CellLimits& limits) {
    if (k < 0 || l < 0) throw std::invalid_argument("homology_at: negative bigrading");
    validate_mode(mode, p);
    Deadline dl(limits.cell_seconds);
    if (k > l) return {};
    PathBasis here = enumerate_paths(g, k, l);
    PathBasis above = enumerate_paths(g, k + 1, l);
    check_generator_limit(here, limits);
    check_generator_limit(above, limits);
    RankInfo ra;
    if (k >= 1) {
        PathBasis rows = enumerate_paths(g, k - 1, l);
        ra = boundary_rank(g, rows, here, mode, p, limits, dl);
    }
    RankInfo rb = boundary_rank(g, here, above, mode, p, limits, dl);
    HomologyGroup h;
    h.free_rank = static_cast<long long>(here.size()) - ra.rank - rb.rank;
    if (mode == CoeffMode::Z) h.torsion = std::move(rb.torsion);
    return h;
}

BigradedTable homology_table(const Graph& g, int kmax, int lmax, CoeffMode mode, std::uint64_t p,
                             const TableOptions& opt) {
    if (kmax < 0 || lmax < 0) throw std::invalid_argument("homology_table: negative bounds");
    validate_mode(mode, p);

    BigradedTable table;
    table.mode = mode;
    table.p = mode == CoeffMode::Fp ? p : 0;
    table.kmax = kmax;
    table.lmax = lmax;

    std::vector<std::vector<CellEntry>> columns(lmax + 1);
    std::atomic<int> next_l{0};
    auto worker = [&] {
        while (true) {
            int l = next_l.fetch_add(1);
            if (l > lmax) break;
            columns[l] = column_cells(g, std::min(kmax, l), l, mode, p, opt.limits);
        }
    };
    int jobs = std::max(1, opt.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (auto& col : columns)
        for (auto& cell : col) table.cells.push_back(std::move(cell));
    return table;
}

BigradedTable homology_cells(const Graph& g, const std::vector<std::pair<int, int>>& cells, CoeffMode mode,
                             std::uint64_t p, const TableOptions& opt) {
    validate_mode(mode, p);
    BigradedTable table;
    table.mode = mode;
    table.p = mode == CoeffMode::Fp ? p : 0;
    std::vector<std::pair<int, int>> want; // (l, k), sorted
    for (auto [k, l] : cells) {
        if (k < 0 || l < 0) throw std::invalid_argument("homology_cells: negative bigrading");
        want.push_back({l, k});
        table.kmax = std::max(table.kmax, k);
        table.lmax = std::max(table.lmax, l);
    }
    std::sort(want.begin(), want.end());
    want.erase(std::unique(want.begin(), want.end()), want.end());

    std::vector<CellEntry> results(want.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= want.size()) break;
            auto [l, k] = want[i];
            CellEntry cell;
            cell.k = k;
            cell.l = l;
            try {
                cell.group = homology_at(g, k, l, mode, p, opt.limits);
            } catch (const CellTimeout&) {
                cell.skipped = true;
            } catch (const ResourceExceeded&) {
                cell.skipped = true;
            }
            results[i] = std::move(cell);
        }
    };
    int jobs = std::max(1, opt.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    table.cells = std::move(results);
    return table;
}

TorsionProbe torsion_detect(const Graph& g, int k, int l, std::uint64_t p, const CellLimits& limits) {
    if (!is_prime_u64(p)) throw std::invalid_argument("torsion_detect: p must be prime");
    Deadline dl(limits.cell_seconds);
    TorsionProbe probe;
    if (k > l || k < 0 || l < 0) return probe;
    PathBasis here = enumerate_paths(g, k, l);
    PathBasis above = enumerate_paths(g, k + 1, l);
    check_generator_limit(here, limits);
    check_generator_limit(above, limits);
    long long dim = static_cast<long long>(here.size());
    if (k >= 1 && here.size() > 0) {
        PathBasis rows = enumerate_paths(g, k - 1, l);
        if (rows.size() > 0) {
            SparseIntMatrix a = boundary_matrix(g, rows, here);
            probe.dim_q -= rank_over_q(a, dl);
            probe.dim_p -= rank_mod(a, p, dl);
        }
    }
    if (above.size() > 0 && here.size() > 0) {
        SparseIntMatrix b = boundary_matrix(g, here, above);
        probe.dim_q -= rank_over_q(b, dl);
        probe.dim_p -= rank_mod(b, p, dl);
    }
    probe.dim_q += dim;
    probe.dim_p += dim;
    return probe;
}

} // namespace maghom
