#include "maghom/magchain.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>

namespace maghom {

std::optional<std::size_t> PathBasis::index_of(std::span<const std::int32_t> t) const {
    const std::size_t w = k_ + 1;
    std::size_t lo = 0, hi = size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        const auto* p = verts_.data() + mid * w;
        int cmp = 0;
        for (std::size_t i = 0; i < w; ++i) {
            if (p[i] != t[i]) {
                cmp = p[i] < t[i] ? -1 : 1;
                break;
            }
        }
        if (cmp < 0)
            lo = mid + 1;
        else if (cmp > 0)
            hi = mid;
        else
            return mid;
    }
    return std::nullopt;
}

std::size_t SparseIntMatrix::nnz() const {
    std::size_t s = 0;
    for (const auto& c : col_entries) s += c.size();
    return s;
}

std::vector<std::tuple<std::int32_t, std::int32_t, std::int64_t>> SparseIntMatrix::triples() const {
    std::vector<std::tuple<std::int32_t, std::int32_t, std::int64_t>> t;
    t.reserve(nnz());
    for (int c = 0; c < cols; ++c)
        for (auto [r, v] : col_entries[c]) t.emplace_back(r, c, v);
    std::sort(t.begin(), t.end());
    return t;
}

void SparseIntMatrix::dump(std::ostream& os) const {
    os << rows << ' ' << cols << ' ' << nnz() << '\n';
    for (auto [r, c, v] : triples()) os << r << ' ' << c << ' ' << v << '\n';
}

SparseIntMatrix SparseIntMatrix::parse(std::istream& is) {
    int rows, cols;
    std::size_t nnz;
    if (!(is >> rows >> cols >> nnz)) throw std::invalid_argument("matrix dump: bad header");
    SparseIntMatrix m(rows, cols);
    for (std::size_t i = 0; i < nnz; ++i) {
        std::int32_t r, c;
        std::int64_t v;
        if (!(is >> r >> c >> v)) throw std::invalid_argument("matrix dump: truncated triples");
        if (r < 0 || r >= rows || c < 0 || c >= cols || v == 0)
            throw std::invalid_argument("matrix dump: invalid triple");
        m.col_entries[c].push_back({r, v});
    }
    for (auto& col : m.col_entries) std::sort(col.begin(), col.end());
    return m;
}

bool product_is_zero(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    // a * b, where columns of b feed columns of a
    if (a.cols != b.rows) throw std::invalid_argument("product: dimension mismatch");
    std::map<std::int32_t, std::int64_t> acc;
    for (int j = 0; j < b.cols; ++j) {
        acc.clear();
        for (auto [i, v] : b.col_entries[j])
            for (auto [r, w] : a.col_entries[i]) acc[r] += v * w;
        for (auto [r, v] : acc)
            if (v != 0) return false;
    }
    return true;
}

PathBasis enumerate_paths(const Graph& g, int k, int l) {
    if (k < 0 || l < 0) throw std::invalid_argument("enumerate_paths: negative bigrading");
    PathBasis basis(k, l);
    if (k > l) return basis; // each step has length >= 1
    const int n = g.num_vertices();
    std::vector<std::int32_t> cur(k + 1);
    // DFS in vertex order; output comes out lexicographically sorted
    auto rec = [&](auto&& self, int i, int s) -> void {
        if (i == k) {
            if (s == l) basis.push_back(cur);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (v == cur[i]) continue;
            Dist d = g.dist(cur[i], v);
            if (!is_finite(d)) continue;
            int ns = s + d;
            if (ns + (k - i - 1) > l) continue; // remaining steps cost >= 1 each
            cur[i + 1] = v;
            self(self, i + 1, ns);
        }
    };
    for (int v0 = 0; v0 < n; ++v0) {
        cur[0] = v0;
        rec(rec, 0, 0);
    }
    return basis;
}

SparseIntMatrix boundary_matrix(const Graph& g, const PathBasis& rows_basis, const PathBasis& cols_basis) {
    const int k = cols_basis.degree();
    const int l = cols_basis.length();
    if (k < 1) throw std::invalid_argument("boundary_matrix: need k >= 1");
    if (rows_basis.degree() != k - 1 || rows_basis.length() != l)
        throw std::invalid_argument("boundary_matrix: basis bigradings do not match");

    SparseIntMatrix m(static_cast<int>(rows_basis.size()), static_cast<int>(cols_basis.size()));
    std::vector<std::int32_t> face(k);
    for (std::size_t j = 0; j < cols_basis.size(); ++j) {
        auto t = cols_basis.tuple(j);
        auto& col = m.col_entries[j];
        for (int i = 1; i <= k - 1; ++i) {
            // face drops x_i; only the new consecutive pair can change length
            if (t[i - 1] == t[i + 1]) continue;
            if (g.dist(t[i - 1], t[i + 1]) != g.dist(t[i - 1], t[i]) + g.dist(t[i], t[i + 1])) continue;
            int w = 0;
            for (int a = 0; a <= k; ++a)
                if (a != i) face[w++] = t[a];
            auto r = rows_basis.index_of(face);
            col.push_back({static_cast<std::int32_t>(*r), (i % 2 == 0) ? 1 : -1});
        }
        std::sort(col.begin(), col.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        // accumulate coincident faces, drop cancellations
        std::size_t w = 0;
        for (std::size_t a = 0; a < col.size();) {
            std::int64_t sum = 0;
            std::size_t b = a;
            while (b < col.size() && col[b].first == col[a].first) sum += col[b++].second;
            if (sum != 0) col[w++] = {col[a].first, sum};
            a = b;
        }
        col.resize(w);
    }
    return m;
}

SparseIntMatrix boundary_matrix(const Graph& g, int k, int l) {
    PathBasis rows = enumerate_paths(g, k - 1, l);
    PathBasis cols = enumerate_paths(g, k, l);
    return boundary_matrix(g, rows, cols);
}

std::vector<std::vector<Int>> chain_ranks(const Graph& g, int kmax, int lmax) {
    if (kmax < 0 || lmax < 0) throw std::invalid_argument("chain_ranks: negative bounds");
    const int n = g.num_vertices();
    // ending[v][l] = number of k-paths of length l ending at v
    std::vector<std::vector<Int>> ending(n, std::vector<Int>(lmax + 1, 0));
    for (int v = 0; v < n; ++v) ending[v][0] = 1;

    std::vector<std::vector<Int>> counts(kmax + 1, std::vector<Int>(lmax + 1, 0));
    counts[0][0] = n;

    std::vector<std::vector<Int>> next(n, std::vector<Int>(lmax + 1));
    for (int k = 1; k <= kmax; ++k) {
        for (int v = 0; v < n; ++v) std::fill(next[v].begin(), next[v].end(), Int(0));
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                if (u == v) continue;
                Dist d = g.dist(u, v);
                if (!is_finite(d) || d > lmax) continue;
                for (int l = 0; l + d <= lmax; ++l)
                    if (ending[u][l] != 0) next[v][l + d] += ending[u][l];
            }
        ending.swap(next);
        for (int l = 0; l <= lmax; ++l) {
            Int total = 0;
            for (int v = 0; v < n; ++v) total += ending[v][l];
            counts[k][l] = total;
        }
    }
    return counts;
}

} // namespace maghom
