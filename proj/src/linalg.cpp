#include "maghom/linalg.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <set>

namespace maghom {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

} // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    // this base set decides primality for every 64-bit integer
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

u64 random_prime62(int index, u64 seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<u64> dist(1ULL << 61, (1ULL << 62) - 1);
    int found = 0;
    while (true) {
        u64 c = dist(rng) | 1;
        if (is_prime_u64(c)) {
            if (found == index) return c;
            ++found;
        }
    }
}

long long rank_mod(const SparseIntMatrix& m, u64 p, const Deadline& dl) {
    if (!is_prime_u64(p)) throw std::invalid_argument("rank_mod: modulus is not prime");

    // column reduction against stored pivot columns, pivot = largest row index
    std::vector<std::vector<std::pair<std::int32_t, u64>>> pivot_cols;
    std::vector<std::int32_t> pivot_of_row(m.rows, -1);
    long long rank = 0;
    std::vector<std::pair<std::int32_t, u64>> cur, tmp;

    for (int j = 0; j < m.cols; ++j) {
        if ((j & 255) == 0) dl.check();
        cur.clear();
        for (auto [r, v] : m.col_entries[j]) {
            std::int64_t w = v % static_cast<std::int64_t>(p);
            if (w < 0) w += p;
            if (w) cur.push_back({r, static_cast<u64>(w)});
        }
        while (!cur.empty()) {
            std::int32_t low = cur.back().first;
            std::int32_t pi = pivot_of_row[low];
            if (pi < 0) {
                pivot_of_row[low] = static_cast<std::int32_t>(pivot_cols.size());
                pivot_cols.push_back(cur);
                ++rank;
                break;
            }
            const auto& pv = pivot_cols[pi];
            u64 f = mulmod(cur.back().second, invmod(pv.back().second, p), p);
            // cur -= f * pv  (both sorted by row)
            tmp.clear();
            std::size_t a = 0, b = 0;
            while (a < cur.size() || b < pv.size()) {
                if (b == pv.size() || (a < cur.size() && cur[a].first < pv[b].first)) {
                    tmp.push_back(cur[a++]);
                } else if (a == cur.size() || pv[b].first < cur[a].first) {
                    u64 w = p - mulmod(f, pv[b].second, p);
                    if (w != p && w != 0) tmp.push_back({pv[b].first, w});
                    ++b;
                } else {
                    u64 w = (cur[a].second + p - mulmod(f, pv[b].second, p)) % p;
                    if (w) tmp.push_back({cur[a].first, w});
                    ++a, ++b;
                }
            }
            cur.swap(tmp);
        }
    }
    return rank;
}

long long rank_over_q(const SparseIntMatrix& m, const Deadline& dl) {
    long long r0 = rank_mod(m, random_prime62(0), dl);
    long long r1 = rank_mod(m, random_prime62(1), dl);
    int next = 2;
    while (r0 != r1) {
        // rank mod p never exceeds the rational rank, so agreement of two
        // primes on the larger value certifies it
        long long r2 = rank_mod(m, random_prime62(next++), dl);
        r0 = std::max(r0, r1);
        r1 = r2;
        if (next > 16) throw std::runtime_error("rank_over_q: primes keep disagreeing");
    }
    return r0;
}

namespace {

/// Textbook Smith reduction with smallest-magnitude pivot selection.
std::vector<Int> dense_snf(std::vector<std::vector<Int>> a, const Deadline& dl) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    std::vector<Int> factors;
    int t = 0;
    while (t < rows && t < cols) {
        dl.check();
        int pi = -1, pj = -1;
        Int best;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (a[i][j] != 0) {
                    Int m = abs(a[i][j]);
                    if (pi < 0 || m < best) {
                        best = m;
                        pi = i;
                        pj = j;
                    }
                }
        if (pi < 0) break;
        std::swap(a[t], a[pi]);
        for (int i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pj]);

        bool clean = true;
        for (int i = t + 1; i < rows; ++i)
            if (a[i][t] % a[t][t] != 0) clean = false;
        for (int j = t + 1; j < cols; ++j)
            if (a[t][j] % a[t][t] != 0) clean = false;
        if (!clean) {
            // one reduction sweep strictly shrinks the pivot; loop again
            for (int i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                Int q = a[i][t] / a[t][t];
                for (int j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
            }
            for (int j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                Int q = a[t][j] / a[t][t];
                for (int i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
            }
            continue;
        }
        for (int i = t + 1; i < rows; ++i) {
            if (a[i][t] == 0) continue;
            Int q = a[i][t] / a[t][t];
            for (int j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        }
        for (int j = t + 1; j < cols; ++j) {
            if (a[t][j] == 0) continue;
            Int q = a[t][j] / a[t][t];
            for (int i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        }
        // pivot must divide the rest of the submatrix for the chain to hold
        bool divides_all = true;
        for (int i = t + 1; i < rows && divides_all; ++i)
            for (int j = t + 1; j < cols; ++j)
                if (a[i][j] % a[t][t] != 0) {
                    for (int jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
                    divides_all = false;
                    break;
                }
        if (!divides_all) continue;
        factors.push_back(abs(a[t][t]));
        ++t;
    }
    return factors;
}

} // namespace

SmithResult smith_normal_form(const SparseIntMatrix& m, const SnfOptions& opt, const Deadline& dl) {
    // sparse phase: eliminate +-1 pivots; each contributes invariant factor 1
    // and the Smith form of the Schur complement supplies the rest
    std::vector<std::map<std::int32_t, Int>> cols(m.cols);
    std::vector<std::set<std::int32_t>> row_cols(m.rows);
    for (int j = 0; j < m.cols; ++j)
        for (auto [r, v] : m.col_entries[j]) {
            cols[j][r] = v;
            row_cols[r].insert(j);
        }

    // lazy queue of candidate columns ordered by current size
    std::priority_queue<std::pair<std::size_t, std::int32_t>, std::vector<std::pair<std::size_t, std::int32_t>>,
                        std::greater<>>
        pq;
    for (int j = 0; j < m.cols; ++j)
        if (!cols[j].empty()) pq.push({cols[j].size(), j});

    long long unit_count = 0;
    std::size_t steps = 0;
    while (!pq.empty()) {
        if ((++steps & 127) == 0) dl.check();
        auto [sz, c] = pq.top();
        pq.pop();
        if (cols[c].empty() || cols[c].size() != sz) continue; // stale entry
        // unit entry whose row is cheapest to update
        std::int32_t pr = -1;
        std::size_t best_row = 0;
        for (auto& [r, v] : cols[c])
            if (v == 1 || v == -1)
                if (pr < 0 || row_cols[r].size() < best_row) {
                    pr = r;
                    best_row = row_cols[r].size();
                }
        if (pr < 0) continue; // no unit pivot here; may become one later via updates
        const int sign = cols[c][pr] > 0 ? 1 : -1;

        std::vector<std::int32_t> touched(row_cols[pr].begin(), row_cols[pr].end());
        for (std::int32_t j : touched) {
            if (j == c) continue;
            Int f = cols[j][pr] * sign;
            for (auto& [i, v] : cols[c]) {
                auto it = cols[j].find(i);
                if (it == cols[j].end()) {
                    cols[j][i] = -f * v;
                    row_cols[i].insert(j);
                } else {
                    it->second -= f * v;
                    if (it->second == 0) {
                        cols[j].erase(it);
                        row_cols[i].erase(j);
                    }
                }
            }
            if (!cols[j].empty()) pq.push({cols[j].size(), j});
        }
        for (auto& [i, v] : cols[c]) row_cols[i].erase(c);
        cols[c].clear();
        ++unit_count;
    }

    // residual: entries with |value| >= 2 only
    std::map<std::int32_t, int> rmap;
    std::vector<std::int32_t> live_cols;
    for (int j = 0; j < m.cols; ++j)
        if (!cols[j].empty()) {
            live_cols.push_back(j);
            for (auto& [r, v] : cols[j]) rmap.emplace(r, 0);
        }
    int ri = 0;
    for (auto& [r, idx] : rmap) idx = ri++;

    SmithResult res;
    res.factors.assign(unit_count, Int(1));
    if (!live_cols.empty()) {
        if (rmap.size() > opt.max_dense || live_cols.size() > opt.max_dense)
            throw ResourceExceeded("smith_normal_form: residual core exceeds dense ceiling");
        std::vector<std::vector<Int>> dense(rmap.size(), std::vector<Int>(live_cols.size(), 0));
        for (std::size_t j = 0; j < live_cols.size(); ++j)
            for (auto& [r, v] : cols[live_cols[j]]) dense[rmap[r]][j] = v;
        for (Int& d : dense_snf(std::move(dense), dl)) res.factors.push_back(std::move(d));
    }
    res.rank = static_cast<long long>(res.factors.size());
    for (std::size_t i = 0; i + 1 < res.factors.size(); ++i)
        if (res.factors[i + 1] % res.factors[i] != 0)
            throw std::logic_error("smith_normal_form: divisibility chain violated");
    return res;
}

} // namespace maghom
