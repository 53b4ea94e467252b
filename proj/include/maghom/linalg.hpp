#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "maghom/common.hpp"
#include "maghom/magchain.hpp"

namespace maghom {

struct CellTimeout : std::runtime_error {
    CellTimeout() : std::runtime_error("per-cell time ceiling exceeded") {}
};
struct ResourceExceeded : std::runtime_error {
    explicit ResourceExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Wall-clock ceiling used inside elimination loops; inert by default.
class Deadline {
public:
    Deadline() = default;
    explicit Deadline(double seconds)
        : enabled_(seconds > 0),
          end_(std::chrono::steady_clock::now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                                      std::chrono::duration<double>(seconds))) {}
    void check() const {
        if (enabled_ && std::chrono::steady_clock::now() > end_) throw CellTimeout();
    }

private:
    bool enabled_ = false;
    std::chrono::steady_clock::time_point end_{};
};

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// The index-th prime drawn from a seeded PRNG over [2^61, 2^62). Fixed seed
/// keeps outputs byte-identical across runs.
std::uint64_t random_prime62(int index, std::uint64_t seed = 0x6d61676e69747564ULL);

/// Rank of an integer matrix modulo a prime p < 2^62. Throws on composite p.
long long rank_mod(const SparseIntMatrix& m, std::uint64_t p, const Deadline& dl = {});

/// Rank over Q via elimination modulo two deterministic 62-bit primes; on the
/// (vanishing-probability) mismatch the larger count wins and further primes
/// are drawn until two agree.
long long rank_over_q(const SparseIntMatrix& m, const Deadline& dl = {});

struct SnfOptions {
    std::size_t max_dense = 4096; // residual core ceiling after unit pivots
};

struct SmithResult {
    long long rank = 0;
    std::vector<Int> factors; // d_1 | d_2 | ... | d_rank, each >= 1

    std::vector<Int> nontrivial() const {
        std::vector<Int> out;
        for (const Int& d : factors)
            if (d > 1) out.push_back(d);
        return out;
    }
};

/// Invariant factors of an integer matrix. Sparse elimination by unit pivots
/// first, then a textbook smallest-pivot reduction of the dense residual with
/// arbitrary-precision entries.
SmithResult smith_normal_form(const SparseIntMatrix& m, const SnfOptions& opt = {}, const Deadline& dl = {});

} // namespace maghom
