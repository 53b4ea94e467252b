#pragma once

#include <string>
#include <vector>

#include "maghom/common.hpp"
#include "maghom/graph.hpp"
#include "maghom/homology.hpp"

namespace maghom {

/// Integer power series in q truncated at degree L; arithmetic discards
/// higher degrees.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int truncation) : c_(truncation + 1, Int(0)) {
        if (truncation < 0) throw std::invalid_argument("series: negative truncation");
    }
    static TruncatedSeries constant(int truncation, Int value);
    /// q^deg; degrees beyond the truncation (including the q^inf convention)
    /// give the zero series.
    static TruncatedSeries monomial(int truncation, int deg, Int coeff = Int(1));

    int truncation() const { return static_cast<int>(c_.size()) - 1; }
    const Int& operator[](int i) const { return c_[i]; }
    Int& operator[](int i) { return c_[i]; }
    const std::vector<Int>& coeffs() const { return c_; }

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries operator-() const;
    bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }

    std::string to_string(const std::string& var = "q") const;

private:
    std::vector<Int> c_;
};

/// Square matrix of series sharing one truncation.
class SeriesMatrix {
public:
    SeriesMatrix(int n, int truncation);
    static SeriesMatrix identity(int n, int truncation);

    int size() const { return n_; }
    int truncation() const { return l_; }
    const TruncatedSeries& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    TruncatedSeries& at(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }

    SeriesMatrix operator*(const SeriesMatrix& o) const;
    /// Order-by-order inverse; requires constant term equal to the identity.
    SeriesMatrix inverse() const;
    TruncatedSeries sum_entries() const;

private:
    int n_, l_;
    std::vector<TruncatedSeries> e_;
};

/// Z_G(q): entry (i, j) is q^{d(v_i, v_j)} with q^inf = 0.
SeriesMatrix similarity_matrix(const Graph& g, int truncation);

/// #G(q) as the sum of entries of Z_G(q)^{-1}, truncated.
TruncatedSeries magnitude_series(const Graph& g, int truncation);

/// #G(q) by the alternating sum over k-path counts per length.
TruncatedSeries magnitude_alternating(const Graph& g, int truncation);

/// Coefficient l is sum_k (-1)^k rank MH_{k,l}. The table must cover every
/// k <= l <= lmax with no skipped cells; otherwise the missing bigrading is
/// reported.
TruncatedSeries euler_characteristic(const BigradedTable& table);

} // namespace maghom
