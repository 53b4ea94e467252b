#include "maghom/series.hpp"

#include <sstream>

#include "maghom/magchain.hpp"

namespace maghom {

TruncatedSeries TruncatedSeries::constant(int truncation, Int value) {
    TruncatedSeries s(truncation);
    s.c_[0] = std::move(value);
    return s;
}

TruncatedSeries TruncatedSeries::monomial(int truncation, int deg, Int coeff) {
    TruncatedSeries s(truncation);
    if (deg >= 0 && deg <= truncation) s.c_[deg] = std::move(coeff);
    return s;
}

namespace {
void require_same_truncation(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.truncation() != b.truncation())
        throw std::invalid_argument("series: mixed truncations");
}
} // namespace

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    require_same_truncation(*this, o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    require_same_truncation(*this, o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    TruncatedSeries r = *this;
    r += o;
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    TruncatedSeries r = *this;
    r -= o;
    return r;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    require_same_truncation(*this, o);
    TruncatedSeries r(truncation());
    for (int i = 0; i <= truncation(); ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; i + j <= truncation(); ++j)
            if (o.c_[j] != 0) r.c_[i + j] += c_[i] * o.c_[j];
    }
    return r;
}

std::string TruncatedSeries::to_string(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= truncation(); ++i) {
        if (c_[i] == 0) continue;
        Int a = c_[i];
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (i == 0 || a != 1) os << a.str();
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
    }
    if (first) os << "0";
    return os.str();
}

SeriesMatrix::SeriesMatrix(int n, int truncation) : n_(n), l_(truncation) {
    if (n < 0) throw std::invalid_argument("series matrix: negative size");
    e_.assign(static_cast<std::size_t>(n) * n, TruncatedSeries(truncation));
}

SeriesMatrix SeriesMatrix::identity(int n, int truncation) {
    SeriesMatrix m(n, truncation);
    for (int i = 0; i < n; ++i) m.at(i, i)[0] = 1;
    return m;
}

SeriesMatrix SeriesMatrix::operator*(const SeriesMatrix& o) const {
    if (n_ != o.n_ || l_ != o.l_) throw std::invalid_argument("series matrix: shape mismatch");
    SeriesMatrix r(n_, l_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const TruncatedSeries& a = at(i, k);
            bool zero = true;
            for (int d = 0; d <= l_ && zero; ++d) zero = a[d] == 0;
            if (zero) continue;
            for (int j = 0; j < n_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

SeriesMatrix SeriesMatrix::inverse() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (at(i, j)[0] != (i == j ? 1 : 0))
                throw std::invalid_argument("series matrix inverse: constant term must be the identity");

    // X_0 = I and, for m >= 1, X_m = -sum_{d=1..m} Z_d X_{m-d}, where Z_d is
    // the degree-d coefficient matrix
    SeriesMatrix inv = identity(n_, l_);
    for (int m = 1; m <= l_; ++m) {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                Int acc = 0;
                for (int d = 1; d <= m; ++d)
                    for (int k = 0; k < n_; ++k) {
                        const Int& z = at(i, k)[d];
                        if (z != 0) acc += z * inv.at(k, j)[m - d];
                    }
                inv.at(i, j)[m] = -acc;
            }
    }
    return inv;
}

TruncatedSeries SeriesMatrix::sum_entries() const {
    TruncatedSeries s(l_);
    for (const auto& entry : e_) s += entry;
    return s;
}

SeriesMatrix similarity_matrix(const Graph& g, int truncation) {
    if (truncation < 0) throw std::invalid_argument("similarity_matrix: negative truncation");
    int n = g.num_vertices();
    SeriesMatrix z(n, truncation);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Dist d = g.dist(i, j);
            if (is_finite(d) && d <= truncation) z.at(i, j)[d] = 1;
        }
    return z;
}

TruncatedSeries magnitude_series(const Graph& g, int truncation) {
    return similarity_matrix(g, truncation).inverse().sum_entries();
}

TruncatedSeries magnitude_alternating(const Graph& g, int truncation) {
    if (truncation < 0) throw std::invalid_argument("magnitude_alternating: negative truncation");
    auto counts = chain_ranks(g, truncation, truncation);
    TruncatedSeries s(truncation);
    for (int l = 0; l <= truncation; ++l) {
        Int c = 0;
        for (int k = 0; k <= l; ++k) {
            if (k % 2 == 0)
                c += counts[k][l];
            else
                c -= counts[k][l];
        }
        s[l] = c;
    }
    return s;
}

TruncatedSeries euler_characteristic(const BigradedTable& table) {
    TruncatedSeries s(table.lmax);
    for (int l = 0; l <= table.lmax; ++l) {
        Int c = 0;
        for (int k = 0; k <= l; ++k) {
            const CellEntry* cell = table.find(k, l);
            if (!cell || cell->skipped)
                throw std::invalid_argument("euler_characteristic: table incomplete at (k,l)=(" +
                                            std::to_string(k) + "," + std::to_string(l) + ")");
            if (k % 2 == 0)
                c += cell->group.free_rank;
            else
                c -= cell->group.free_rank;
        }
        s[l] = c;
    }
    return s;
}

} // namespace maghom
