#include "probetrace/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace probetrace {

SparseSymMatrix SparseSymMatrix::from_triplets(int n,
                                               std::span<const int> rows,
                                               std::span<const int> cols,
                                               std::span<const double> vals) {
    if (n < 0) throw std::invalid_argument("matrix dimension must be nonnegative");
    if (rows.size() != cols.size() || rows.size() != vals.size())
        throw std::invalid_argument("triplet arrays must have equal length");

    for (std::size_t k = 0; k < rows.size(); ++k) {
        if (rows[k] < 0 || rows[k] >= n || cols[k] < 0 || cols[k] >= n)
            throw std::invalid_argument("triplet index out of range: (" +
                                        std::to_string(rows[k]) + "," +
                                        std::to_string(cols[k]) + ")");
    }

    // Count, bucket by row, then sort each row and sum duplicates.
    std::vector<std::size_t> counts(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t k = 0; k < rows.size(); ++k) counts[rows[k] + 1]++;
    std::vector<std::size_t> offs(counts);
    std::partial_sum(offs.begin(), offs.end(), offs.begin());

    std::vector<int> cbuf(rows.size());
    std::vector<double> vbuf(rows.size());
    {
        std::vector<std::size_t> cursor(offs.begin(), offs.end() - 1);
        for (std::size_t k = 0; k < rows.size(); ++k) {
            std::size_t p = cursor[rows[k]]++;
            cbuf[p] = cols[k];
            vbuf[p] = vals[k];
        }
    }

    SparseSymMatrix M;
    M.n_ = n;
    M.row_offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    M.col_indices_.reserve(rows.size());
    M.values_.reserve(rows.size());

    std::vector<std::size_t> perm;
    for (int i = 0; i < n; ++i) {
        std::size_t lo = offs[i], hi = offs[i + 1];
        perm.resize(hi - lo);
        std::iota(perm.begin(), perm.end(), lo);
        std::sort(perm.begin(), perm.end(),
                  [&](std::size_t a, std::size_t b) { return cbuf[a] < cbuf[b]; });
        std::size_t k = 0;
        while (k < perm.size()) {
            int c = cbuf[perm[k]];
            double v = 0.0;
            while (k < perm.size() && cbuf[perm[k]] == c) v += vbuf[perm[k++]];
            if (v != 0.0) {
                M.col_indices_.push_back(c);
                M.values_.push_back(v);
            }
        }
        M.row_offsets_[i + 1] = M.col_indices_.size();
    }

    // Symmetry: every (i,j) needs a matching (j,i) with the identical value.
    for (int i = 0; i < n; ++i) {
        auto cs = M.row_cols(i);
        auto vs = M.row_values(i);
        for (std::size_t k = 0; k < cs.size(); ++k) {
            int j = cs[k];
            if (j == i) continue;
            if (M.coeff(j, i) != vs[k])
                throw std::invalid_argument("matrix is not symmetric at (" +
                                            std::to_string(i) + "," +
                                            std::to_string(j) + ")");
        }
    }
    return M;
}

double SparseSymMatrix::coeff(int i, int j) const {
    auto cs = row_cols(i);
    auto it = std::lower_bound(cs.begin(), cs.end(), j);
    if (it == cs.end() || *it != j) return 0.0;
    return values_[row_offsets_[i] + static_cast<std::size_t>(it - cs.begin())];
}

double SparseSymMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < n_; ++i) t += coeff(i, i);
    return t;
}

bool SparseSymMatrix::has_zero_diagonal() const {
    for (int i = 0; i < n_; ++i)
        if (coeff(i, i) != 0.0) return false;
    return true;
}

std::vector<double> matvec(const SparseSymMatrix& M, std::span<const double> v) {
    if (static_cast<int>(v.size()) != M.size())
        throw std::invalid_argument("matvec: dimension mismatch");
    std::vector<double> y(v.size(), 0.0);
    for (int i = 0; i < M.size(); ++i) {
        auto cs = M.row_cols(i);
        auto vs = M.row_values(i);
        double s = 0.0;
        for (std::size_t k = 0; k < cs.size(); ++k) s += vs[k] * v[cs[k]];
        y[i] = s;
    }
    return y;
}

SparseSymMatrix laplacian_from_adjacency(const SparseSymMatrix& A) {
    if (!A.has_zero_diagonal())
        throw std::invalid_argument("laplacian_from_adjacency: adjacency matrix must have zero diagonal");
    for (double w : A.values())
        if (w < 0.0)
            throw std::invalid_argument("laplacian_from_adjacency: negative edge weight");

    std::vector<int> rows, cols;
    std::vector<double> vals;
    rows.reserve(A.nnz() + A.size());
    cols.reserve(A.nnz() + A.size());
    vals.reserve(A.nnz() + A.size());
    for (int i = 0; i < A.size(); ++i) {
        auto cs = A.row_cols(i);
        auto vs = A.row_values(i);
        double deg = 0.0;
        for (std::size_t k = 0; k < cs.size(); ++k) {
            deg += vs[k];
            rows.push_back(i);
            cols.push_back(cs[k]);
            vals.push_back(-vs[k]);
        }
        rows.push_back(i);
        cols.push_back(i);
        vals.push_back(deg);
    }
    return SparseSymMatrix::from_triplets(A.size(), rows, cols, vals);
}

SparseSymMatrix normalize_unit_trace(const SparseSymMatrix& M) {
    double t = M.trace();
    if (!(t > 0.0)) throw std::domain_error("normalize_unit_trace: trace must be positive");
    std::vector<int> rows, cols;
    std::vector<double> vals;
    rows.reserve(M.nnz());
    cols.reserve(M.nnz());
    vals.reserve(M.nnz());
    for (int i = 0; i < M.size(); ++i) {
        auto cs = M.row_cols(i);
        auto vs = M.row_values(i);
        for (std::size_t k = 0; k < cs.size(); ++k) {
            rows.push_back(i);
            cols.push_back(cs[k]);
            vals.push_back(vs[k] / t);
        }
    }
    return SparseSymMatrix::from_triplets(M.size(), rows, cols, vals);
}

}  // namespace probetrace
