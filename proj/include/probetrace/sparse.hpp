#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace probetrace {

/// Sparse symmetric matrix in compressed row storage. Both triangles are
/// stored explicitly, so traversing a row enumerates the full neighbor list
/// of the corresponding graph node. Immutable after construction.
///
/// The induced graph G(A) has an edge (i,j) for every stored off-diagonal
/// entry; exact zeros are dropped at construction so the stored pattern and
/// the edge set coincide.
class SparseSymMatrix {
public:
    SparseSymMatrix() = default;

    /// Builds from coordinate triplets. Duplicates are summed, rows are
    /// sorted, exact zeros dropped. Throws std::invalid_argument if an index
    /// is out of range or the assembled matrix is not symmetric (values of
    /// (i,j) and (j,i) must match exactly).
    static SparseSymMatrix from_triplets(int n,
                                         std::span<const int> rows,
                                         std::span<const int> cols,
                                         std::span<const double> vals);

    int size() const { return n_; }
    std::size_t nnz() const { return col_indices_.size(); }

    const std::vector<std::size_t>& row_offsets() const { return row_offsets_; }
    const std::vector<int>& col_indices() const { return col_indices_; }
    const std::vector<double>& values() const { return values_; }

    std::span<const int> row_cols(int i) const {
        return {col_indices_.data() + row_offsets_[i],
                col_indices_.data() + row_offsets_[i + 1]};
    }
    std::span<const double> row_values(int i) const {
        return {values_.data() + row_offsets_[i],
                values_.data() + row_offsets_[i + 1]};
    }

    /// Value at (i,j); zero when not stored.
    double coeff(int i, int j) const;

    double trace() const;

    /// True when every stored diagonal entry is zero (none stored).
    bool has_zero_diagonal() const;

private:
    int n_ = 0;
    std::vector<std::size_t> row_offsets_{0};
    std::vector<int> col_indices_;
    std::vector<double> values_;
};

/// Exact sparse product M*v. Throws std::invalid_argument on size mismatch.
std::vector<double> matvec(const SparseSymMatrix& M, std::span<const double> v);

/// Graph Laplacian L = D - A of a nonnegatively weighted adjacency matrix
/// with zero diagonal. Rows of L sum to zero.
SparseSymMatrix laplacian_from_adjacency(const SparseSymMatrix& A);

/// M / trace(M). Throws std::domain_error when trace(M) <= 0.
SparseSymMatrix normalize_unit_trace(const SparseSymMatrix& M);

}  // namespace probetrace
