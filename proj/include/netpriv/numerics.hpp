#pragma once

#include <algorithm>
#include <complex>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "netpriv/error.hpp"

namespace netpriv {

using Index = Eigen::Index;
using Complex = std::complex<double>;
using MatrixXr = Eigen::MatrixXd;
using MatrixXc = Eigen::MatrixXcd;
using RowVectorXr = Eigen::RowVectorXd;

/// Sorted, duplicate-free list of 0-based node indices.
using IndexSet = std::vector<Index>;

/// Thresholds used by every numerical rank decision in the library.
struct Tolerance {
    double rank_rel = 1e-9;
    double rank_abs = 1e-12;
    double cluster_rel = 1e-7;
    double support_rel = 1e-9;

    /// Throws InvalidMatrix when a field is non-positive or rank_rel >= 1.
    void validate() const;
};

/// Singular values below `threshold` are treated as zero.
double rank_threshold(double scale, Index rows, Index cols, const Tolerance& tol);

/// Result of a thresholded SVD: the rank together with the singular values that
/// sit closest to the cut, so callers can report how marginal a decision was.
struct RankProfile {
    Index rank = 0;
    double threshold = 0.0;
    double smallest_kept = 0.0;    // 0 when rank == 0
    double largest_dropped = 0.0;  // 0 when nothing was dropped

    /// Ratio of the closest singular value to the threshold; values near 1 flag
    /// decisions that a different tolerance could flip.
    double margin() const;
};

namespace detail {

template <typename Scalar>
using Dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
Eigen::VectorXd singular_values(const Dense<Scalar>& m) {
    if (m.rows() == 0 || m.cols() == 0) return Eigen::VectorXd();
    Eigen::BDCSVD<Dense<Scalar>> svd(m);
    return svd.singularValues();
}

RankProfile profile_from_singular_values(const Eigen::VectorXd& sv, double scale, Index rows,
                                         Index cols, const Tolerance& tol);

}  // namespace detail

/// Rank profile of `m` using the largest singular value of `m` itself as the scale.
template <typename Derived>
RankProfile rank_profile(const Eigen::MatrixBase<Derived>& m, const Tolerance& tol) {
    using Scalar = typename Derived::Scalar;
    const detail::Dense<Scalar> dense = m;
    const Eigen::VectorXd sv = detail::singular_values<Scalar>(dense);
    const double scale = sv.size() > 0 ? sv(0) : 0.0;
    return detail::profile_from_singular_values(sv, scale, dense.rows(), dense.cols(), tol);
}

/// Rank profile of `m` against an externally supplied scale (for example the norm of
/// the matrix a row block was taken from).
template <typename Derived>
RankProfile rank_profile(const Eigen::MatrixBase<Derived>& m, const Tolerance& tol, double scale) {
    using Scalar = typename Derived::Scalar;
    const detail::Dense<Scalar> dense = m;
    const Eigen::VectorXd sv = detail::singular_values<Scalar>(dense);
    return detail::profile_from_singular_values(sv, scale, dense.rows(), dense.cols(), tol);
}

/// Number of singular values above max(rank_abs, rank_rel * sigma_max * max(rows, cols)).
template <typename Derived>
Index numerical_rank(const Eigen::MatrixBase<Derived>& m, const Tolerance& tol) {
    return rank_profile(m, tol).rank;
}

template <typename Derived>
Index numerical_rank(const Eigen::MatrixBase<Derived>& m, const Tolerance& tol, double scale) {
    return rank_profile(m, tol, scale).rank;
}

template <typename Scalar>
struct NullSpace {
    RankProfile profile;
    detail::Dense<Scalar> basis;  // orthonormal columns
};

/// Rank profile and null-space basis from a single SVD. `scale` overrides the
/// reference magnitude of the rank threshold; by default it is sigma_max of `m`.
/// A matrix with no rows has the identity as its null-space basis.
template <typename Derived>
NullSpace<typename Derived::Scalar> null_space(const Eigen::MatrixBase<Derived>& m,
                                               const Tolerance& tol,
                                               std::optional<double> scale = std::nullopt) {
    using Scalar = typename Derived::Scalar;
    using Mat = detail::Dense<Scalar>;
    const Mat dense = m;
    const Index cols = dense.cols();
    NullSpace<Scalar> out;
    if (dense.rows() == 0 || cols == 0) {
        out.profile.threshold = rank_threshold(scale.value_or(0.0), dense.rows(), cols, tol);
        out.basis = Mat::Identity(cols, cols);
        return out;
    }
    Eigen::BDCSVD<Mat> svd(dense, Eigen::ComputeFullV);
    const Eigen::VectorXd sv = svd.singularValues();
    const double ref = scale ? *scale : sv(0);
    out.profile = detail::profile_from_singular_values(sv, ref, dense.rows(), cols, tol);
    out.basis = svd.matrixV().rightCols(cols - out.profile.rank);
    return out;
}

/// Orthonormal basis of the numerical null space of `m`, one column per direction.
/// Has zero columns when `m` has full column rank.
template <typename Derived>
detail::Dense<typename Derived::Scalar> null_space_basis(const Eigen::MatrixBase<Derived>& m,
                                                         const Tolerance& tol) {
    return null_space(m, tol).basis;
}

/// Rows of `m` selected by `rows`, in the given order.
template <typename Derived>
detail::Dense<typename Derived::Scalar> select_rows(const Eigen::MatrixBase<Derived>& m,
                                                    std::span<const Index> rows) {
    detail::Dense<typename Derived::Scalar> out(static_cast<Index>(rows.size()), m.cols());
    for (Index i = 0; i < out.rows(); ++i) out.row(i) = m.row(rows[static_cast<std::size_t>(i)]);
    return out;
}

/// Vertical concatenation; blocks with zero rows are skipped.
template <typename Scalar>
detail::Dense<Scalar> vstack(std::initializer_list<detail::Dense<Scalar>> blocks) {
    Index rows = 0;
    Index cols = -1;
    for (const auto& b : blocks) {
        if (b.rows() == 0) continue;
        if (cols >= 0 && b.cols() != cols)
            throw Error(ErrorCode::DimensionMismatch, "vstack: column counts differ");
        cols = b.cols();
        rows += b.rows();
    }
    if (cols < 0) {
        for (const auto& b : blocks) cols = std::max(cols, b.cols());
        return detail::Dense<Scalar>(0, std::max<Index>(cols, 0));
    }
    detail::Dense<Scalar> out(rows, cols);
    Index at = 0;
    for (const auto& b : blocks) {
        if (b.rows() == 0) continue;
        out.middleRows(at, b.rows()) = b;
        at += b.rows();
    }
    return out;
}

/// I^S: the |S| x n selector whose rows are the unit vectors e_j^T for j in S.
MatrixXr selector(std::span<const Index> rows, Index n);

/// Each nonzero row scaled to unit Euclidean norm (rank preserving).
MatrixXr normalize_rows(const MatrixXr& m);

/// Throws InvalidMatrix on empty shape or any non-finite entry.
void require_finite(const MatrixXr& m, const char* what);

// Index-set helpers. All inputs and outputs are sorted and duplicate-free.
IndexSet full_set(Index n);
IndexSet set_difference(std::span<const Index> a, std::span<const Index> b);
IndexSet set_union(std::span<const Index> a, std::span<const Index> b);
bool is_subset(std::span<const Index> a, std::span<const Index> b);
/// Orders by cardinality first, then lexicographically.
bool shortlex_less(const IndexSet& a, const IndexSet& b);
/// Throws IndexOutOfRange if any entry lies outside [0, n).
IndexSet normalized_set(std::vector<Index> s, Index n);

}  // namespace netpriv
