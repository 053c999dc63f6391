#include "netpriv/rational.hpp"

#include <utility>

namespace netpriv {

RationalMatrix rational_from_rows(const std::vector<std::vector<long long>>& rows) {
    if (rows.empty() || rows.front().empty())
        throw Error(ErrorCode::InvalidMatrix, "matrix must be non-empty");
    const auto cols = rows.front().size();
    RationalMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(cols));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw Error(ErrorCode::InvalidMatrix, "ragged rows");
        for (std::size_t j = 0; j < cols; ++j)
            m(static_cast<Index>(i), static_cast<Index>(j)) = Rational(rows[i][j]);
    }
    return m;
}

Echelon row_reduce(const RationalMatrix& m) {
    Echelon e{m, {}};
    RationalMatrix& r = e.reduced;
    Index row = 0;
    for (Index col = 0; col < r.cols() && row < r.rows(); ++col) {
        Index pivot = -1;
        for (Index i = row; i < r.rows(); ++i) {
            if (r(i, col) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != row) r.row(pivot).swap(r.row(row));
        const Rational inv = 1 / r(row, col);
        for (Index j = col; j < r.cols(); ++j) r(row, j) *= inv;
        for (Index i = 0; i < r.rows(); ++i) {
            if (i == row || r(i, col) == 0) continue;
            const Rational factor = r(i, col);
            for (Index j = col; j < r.cols(); ++j) r(i, j) -= factor * r(row, j);
        }
        e.pivot_cols.push_back(col);
        ++row;
    }
    return e;
}

Index exact_rank(const RationalMatrix& m) { return row_reduce(m).rank(); }

Rational exact_determinant(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::NonSquare, "determinant of non-square matrix");
    const Index n = m.rows();
    if (n == 0) return Rational(1);

    // Clear denominators row by row so the elimination runs on integers.
    Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic> a(n, n);
    Rational scale(1);
    for (Index i = 0; i < n; ++i) {
        BigInt lcm(1);
        for (Index j = 0; j < n; ++j)
            lcm = boost::multiprecision::lcm(lcm, BigInt(boost::multiprecision::denominator(m(i, j))));
        scale /= Rational(lcm);
        for (Index j = 0; j < n; ++j) {
            const Rational v = m(i, j) * Rational(lcm);
            a(i, j) = boost::multiprecision::numerator(v);
        }
    }

    int sign = 1;
    BigInt prev(1);
    for (Index k = 0; k < n - 1; ++k) {
        if (a(k, k) == 0) {
            Index swap_with = -1;
            for (Index i = k + 1; i < n; ++i) {
                if (a(i, k) != 0) {
                    swap_with = i;
                    break;
                }
            }
            if (swap_with < 0) return Rational(0);
            a.row(k).swap(a.row(swap_with));
            sign = -sign;
        }
        for (Index i = k + 1; i < n; ++i) {
            for (Index j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return Rational(a(n - 1, n - 1)) * sign * scale;
}

RationalMatrix exact_inverse(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::NonSquare, "inverse of non-square matrix");
    const Index n = m.rows();
    RationalMatrix aug(n, 2 * n);
    aug.leftCols(n) = m;
    aug.rightCols(n) = RationalMatrix::Identity(n, n);
    const Echelon e = row_reduce(aug);
    if (e.rank() < n || e.pivot_cols[static_cast<std::size_t>(n - 1)] != n - 1)
        throw Error(ErrorCode::RankDeficient, "matrix is singular");
    return e.reduced.rightCols(n);
}

namespace {

void make_primitive_integer(Eigen::Ref<RationalMatrix> column) {
    BigInt lcm(1);
    for (Index i = 0; i < column.rows(); ++i)
        lcm = boost::multiprecision::lcm(lcm, BigInt(boost::multiprecision::denominator(column(i, 0))));
    BigInt gcd(0);
    for (Index i = 0; i < column.rows(); ++i) {
        column(i, 0) *= Rational(lcm);
        gcd = boost::multiprecision::gcd(gcd, BigInt(boost::multiprecision::numerator(column(i, 0))));
    }
    if (gcd > 1)
        for (Index i = 0; i < column.rows(); ++i) column(i, 0) /= Rational(gcd);
}

}  // namespace

RationalMatrix rational_kernel(const RationalMatrix& w) {
    const Index n = w.rows();
    const Index k = w.cols();
    if (n <= k) throw Error(ErrorCode::DimensionMismatch, "kernel needs rows > cols");
    // y^T W = 0  <=>  W^T y = 0.
    const Echelon e = row_reduce(w.transpose());
    if (e.rank() != k) throw Error(ErrorCode::RankDeficient, "W does not have full column rank");

    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (Index c : e.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

    RationalMatrix kernel = RationalMatrix::Zero(n, n - k);
    Index out = 0;
    for (Index free = 0; free < n; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        kernel(free, out) = 1;
        for (Index r = 0; r < e.rank(); ++r)
            kernel(e.pivot_cols[static_cast<std::size_t>(r)], out) = -e.reduced(r, free);
        make_primitive_integer(kernel.col(out));
        ++out;
    }
    return kernel;
}

bool is_integer_matrix(const RationalMatrix& m) {
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            if (boost::multiprecision::denominator(m(i, j)) != 1) return false;
    return true;
}

Rational max_abs_entry(const RationalMatrix& m) {
    Rational best(0);
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) best = std::max(best, Rational(abs(m(i, j))));
    return best;
}

MatrixXr to_double(const RationalMatrix& m) {
    MatrixXr out(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).convert_to<double>();
    return out;
}

}  // namespace netpriv
