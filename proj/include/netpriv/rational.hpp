#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include "netpriv/numerics.hpp"

namespace netpriv {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;
using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

/// Builds a rational matrix from nested integer rows; throws InvalidMatrix on ragged input.
RationalMatrix rational_from_rows(const std::vector<std::vector<long long>>& rows);

/// Row-reduced echelon form computed with exact arithmetic.
struct Echelon {
    RationalMatrix reduced;
    std::vector<Index> pivot_cols;
    Index rank() const { return static_cast<Index>(pivot_cols.size()); }
};

Echelon row_reduce(const RationalMatrix& m);

Index exact_rank(const RationalMatrix& m);

/// Determinant by fraction-free (Bareiss) elimination.
Rational exact_determinant(const RationalMatrix& m);

/// Inverse by Gauss-Jordan elimination; throws RankDeficient when singular.
RationalMatrix exact_inverse(const RationalMatrix& m);

/// Integer basis W_perp (n x (n - k)) of the left null space of a full-column-rank
/// n x k matrix W, so that W_perp^T W == 0 exactly. Each column is primitive (entries
/// share no common factor). Throws RankDeficient if W lacks full column rank and
/// DimensionMismatch unless rows > cols.
RationalMatrix rational_kernel(const RationalMatrix& w);

bool is_integer_matrix(const RationalMatrix& m);

/// Largest absolute entry.
Rational max_abs_entry(const RationalMatrix& m);

MatrixXr to_double(const RationalMatrix& m);

}  // namespace netpriv
