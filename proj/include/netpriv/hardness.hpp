#pragma once

#include <optional>

#include "netpriv/blocking.hpp"
#include "netpriv/rational.hpp"

namespace netpriv {

/// Instance of the blocking problem built from an integer matrix W so that a small
/// blocking set exists exactly when W has k linearly dependent rows. Every field is exact.
struct ReductionInstance {
    RationalMatrix w;        // n x k
    RationalMatrix w_perp;   // n x (n - k), W_perp^T W = 0
    Rational beta_max;       // max |w_ij|
    Rational beta_perp_max;  // max |W_perp_ij|
    Rational eta_star;
    RationalMatrix p;        // [W, W_perp + eta_star * 1]
    RationalMatrix p_inv;
    RationalMatrix gamma;    // diag(I_k, 2, 3, ..., n - k + 1)
    Rational alpha;          // 1 + k^k beta_max^k
    RationalMatrix a;        // P Gamma P^{-1}
    RationalMatrix f;        // 1 x n, [alpha, alpha^2, ..., alpha^n]

    Index n() const { return w.rows(); }
    Index k() const { return w.cols(); }
};

/// det [W, W_perp + eta * 1].
Rational shifted_determinant(const RationalMatrix& w, const RationalMatrix& w_perp,
                             const Rational& eta);

/// Throws RankDeficient when W lacks full column rank, DimensionMismatch unless
/// n > k >= 1, and InvalidMatrix for non-integer entries.
ReductionInstance build_reduction_instance(const RationalMatrix& w);

/// True when some k x k row submatrix of W is singular (exact determinants).
bool linear_degeneracy_bruteforce(const RationalMatrix& w);

/// Exact check that [sum_i alpha^i w_i ; W_S] is nonsingular for every S with |S| = k - 1
/// and rank W_S = k - 1. Returns the number of sets S checked, or nullopt on a failure.
std::optional<Index> check_alpha_separation(const ReductionInstance& inst);

/// Floating-point (A, f) handed to the numeric oracle.
SystemInstance float_instance(const ReductionInstance& inst);

struct ReductionReport {
    ReductionInstance instance;
    bool degenerate = false;
    Index optimum = 0;           // brute-force minimum blocking size for (A, f)
    Index threshold = 0;         // n - k
    bool agreement = false;      // (optimum <= n - k) == degenerate
    bool conditioning_warning = false;  // alpha^n > 2^53
    IndexSet optimum_set;
};

/// Builds the instance, runs the exhaustive oracle on the single-row float instance and
/// compares (optimum <= n - k) with the exact degeneracy test.
ReductionReport verify_reduction(const RationalMatrix& w, const Tolerance& tol,
                                 Index max_n = 12);

}  // namespace netpriv
