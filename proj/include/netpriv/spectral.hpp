#pragma once

#include <optional>
#include <vector>

#include "netpriv/numerics.hpp"

namespace netpriv {

/// One distinct eigenvalue of A together with an orthonormal basis of its eigenspace.
struct EigenSpace {
    Complex lambda;
    MatrixXc basis;  // n x multiplicity, orthonormal columns
    Index multiplicity = 0;
    IndexSet support;
    std::optional<std::size_t> conjugate_partner;

    bool is_real() const { return lambda.imag() == 0.0; }
};

struct Spectrum {
    Index n = 0;
    std::vector<EigenSpace> spaces;
    bool diagonalizable = false;
    Index max_multiplicity = 0;
    double cluster_radius = 0.0;

    /// Indices of the eigenspaces a solver has to visit. Of each conjugate pair only the
    /// member with positive imaginary part is kept unless `include_conjugates` is set.
    std::vector<std::size_t> representatives(bool include_conjugates = false) const;
};

inline constexpr Index kDefaultMultiplicityCap = 4;

/// Eigen-decomposition without validation: the diagonalizable flag is computed but
/// never enforced.
Spectrum decompose(const MatrixXr& a, const Tolerance& tol);

/// Decomposes A and enforces the solver preconditions. Throws NotDiagonalizable when
/// the eigenbases do not span R^n and MultiplicityBoundExceeded when some geometric
/// multiplicity is larger than `multiplicity_cap`.
Spectrum compute_spectrum(const MatrixXr& a, const Tolerance& tol,
                          Index multiplicity_cap = kDefaultMultiplicityCap);

/// Rows j of the eigenbasis whose largest entry exceeds support_rel times the largest
/// entry of the whole basis.
IndexSet eigenbasis_support(const EigenSpace& space, const Tolerance& tol);

}  // namespace netpriv
