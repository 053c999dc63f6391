#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "netpriv/numerics.hpp"
#include "netpriv/spectral.hpp"

namespace netpriv {

/// A directed edge (from, to) of the network graph; present when a_{to,from} != 0.
struct Edge {
    Index from = 0;
    Index to = 0;
    double weight = 0.0;
};

/// The pair (A, F): network dynamics and the linear functional to keep private.
class SystemInstance {
public:
    /// Validates shapes and finiteness and rejects all-zero rows of F (ZeroFunctional).
    SystemInstance(MatrixXr a, MatrixXr f, std::vector<std::string> labels = {});

    const MatrixXr& A() const { return a_; }
    const MatrixXr& F() const { return f_; }
    Index n() const { return a_.rows(); }
    Index r() const { return f_.rows(); }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Edge list derived from the off-diagonal pattern of A.
    std::vector<Edge> edges() const;

    /// Same dynamics with a different functional.
    SystemInstance with_functional(MatrixXr f) const;

private:
    MatrixXr a_;
    MatrixXr f_;
    std::vector<std::string> labels_;
};

/// Output matrix given either as a blocked node set (C = I^{[n] \ S}) or explicitly.
class Measurement {
public:
    static Measurement blocked(IndexSet s, Index n);
    static Measurement remaining(IndexSet t, Index n);
    static Measurement explicit_matrix(MatrixXr c);

    /// The p x n output matrix.
    MatrixXr matrix(Index n) const;

private:
    std::optional<IndexSet> measured_;
    MatrixXr c_;
};

/// How rank stack{A - lambda I, C, F} is evaluated.
///  - Composite: rank(M) + rank(F_hat * null(M)) with M = stack{A - lambda I, C} and
///    F_hat the row-normalized functional; the second term is judged against unit scale.
///  - Stacked: a single SVD of the literal stack (debug cross-check).
enum class RankRoute { Composite, Stacked };

struct EigenCertificate {
    std::size_t eigen_index = 0;
    Complex lambda;
    Index rank_with_f = 0;
    Index rank_without_f = 0;
    double margin = 0.0;  // singular-value margin of the deciding rank test

    bool violated() const { return rank_with_f > rank_without_f; }
};

struct ObservabilityReport {
    bool observable = true;
    std::vector<EigenCertificate> per_eigenvalue;
    std::optional<std::size_t> violating;  // position in per_eigenvalue
};

/// Rank pair for one eigenvalue.
EigenCertificate rank_condition(const MatrixXr& a, Complex lambda, const MatrixXr& c,
                                const MatrixXr& f, const Tolerance& tol,
                                RankRoute route = RankRoute::Composite);

/// Decides whether F x can be reconstructed from y = C x for diagonalizable A: true iff
/// rank stack{A - lambda I, C, F} == rank stack{A - lambda I, C} at every distinct
/// eigenvalue. Throws NotDiagonalizable / DimensionMismatch.
ObservabilityReport functional_observability(const MatrixXr& a, const MatrixXr& c,
                                             const MatrixXr& f, const Spectrum& spectrum,
                                             const Tolerance& tol,
                                             RankRoute route = RankRoute::Composite);

bool is_functionally_observable(const MatrixXr& a, const Measurement& c, const MatrixXr& f,
                                const Spectrum& spectrum, const Tolerance& tol,
                                RankRoute route = RankRoute::Composite);

/// True when blocking S leaves F x not inferable as a whole.
bool is_vector_protected(const SystemInstance& instance, const IndexSet& blocked,
                         const Spectrum& spectrum, const Tolerance& tol,
                         RankRoute route = RankRoute::Composite);

/// Entry i is true when blocking S leaves f_i x not inferable.
std::vector<bool> is_entry_protected(const SystemInstance& instance, const IndexSet& blocked,
                                     const Spectrum& spectrum, const Tolerance& tol,
                                     RankRoute route = RankRoute::Composite);

/// Kalman rank test on col{C, CA, ..., CA^{n-1}}; each block row is normalized before
/// the rank decision.
bool is_observable_classical(const MatrixXr& a, const MatrixXr& c, const Tolerance& tol);

}  // namespace netpriv
