#include "netpriv/fobs.hpp"

#include <cmath>

namespace netpriv {

SystemInstance::SystemInstance(MatrixXr a, MatrixXr f, std::vector<std::string> labels)
    : a_(std::move(a)), f_(std::move(f)), labels_(std::move(labels)) {
    require_finite(a_, "A");
    require_finite(f_, "F");
    if (a_.rows() != a_.cols()) throw Error(ErrorCode::NonSquare, "A must be square");
    if (f_.cols() != a_.rows())
        throw Error(ErrorCode::DimensionMismatch, "F must have n = " + std::to_string(n()) +
                                                      " columns");
    for (Index i = 0; i < f_.rows(); ++i)
        if (f_.row(i).isZero(0.0))
            throw Error(ErrorCode::ZeroFunctional, "row " + std::to_string(i + 1) + " of F is zero");
    if (!labels_.empty() && static_cast<Index>(labels_.size()) != n())
        throw Error(ErrorCode::DimensionMismatch, "label count differs from n");
}

std::vector<Edge> SystemInstance::edges() const {
    std::vector<Edge> out;
    for (Index j = 0; j < n(); ++j)
        for (Index i = 0; i < n(); ++i)
            if (i != j && a_(j, i) != 0.0) out.push_back({i, j, a_(j, i)});
    return out;
}

SystemInstance SystemInstance::with_functional(MatrixXr f) const {
    return SystemInstance(a_, std::move(f), labels_);
}

Measurement Measurement::blocked(IndexSet s, Index n) {
    Measurement m;
    m.measured_ = set_difference(full_set(n), normalized_set(std::move(s), n));
    return m;
}

Measurement Measurement::remaining(IndexSet t, Index n) {
    Measurement m;
    m.measured_ = normalized_set(std::move(t), n);
    return m;
}

Measurement Measurement::explicit_matrix(MatrixXr c) {
    if (c.cols() < 1 || !c.allFinite())
        throw Error(ErrorCode::InvalidMatrix, "C must have columns and finite entries");
    Measurement m;
    m.c_ = std::move(c);
    return m;
}

MatrixXr Measurement::matrix(Index n) const {
    if (measured_) return selector(*measured_, n);
    if (c_.cols() != n) throw Error(ErrorCode::DimensionMismatch, "C must have n columns");
    return c_;
}

EigenCertificate rank_condition(const MatrixXr& a, Complex lambda, const MatrixXr& c,
                                const MatrixXr& f, const Tolerance& tol, RankRoute route) {
    const Index n = a.rows();
    const MatrixXc shifted = a.cast<Complex>() - lambda * MatrixXc::Identity(n, n);
    const MatrixXc base = vstack<Complex>({shifted, normalize_rows(c).cast<Complex>()});
    const MatrixXc f_hat = normalize_rows(f).cast<Complex>();

    EigenCertificate cert;
    cert.lambda = lambda;
    if (route == RankRoute::Stacked) {
        const RankProfile without = rank_profile(base, tol);
        const RankProfile with = rank_profile(vstack<Complex>({base, f_hat}), tol);
        cert.rank_without_f = without.rank;
        cert.rank_with_f = with.rank;
        cert.margin = std::min(without.margin(), with.margin());
        return cert;
    }

    const NullSpace<Complex> kernel = null_space(base, tol);
    cert.rank_without_f = kernel.profile.rank;
    cert.rank_with_f = cert.rank_without_f;
    cert.margin = kernel.profile.margin();
    if (kernel.basis.cols() == 0 || f_hat.rows() == 0) return cert;
    const RankProfile extra = rank_profile(MatrixXc(f_hat * kernel.basis), tol, 1.0);
    cert.rank_with_f += extra.rank;
    cert.margin = std::min(cert.margin, extra.margin());
    return cert;
}

ObservabilityReport functional_observability(const MatrixXr& a, const MatrixXr& c,
                                             const MatrixXr& f, const Spectrum& spectrum,
                                             const Tolerance& tol, RankRoute route) {
    if (!spectrum.diagonalizable)
        throw Error(ErrorCode::NotDiagonalizable, "rank criterion requires diagonalizable A");
    const Index n = a.rows();
    if (a.cols() != n || spectrum.n != n || f.cols() != n || (c.rows() > 0 && c.cols() != n))
        throw Error(ErrorCode::DimensionMismatch, "A, C, F and the spectrum disagree on n");

    ObservabilityReport report;
    for (std::size_t i = 0; i < spectrum.spaces.size(); ++i) {
        EigenCertificate cert = rank_condition(a, spectrum.spaces[i].lambda, c, f, tol, route);
        cert.eigen_index = i;
        if (cert.violated() && !report.violating) {
            report.observable = false;
            report.violating = report.per_eigenvalue.size();
        }
        report.per_eigenvalue.push_back(cert);
    }
    return report;
}

bool is_functionally_observable(const MatrixXr& a, const Measurement& c, const MatrixXr& f,
                                const Spectrum& spectrum, const Tolerance& tol, RankRoute route) {
    return functional_observability(a, c.matrix(a.rows()), f, spectrum, tol, route).observable;
}

bool is_vector_protected(const SystemInstance& instance, const IndexSet& blocked,
                         const Spectrum& spectrum, const Tolerance& tol, RankRoute route) {
    return !is_functionally_observable(instance.A(), Measurement::blocked(blocked, instance.n()),
                                       instance.F(), spectrum, tol, route);
}

std::vector<bool> is_entry_protected(const SystemInstance& instance, const IndexSet& blocked,
                                     const Spectrum& spectrum, const Tolerance& tol,
                                     RankRoute route) {
    const MatrixXr c = Measurement::blocked(blocked, instance.n()).matrix(instance.n());
    std::vector<bool> out;
    for (Index i = 0; i < instance.r(); ++i) {
        const MatrixXr row = instance.F().row(i);
        out.push_back(!functional_observability(instance.A(), c, row, spectrum, tol, route).observable);
    }
    return out;
}

bool is_observable_classical(const MatrixXr& a, const MatrixXr& c, const Tolerance& tol) {
    const Index n = a.rows();
    if (a.cols() != n || c.cols() != n)
        throw Error(ErrorCode::DimensionMismatch, "A must be square and C must have n columns");
    if (c.rows() == 0) return n == 0;
    MatrixXr obs(c.rows() * n, n);
    MatrixXr block = c;
    for (Index k = 0; k < n; ++k) {
        block = normalize_rows(block);
        obs.middleRows(k * c.rows(), c.rows()) = block;
        block = block * a;
    }
    return numerical_rank(obs, tol) == n;
}

}  // namespace netpriv
