#include "netpriv/spectral.hpp"

#include <cmath>
#include <numeric>

namespace netpriv {

std::vector<std::size_t> Spectrum::representatives(bool include_conjugates) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < spaces.size(); ++i) {
        if (!include_conjugates && spaces[i].conjugate_partner && spaces[i].lambda.imag() < 0.0)
            continue;
        out.push_back(i);
    }
    return out;
}

IndexSet eigenbasis_support(const EigenSpace& space, const Tolerance& tol) {
    const MatrixXc& x = space.basis;
    IndexSet support;
    if (x.size() == 0) return support;
    const double scale = x.cwiseAbs().maxCoeff();
    for (Index j = 0; j < x.rows(); ++j)
        if (x.row(j).cwiseAbs().maxCoeff() > tol.support_rel * scale) support.push_back(j);
    return support;
}

namespace {

std::vector<std::vector<Complex>> cluster_eigenvalues(std::vector<Complex> values, double radius) {
    std::stable_sort(values.begin(), values.end(), [](const Complex& a, const Complex& b) {
        const double ma = std::abs(a);
        const double mb = std::abs(b);
        if (ma != mb) return ma < mb;
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    std::vector<bool> taken(values.size(), false);
    std::vector<std::vector<Complex>> clusters;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (taken[i]) continue;
        std::vector<Complex> cluster{values[i]};
        taken[i] = true;
        for (std::size_t j = i + 1; j < values.size(); ++j) {
            if (!taken[j] && std::abs(values[j] - values[i]) <= radius) {
                cluster.push_back(values[j]);
                taken[j] = true;
            }
        }
        clusters.push_back(std::move(cluster));
    }
    return clusters;
}

}  // namespace

Spectrum decompose(const MatrixXr& a, const Tolerance& tol) {
    tol.validate();
    require_finite(a, "A");
    if (a.rows() != a.cols()) throw Error(ErrorCode::NonSquare, "A must be square");
    const Index n = a.rows();

    Spectrum spec;
    spec.n = n;
    const double norm = a.norm();
    spec.cluster_radius = tol.cluster_rel * (norm > 0.0 ? norm : 1.0);

    Eigen::EigenSolver<MatrixXr> solver(a, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw Error(ErrorCode::InvalidMatrix, "eigenvalue iteration did not converge");
    const Eigen::VectorXcd raw = solver.eigenvalues();
    std::vector<Complex> values(raw.data(), raw.data() + raw.size());

    const MatrixXc ac = a.cast<Complex>();
    for (const auto& cluster : cluster_eigenvalues(values, spec.cluster_radius)) {
        Complex mean = std::accumulate(cluster.begin(), cluster.end(), Complex(0.0, 0.0)) /
                       static_cast<double>(cluster.size());
        if (std::abs(mean.imag()) <= spec.cluster_radius) mean = Complex(mean.real(), 0.0);

        EigenSpace space;
        space.lambda = mean;
        space.basis = null_space_basis(ac - mean * MatrixXc::Identity(n, n), tol);
        space.multiplicity = space.basis.cols();
        spec.spaces.push_back(std::move(space));
    }

    // Pair conjugates; the partner with negative imaginary part reuses the conjugated
    // basis so that both members of a pair make identical rank decisions.
    for (std::size_t i = 0; i < spec.spaces.size(); ++i) {
        EigenSpace& s = spec.spaces[i];
        if (s.is_real() || s.conjugate_partner || s.lambda.imag() < 0.0) continue;
        for (std::size_t j = 0; j < spec.spaces.size(); ++j) {
            EigenSpace& t = spec.spaces[j];
            if (j == i || t.conjugate_partner || t.lambda.imag() >= 0.0) continue;
            if (std::abs(t.lambda - std::conj(s.lambda)) <= 2.0 * spec.cluster_radius) {
                s.conjugate_partner = j;
                t.conjugate_partner = i;
                t.lambda = std::conj(s.lambda);
                t.basis = s.basis.conjugate();
                t.multiplicity = s.multiplicity;
                break;
            }
        }
    }

    Index total = 0;
    for (EigenSpace& s : spec.spaces) {
        s.support = eigenbasis_support(s, tol);
        total += s.multiplicity;
        spec.max_multiplicity = std::max(spec.max_multiplicity, s.multiplicity);
    }

    spec.diagonalizable = false;
    if (total == n) {
        MatrixXc p(n, n);
        Index at = 0;
        for (const EigenSpace& s : spec.spaces) {
            p.middleCols(at, s.multiplicity) = s.basis;
            at += s.multiplicity;
        }
        spec.diagonalizable = numerical_rank(p, tol) == n;
    }
    return spec;
}

Spectrum compute_spectrum(const MatrixXr& a, const Tolerance& tol, Index multiplicity_cap) {
    Spectrum spec = decompose(a, tol);
    if (!spec.diagonalizable)
        throw Error(ErrorCode::NotDiagonalizable,
                    "geometric multiplicities do not add up to n; A is not diagonalizable");
    if (spec.max_multiplicity > multiplicity_cap)
        throw Error(ErrorCode::MultiplicityBoundExceeded,
                    "eigenvalue with geometric multiplicity " +
                        std::to_string(spec.max_multiplicity) + " exceeds cap " +
                        std::to_string(multiplicity_cap));
    return spec;
}

}  // namespace netpriv
