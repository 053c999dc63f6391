#include "netpriv/hardness.hpp"

#include <cmath>

#include "netpriv/oracle.hpp"

namespace netpriv {

namespace {

Rational power(const Rational& base, Index exp) {
    Rational out(1);
    for (Index i = 0; i < exp; ++i) out *= base;
    return out;
}

}  // namespace

Rational shifted_determinant(const RationalMatrix& w, const RationalMatrix& w_perp,
                             const Rational& eta) {
    RationalMatrix h(w.rows(), w.rows());
    h.leftCols(w.cols()) = w;
    h.rightCols(w_perp.cols()) =
        w_perp + RationalMatrix::Constant(w_perp.rows(), w_perp.cols(), eta);
    return exact_determinant(h);
}

ReductionInstance build_reduction_instance(const RationalMatrix& w) {
    const Index n = w.rows();
    const Index k = w.cols();
    if (k < 1 || n <= k) throw Error(ErrorCode::DimensionMismatch, "W must be n x k with n > k >= 1");
    if (!is_integer_matrix(w)) throw Error(ErrorCode::InvalidMatrix, "W must have integer entries");
    if (exact_rank(w) != k) throw Error(ErrorCode::RankDeficient, "W does not have full column rank");

    ReductionInstance inst;
    inst.w = w;
    inst.w_perp = rational_kernel(w);
    inst.beta_max = max_abs_entry(w);
    inst.beta_perp_max = max_abs_entry(inst.w_perp);

    // det H(eta) is affine in eta and nonzero at eta = 0, so one of two consecutive
    // integers works.
    bool found = false;
    for (int offset = 1; offset <= 2 && !found; ++offset) {
        const Rational eta = inst.beta_perp_max + offset;
        if (shifted_determinant(w, inst.w_perp, eta) != 0) {
            inst.eta_star = eta;
            found = true;
        }
    }
    if (!found)
        throw std::logic_error("det H(eta) vanished at two consecutive integers; kernel is invalid");

    inst.p = RationalMatrix(n, n);
    inst.p.leftCols(k) = w;
    inst.p.rightCols(n - k) =
        inst.w_perp + RationalMatrix::Constant(n, n - k, inst.eta_star);
    inst.p_inv = exact_inverse(inst.p);

    inst.gamma = RationalMatrix::Zero(n, n);
    for (Index i = 0; i < k; ++i) inst.gamma(i, i) = 1;
    for (Index i = 0; i < n - k; ++i) inst.gamma(k + i, k + i) = Rational(i + 2);

    inst.alpha = 1 + power(Rational(k), k) * power(inst.beta_max, k);
    inst.a = inst.p * inst.gamma * inst.p_inv;
    inst.f = RationalMatrix(1, n);
    Rational pw(1);
    for (Index i = 0; i < n; ++i) {
        pw *= inst.alpha;
        inst.f(0, i) = pw;
    }
    return inst;
}

bool linear_degeneracy_bruteforce(const RationalMatrix& w) {
    const Index n = w.rows();
    const Index k = w.cols();
    if (k < 1 || n <= k) throw Error(ErrorCode::DimensionMismatch, "W must be n x k with n > k >= 1");
    std::vector<bool> mask(static_cast<std::size_t>(n), false);
    std::fill(mask.begin(), mask.begin() + k, true);
    do {
        RationalMatrix sub(k, k);
        Index at = 0;
        for (Index i = 0; i < n; ++i)
            if (mask[static_cast<std::size_t>(i)]) sub.row(at++) = w.row(i);
        if (exact_determinant(sub) == 0) return true;
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return false;
}

std::optional<Index> check_alpha_separation(const ReductionInstance& inst) {
    const Index n = inst.n();
    const Index k = inst.k();
    RationalMatrix combined = RationalMatrix::Zero(1, k);
    for (Index i = 0; i < n; ++i) combined += inst.f(0, i) * inst.w.row(i);

    Index checked = 0;
    std::vector<bool> mask(static_cast<std::size_t>(n), false);
    std::fill(mask.begin(), mask.begin() + (k - 1), true);
    do {
        RationalMatrix stacked(k, k);
        stacked.row(0) = combined;
        Index at = 1;
        for (Index i = 0; i < n; ++i)
            if (mask[static_cast<std::size_t>(i)]) stacked.row(at++) = inst.w.row(i);
        if (exact_rank(stacked.bottomRows(k - 1)) != k - 1) continue;
        ++checked;
        if (exact_determinant(stacked) == 0) return std::nullopt;
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return checked;
}

SystemInstance float_instance(const ReductionInstance& inst) {
    return SystemInstance(to_double(inst.a), to_double(inst.f));
}

ReductionReport verify_reduction(const RationalMatrix& w, const Tolerance& tol, Index max_n) {
    ReductionReport report;
    report.instance = build_reduction_instance(w);
    const ReductionInstance& inst = report.instance;
    if (inst.n() > max_n)
        throw Error(ErrorCode::TooLarge, "reduction oracle limited to n <= " + std::to_string(max_n));

    report.threshold = inst.n() - inst.k();
    report.degenerate = linear_degeneracy_bruteforce(w);
    report.conditioning_warning =
        inst.f(0, inst.n() - 1) > Rational(boost::multiprecision::pow(BigInt(2), 53));

    const SystemInstance sys = float_instance(inst);
    const Spectrum spectrum =
        compute_spectrum(sys.A(), tol, std::max<Index>(kDefaultMultiplicityCap, inst.k()));
    const BlockingSolution sol = brute_force_problem1(sys, spectrum, tol, max_n);
    report.optimum = sol.cardinality;
    report.optimum_set = sol.blocked;
    report.agreement = (report.optimum <= report.threshold) == report.degenerate;
    return report;
}

}  // namespace netpriv
