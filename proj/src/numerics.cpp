#include "netpriv/numerics.hpp"

#include <cmath>
#include <limits>

namespace netpriv {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidMatrix: return "InvalidMatrix";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NotDiagonalizable: return "NotDiagonalizable";
        case ErrorCode::MultiplicityBoundExceeded: return "MultiplicityBoundExceeded";
        case ErrorCode::ZeroFunctional: return "ZeroFunctional";
        case ErrorCode::RankDeficient: return "RankDeficient";
        case ErrorCode::EmptyRank: return "EmptyRank";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::CertificationFailed: return "CertificationFailed";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::NonSquare: return "NonSquare";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::EmptyCluster: return "EmptyCluster";
        case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

void Tolerance::validate() const {
    const auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
    if (!positive(rank_rel) || !positive(rank_abs) || !positive(cluster_rel) ||
        !positive(support_rel))
        throw Error(ErrorCode::InvalidMatrix, "tolerances must be finite and strictly positive");
    if (rank_rel >= 1.0) throw Error(ErrorCode::InvalidMatrix, "rank_rel must be < 1");
}

double rank_threshold(double scale, Index rows, Index cols, const Tolerance& tol) {
    return std::max(tol.rank_abs,
                    tol.rank_rel * scale * static_cast<double>(std::max(rows, cols)));
}

double RankProfile::margin() const {
    if (threshold <= 0.0) return std::numeric_limits<double>::infinity();
    double m = std::numeric_limits<double>::infinity();
    if (rank > 0) m = std::min(m, smallest_kept / threshold);
    if (largest_dropped > 0.0) m = std::min(m, threshold / largest_dropped);
    return m;
}

namespace detail {

RankProfile profile_from_singular_values(const Eigen::VectorXd& sv, double scale, Index rows,
                                         Index cols, const Tolerance& tol) {
    RankProfile p;
    p.threshold = rank_threshold(scale, rows, cols, tol);
    // BDCSVD returns singular values in decreasing order.
    for (Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > p.threshold) {
            ++p.rank;
            p.smallest_kept = sv(i);
        } else {
            p.largest_dropped = sv(i);
            break;
        }
    }
    return p;
}

}  // namespace detail

MatrixXr selector(std::span<const Index> rows, Index n) {
    MatrixXr s = MatrixXr::Zero(static_cast<Index>(rows.size()), n);
    for (Index i = 0; i < s.rows(); ++i) s(i, rows[static_cast<std::size_t>(i)]) = 1.0;
    return s;
}

MatrixXr normalize_rows(const MatrixXr& m) {
    MatrixXr out = m;
    for (Index i = 0; i < out.rows(); ++i) {
        const double norm = out.row(i).norm();
        if (norm > 0.0) out.row(i) /= norm;
    }
    return out;
}

void require_finite(const MatrixXr& m, const char* what) {
    if (m.rows() < 1 || m.cols() < 1)
        throw Error(ErrorCode::InvalidMatrix, std::string(what) + " must be non-empty");
    if (!m.allFinite())
        throw Error(ErrorCode::InvalidMatrix, std::string(what) + " has non-finite entries");
}

IndexSet full_set(Index n) {
    IndexSet s(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = i;
    return s;
}

IndexSet set_difference(std::span<const Index> a, std::span<const Index> b) {
    IndexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

IndexSet set_union(std::span<const Index> a, std::span<const Index> b) {
    IndexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool is_subset(std::span<const Index> a, std::span<const Index> b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool shortlex_less(const IndexSet& a, const IndexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

IndexSet normalized_set(std::vector<Index> s, Index n) {
    for (Index v : s)
        if (v < 0 || v >= n)
            throw Error(ErrorCode::IndexOutOfRange,
                        "index " + std::to_string(v + 1) + " outside 1.." + std::to_string(n));
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

}  // namespace netpriv
