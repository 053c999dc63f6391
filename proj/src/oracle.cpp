#include "netpriv/oracle.hpp"

#include <functional>

namespace netpriv {

namespace {

using Predicate = std::function<bool(const MatrixXr& measured)>;

BlockingSolution exhaustive(const SystemInstance& instance, const Spectrum& spectrum, Index max_n,
                            const Predicate& protects) {
    const Index n = instance.n();
    if (n > max_n)
        throw Error(ErrorCode::TooLarge, "oracle limited to n <= " + std::to_string(max_n) +
                                             ", got n = " + std::to_string(n));
    if (!spectrum.diagonalizable)
        throw Error(ErrorCode::NotDiagonalizable, "oracle requires diagonalizable A");

    BlockingSolution sol;
    const IndexSet everything = full_set(n);
    for (Index size = 0; size <= n && sol.all_optima.empty(); ++size) {
        std::vector<bool> mask(static_cast<std::size_t>(n), false);
        std::fill(mask.begin(), mask.begin() + size, true);
        // prev_permutation over a descending mask walks subsets in lexicographic order.
        do {
            IndexSet blocked;
            for (Index i = 0; i < n; ++i)
                if (mask[static_cast<std::size_t>(i)]) blocked.push_back(i);
            const MatrixXr measured = selector(set_difference(everything, blocked), n);
            if (protects(measured)) sol.all_optima.push_back(std::move(blocked));
        } while (std::prev_permutation(mask.begin(), mask.end()));
    }
    if (sol.all_optima.empty()) throw Error(ErrorCode::CertificationFailed, "no feasible set found");
    sol.blocked = sol.all_optima.front();
    sol.cardinality = static_cast<Index>(sol.blocked.size());
    return sol;
}

}  // namespace

BlockingSolution brute_force_problem1(const SystemInstance& instance, const Spectrum& spectrum,
                                      const Tolerance& tol, Index max_n, RankRoute route) {
    BlockingSolution sol =
        exhaustive(instance, spectrum, max_n, [&](const MatrixXr& measured) {
            return !functional_observability(instance.A(), measured, instance.F(), spectrum, tol,
                                             route)
                        .observable;
        });
    const Index n = instance.n();
    sol.certificate = functional_observability(
        instance.A(), Measurement::blocked(sol.blocked, n).matrix(n), instance.F(), spectrum, tol,
        route);
    return sol;
}

BlockingSolution brute_force_problem2(const SystemInstance& instance, const Spectrum& spectrum,
                                      const Tolerance& tol, Index max_n, RankRoute route) {
    return exhaustive(instance, spectrum, max_n, [&](const MatrixXr& measured) {
        for (Index i = 0; i < instance.r(); ++i) {
            const MatrixXr row = instance.F().row(i);
            if (functional_observability(instance.A(), measured, row, spectrum, tol, route)
                    .observable)
                return false;
        }
        return true;
    });
}

}  // namespace netpriv
