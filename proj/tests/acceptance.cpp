#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "fixtures.hpp"

using namespace netpriv;
using fixtures::one_based;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
    return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Verdict {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

bool contains(const std::vector<IndexSet>& sets, const IndexSet& s) {
    return std::find(sets.begin(), sets.end(), s) != sets.end();
}

// Stacked-route evaluation of the returned set, independent of the witness shortcut.
bool certified_vector(const SystemInstance& inst, const IndexSet& blocked, const Spectrum& sp,
                      const Tolerance& tol) {
    return is_vector_protected(inst, blocked, sp, tol, RankRoute::Stacked);
}

bool all_true(const std::vector<bool>& v) {
    return std::all_of(v.begin(), v.end(), [](bool b) { return b; });
}

Verdict golden_suite() {
    Verdict v;
    const auto start = Clock::now();
    const Tolerance tol{1e-9};
    const MatrixXr a = fixtures::example_network_a();
    const Spectrum sp = compute_spectrum(a, tol);

    const auto full = solve_problem1(SystemInstance(a, MatrixXr::Identity(6, 6)), sp, tol);
    v.require(full.cardinality == 1 && contains(full.all_optima, one_based({6})), "(a) F = I");

    const auto f2 = solve_problem1(SystemInstance(a, fixtures::example_network_f2()), sp, tol);
    v.require(f2.cardinality == 3 &&
                  f2.all_optima == std::vector<IndexSet>{one_based({2, 5, 6}), one_based({4, 5, 6})},
              "(b) F2");

    const auto f3 = solve_problem1(SystemInstance(a, fixtures::example_network_f3()), sp, tol);
    v.require(f3.cardinality == 2 && contains(f3.all_optima, one_based({5, 6})), "(c) F3");

    const auto g = solve_problem2_greedy(SystemInstance(a, fixtures::example_network_f3()), sp, tol);
    const auto& steps = g.trace.steps;
    v.require(g.solution.blocked == one_based({2, 3, 4, 5, 6}) && steps.size() == 3 &&
                  steps[0].allowed_after == one_based({1, 2, 3, 4}) &&
                  steps[1].allowed_after == one_based({1, 2, 3}) &&
                  steps[2].allowed_after == one_based({1}),
              "(d) greedy F3");

    const double secs = seconds_since(start);
    v.require(secs < 1.0, "runtime");
    v.detail << " runtime " << secs << " s";
    return v;
}

Verdict oracle_equivalence(const std::vector<fixtures::RandomInstance>& corpus, const Tolerance& tol,
                           double build_secs) {
    Verdict v;
    const auto start = Clock::now();
    int agree = 0, certified = 0, repeated = 0;
    for (const auto& c : corpus) {
        const auto sol = solve_problem1(c.instance, c.spectrum, tol);
        const auto oracle = brute_force_problem1(c.instance, c.spectrum, tol);
        agree += sol.cardinality == oracle.cardinality;
        certified += certified_vector(c.instance, sol.blocked, c.spectrum, tol);
        repeated += c.repeated;
    }
    const int total = static_cast<int>(corpus.size());
    const double secs = seconds_since(start) + build_secs;
    v.require(agree == total, "cardinality agreement");
    v.require(certified == total, "certification");
    v.require(secs < 60.0, "runtime");
    v.detail << " " << agree << "/" << total << " agree, " << certified << "/" << total
             << " certified (stacked rank), " << repeated << " with multiplicity 2, runtime " << secs << " s";
    return v;
}

Verdict greedy_soundness(const std::vector<fixtures::RandomInstance>& corpus, const Tolerance& tol) {
    Verdict v;
    int feasible = 0, bounded = 0, strict = 0;
    Index gap_sum = 0, gap_max = 0;
    for (const auto& c : corpus) {
        const auto g = solve_problem2_greedy(c.instance, c.spectrum, tol);
        const auto oracle = brute_force_problem2(c.instance, c.spectrum, tol);
        feasible += all_true(is_entry_protected(c.instance, g.solution.blocked, c.spectrum, tol, RankRoute::Stacked));
        bounded += g.solution.cardinality >= oracle.cardinality;
        const Index gap = g.solution.cardinality - oracle.cardinality;
        strict += gap > 0;
        gap_sum += gap;
        gap_max = std::max(gap_max, gap);
    }
    const Tolerance golden{1e-9};
    const MatrixXr a = fixtures::example_network_a();
    const Spectrum sp = compute_spectrum(a, golden);
    const SystemInstance f3(a, fixtures::example_network_f3());
    const Index example_gap = solve_problem2_greedy(f3, sp, golden).solution.cardinality -
                         brute_force_problem2(f3, sp, golden).cardinality;

    const int total = static_cast<int>(corpus.size());
    v.require(feasible == total, "entry-wise feasibility");
    v.require(bounded == total, "greedy >= oracle");
    v.require(example_gap == 0, "example network gap");
    v.detail << " " << feasible << "/" << total << " feasible, " << bounded << "/" << total
             << " >= oracle, strict gap on " << strict << " (mean " << static_cast<double>(gap_sum) / total
             << ", max " << gap_max << "), example network gap " << example_gap;
    return v;
}

Verdict reduction_equivalence(const std::vector<RationalMatrix>& corpus) {
    Verdict v;
    const auto start = Clock::now();
    const Tolerance tol{1e-8};
    int agree = 0, degenerate = 0, warnings = 0;
    std::ostringstream failures;
    for (const auto& w : corpus) {
        bool ok = false;
        try {
            const ReductionReport r = verify_reduction(w, tol);
            ok = r.agreement;
            degenerate += r.degenerate;
            warnings += r.conditioning_warning;
            if (!ok)
                failures << " n=" << r.instance.n() << ",k=" << r.instance.k() << ",alpha=" << r.instance.alpha
                         << ",degenerate=" << r.degenerate << ",optimum=" << r.optimum << ";";
        } catch (const Error& e) {
            failures << " " << e.what() << ";";
        }
        agree += ok;
    }
    const int total = static_cast<int>(corpus.size());
    const double secs = seconds_since(start);
    v.require(agree == total, "agreement");
    v.require(secs < 300.0, "runtime");
    v.detail << " " << agree << "/" << total << " agree (" << degenerate << " degenerate, " << warnings
             << " with alpha^n > 2^53), runtime " << secs << " s" << failures.str();
    return v;
}

Verdict pbh_equivalence(const Tolerance& tol) {
    Verdict v;
    std::mt19937 rng(505);
    int agree = 0, observable = 0;
    const int total = 200;
    for (int t = 0; t < total; ++t) {
        const Index n = fixtures::uniform(rng, 2, 6);
        const auto s = t % 4 == 3 && n >= 3 ? fixtures::constructed_multiplicity_two(rng, n, tol)
                                            : fixtures::random_diagonalizable(rng, n, tol);
        const Index p = fixtures::uniform(rng, 1, static_cast<int>(n));
        MatrixXr c(p, n);
        for (Index i = 0; i < c.size(); ++i) c(i) = fixtures::uniform(rng, 0, 1) ? 0 : fixtures::uniform(rng, -2, 2);
        const bool functional = is_functionally_observable(s.a, Measurement::explicit_matrix(c),
                                                           MatrixXr::Identity(n, n), s.spectrum, tol);
        const bool classical = is_observable_classical(s.a, c, tol);
        agree += functional == classical;
        observable += classical;
    }
    v.require(agree == total, "agreement");
    v.detail << " " << agree << "/" << total << " agree (" << observable << " observable)";
    return v;
}

// Sparse lower-triangular network with distinct integer self-loops 1..n.
MatrixXr simple_spectrum_network(std::mt19937& rng, Index n) {
    std::vector<int> diag(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) diag[static_cast<std::size_t>(i)] = static_cast<int>(i + 1);
    std::shuffle(diag.begin(), diag.end(), rng);
    MatrixXr a = MatrixXr::Zero(n, n);
    for (Index i = 0; i < n; ++i) {
        a(i, i) = diag[static_cast<std::size_t>(i)];
        for (Index j = 0; j < i; ++j)
            if (fixtures::uniform(rng, 0, 99) < 3) a(i, j) = fixtures::uniform(rng, 1, 3);
    }
    return a;
}

// P D P^{-1} with a sparse unit-lower-triangular P and eigenvalue 0 repeated three times.
MatrixXr multiplicity_three_network(std::mt19937& rng, Index n) {
    RationalMatrix p = RationalMatrix::Identity(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < i; ++j)
            if (fixtures::uniform(rng, 0, 99) < 5) p(i, j) = fixtures::uniform(rng, 0, 1) ? 1 : -1;
    RationalMatrix d = RationalMatrix::Zero(n, n);
    for (Index i = 3; i < n; ++i) d(i, i) = static_cast<int>(i - 2);
    return to_double(p * d * exact_inverse(p));
}

Verdict complexity_smoke() {
    Verdict v;
    const Tolerance tol;
    std::mt19937 rng(606);

    const Index n1 = 100;
    const MatrixXr a1 = simple_spectrum_network(rng, n1);
    const SystemInstance i1(a1, fixtures::random_functional(rng, 3, n1));
    auto start = Clock::now();
    const Spectrum s1 = compute_spectrum(a1, tol);
    const auto sol1 = solve_problem1(i1, s1, tol);
    const double t1 = seconds_since(start);
    v.require(s1.max_multiplicity == 1, "n=100 spectrum simple");
    v.require(t1 < 10.0, "n=100 runtime");

    const Index n2 = 30;
    const MatrixXr a2 = multiplicity_three_network(rng, n2);
    const SystemInstance i2(a2, fixtures::random_functional(rng, 3, n2));
    start = Clock::now();
    const Spectrum s2 = compute_spectrum(a2, tol);
    const auto sol2 = solve_problem1(i2, s2, tol);
    const double t2 = seconds_since(start);
    v.require(s2.max_multiplicity == 3, "n=30 multiplicity 3");
    v.require(t2 < 60.0, "n=30 runtime");

    v.detail << " n=100: |S|=" << sol1.cardinality << " in " << t1 << " s; n=30 (multiplicity "
             << s2.max_multiplicity << "): |S|=" << sol2.cardinality << " in " << t2 << " s";
    return v;
}

Verdict construction_exactness(const std::vector<RationalMatrix>& corpus) {
    Verdict v;
    int exact = 0, spectrum_ok = 0;
    for (const auto& w : corpus) {
        const ReductionInstance inst = build_reduction_instance(w);
        const Index n = inst.n(), k = inst.k();
        exact += inst.a * inst.p == inst.p * inst.gamma;
        // Geometric multiplicity k at 1 and one dimension at each of 2..n-k+1 accounts
        // for all n eigenvalues.
        const RationalMatrix id = RationalMatrix::Identity(n, n);
        bool ok = exact_rank(RationalMatrix(inst.a - id)) == n - k;
        for (Index j = 2; j <= n - k + 1; ++j) ok = ok && exact_rank(RationalMatrix(inst.a - Rational(j) * id)) == n - 1;
        spectrum_ok += ok;
    }
    const int total = static_cast<int>(corpus.size());
    v.require(exact == total, "A P = P Gamma");
    v.require(spectrum_ok == total, "eigenvalue multiset");
    v.detail << " " << exact << "/" << total << " exact similarity, " << spectrum_ok << "/" << total
             << " eigenvalue multiset";
    return v;
}

}  // namespace

int main() {
    const Tolerance tol;
    int failed = 0;
    auto report = [&](int id, const char* name, const Verdict& v) {
        std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << id << " " << name << ":" << v.detail.str()
                  << std::endl;
        failed += !v.pass;
    };

    report(1, "golden example suite", golden_suite());

    const auto build = Clock::now();
    const auto corpus = fixtures::oracle_corpus(20240601, 200, 50, tol);
    const double build_secs = seconds_since(build);
    report(2, "problem 1 oracle equivalence", oracle_equivalence(corpus, tol, build_secs));
    report(3, "problem 2 greedy soundness", greedy_soundness(corpus, tol));

    const auto reduction = fixtures::reduction_corpus(500, 20240602);
    report(4, "reduction equivalence", reduction_equivalence(reduction));
    report(5, "PBH equivalence", pbh_equivalence(tol));
    report(6, "complexity smoke", complexity_smoke());
    report(7, "hardness construction exactness", construction_exactness(reduction));
    return failed == 0 ? 0 : 1;
}
