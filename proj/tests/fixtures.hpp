#pragma once

#include <algorithm>
#include <random>
#include <set>

#include "netpriv/greedy.hpp"
#include "netpriv/hardness.hpp"
#include "netpriv/oracle.hpp"

namespace fixtures {

using namespace netpriv;

// The six-node example network (lower triangular, eigenvalues 1, 5, 4, 2, 6, 9).
inline MatrixXr example_network_a() {
    MatrixXr a(6, 6);
    a << 1, 0, 0, 0, 0, 0,
         3, 5, 2, 0, 0, 0,
         4, 0, 4, 0, 0, 0,
         2, 0, 0, 2, 0, 0,
         0, 2, 1, 3, 6, 0,
         0, 0, 0, 5, 4, 9;
    return a;
}

// Average of x2, x3, x4.
inline MatrixXr example_network_f2() {
    MatrixXr f(1, 6);
    f << 0, 1, 1, 1, 0, 0;
    return f / 3.0;
}

// Rows e3, e4, e5.
inline MatrixXr example_network_f3() {
    MatrixXr f = MatrixXr::Zero(3, 6);
    f(0, 2) = f(1, 3) = f(2, 4) = 1.0;
    return f;
}

inline IndexSet one_based(std::initializer_list<Index> s) {
    IndexSet out;
    for (Index i : s) out.push_back(i - 1);
    return out;
}

inline std::size_t find_eigenvalue(const Spectrum& sp, Complex lambda) {
    for (std::size_t i = 0; i < sp.spaces.size(); ++i)
        if (std::abs(sp.spaces[i].lambda - lambda) < 1e-6) return i;
    throw std::runtime_error("eigenvalue not found");
}

inline int uniform(std::mt19937& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Distinct clusters are at least `gap` apart; keeps randomly drawn integer matrices away
// from nearly defective spectra.
inline bool well_separated(const Spectrum& sp, double gap = 1e-3) {
    for (std::size_t i = 0; i < sp.spaces.size(); ++i)
        for (std::size_t j = i + 1; j < sp.spaces.size(); ++j)
            if (std::abs(sp.spaces[i].lambda - sp.spaces[j].lambda) < gap) return false;
    return true;
}

struct Sample {
    MatrixXr a;
    Spectrum spectrum;
};

// Integer A with entries in -3..3 (about half zero), rejection-sampled until it is
// diagonalizable with a well-separated spectrum.
inline Sample random_diagonalizable(std::mt19937& rng, Index n, const Tolerance& tol) {
    for (;;) {
        MatrixXr a(n, n);
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j) a(i, j) = uniform(rng, 0, 1) ? uniform(rng, -3, 3) : 0;
        try {
            Spectrum sp = compute_spectrum(a, tol);
            if (well_separated(sp)) return {a, std::move(sp)};
        } catch (const Error&) {
        }
    }
}

// Unit lower times unit upper integer factors, so P^{-1} is integral too.
inline RationalMatrix random_unimodular(std::mt19937& rng, Index n) {
    RationalMatrix l = RationalMatrix::Identity(n, n);
    RationalMatrix u = RationalMatrix::Identity(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < i; ++j) {
            l(i, j) = uniform(rng, -1, 1);
            u(j, i) = uniform(rng, -1, 1);
        }
    return l * u;
}

// A = P D P^{-1} with D = diag(mu, mu, d3, ..., dn): a repeated eigenvalue of geometric
// multiplicity two.
inline Sample constructed_multiplicity_two(std::mt19937& rng, Index n, const Tolerance& tol) {
    for (;;) {
        std::vector<int> values;
        while (static_cast<Index>(values.size()) < n - 1) {
            const int v = uniform(rng, -4, 4);
            if (std::find(values.begin(), values.end(), v) == values.end()) values.push_back(v);
        }
        RationalMatrix d = RationalMatrix::Zero(n, n);
        d(0, 0) = values[0];
        for (Index i = 1; i < n; ++i) d(i, i) = values[static_cast<std::size_t>(i - 1)];
        const RationalMatrix p = random_unimodular(rng, n);
        const MatrixXr a = to_double(p * d * exact_inverse(p));
        try {
            Spectrum sp = compute_spectrum(a, tol);
            if (sp.max_multiplicity == 2 && well_separated(sp)) return {a, std::move(sp)};
        } catch (const Error&) {
        }
    }
}

// Integer rows in -2..2 with no zero row.
inline MatrixXr random_functional(std::mt19937& rng, Index r, Index n) {
    MatrixXr f(r, n);
    for (Index i = 0; i < r; ++i) {
        do {
            for (Index j = 0; j < n; ++j) f(i, j) = uniform(rng, 0, 2) ? 0 : uniform(rng, -2, 2);
        } while (f.row(i).isZero());
    }
    return f;
}

struct RandomInstance {
    SystemInstance instance;
    Spectrum spectrum;
    bool repeated = false;
};

// `simple` random diagonalizable matrices followed by `repeated` constructed ones, n in
// 4..7, with random F of 1..3 rows.
inline std::vector<RandomInstance> oracle_corpus(unsigned seed, int simple, int repeated,
                                                 const Tolerance& tol) {
    std::mt19937 rng(seed);
    std::vector<RandomInstance> out;
    for (int t = 0; t < simple + repeated; ++t) {
        const Index n = uniform(rng, 4, 7);
        Sample s = t < simple ? random_diagonalizable(rng, n, tol) : constructed_multiplicity_two(rng, n, tol);
        MatrixXr f = random_functional(rng, uniform(rng, 1, 3), n);
        out.push_back({SystemInstance(s.a, f), std::move(s.spectrum), t >= simple});
    }
    return out;
}

// Canonical form of W under row permutation, row sign, column permutation and column
// sign, all of which preserve both the degeneracy of W and the reduction's answer.
inline std::vector<int> canonical_w(const std::vector<int>& w, int n, int k) {
    std::vector<int> perm(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) perm[static_cast<std::size_t>(j)] = j;
    std::vector<int> best;
    do {
        for (int signs = 0; signs < (1 << k); ++signs) {
            std::vector<std::vector<int>> rows(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(k)));
            for (int i = 0; i < n; ++i) {
                auto& row = rows[static_cast<std::size_t>(i)];
                for (int j = 0; j < k; ++j) {
                    const int v = w[static_cast<std::size_t>(i * k + perm[static_cast<std::size_t>(j)])];
                    row[static_cast<std::size_t>(j)] = (signs >> j & 1) ? -v : v;
                }
                const auto lead = std::find_if(row.begin(), row.end(), [](int v) { return v != 0; });
                if (lead != row.end() && *lead < 0)
                    for (int& v : row) v = -v;
            }
            std::sort(rows.begin(), rows.end());
            std::vector<int> flat;
            for (const auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
            if (best.empty() || flat < best) best = std::move(flat);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline long long small_det(const std::vector<int>& flat, int k, const std::vector<int>& rows) {
    auto at = [&](int r, int c) -> long long {
        return flat[static_cast<std::size_t>(rows[static_cast<std::size_t>(r)] * k + c)];
    };
    if (k == 1) return at(0, 0);
    if (k == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
           at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
           at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
}

// Full column rank iff some k x k row minor is nonzero (k <= 3).
inline bool full_column_rank(const std::vector<int>& flat, int n, int k) {
    std::vector<bool> mask(static_cast<std::size_t>(n), false);
    std::fill(mask.begin(), mask.begin() + k, true);
    do {
        std::vector<int> rows;
        for (int i = 0; i < n; ++i)
            if (mask[static_cast<std::size_t>(i)]) rows.push_back(i);
        if (small_det(flat, k, rows) != 0) return true;
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return false;
}

inline RationalMatrix w_from_flat(const std::vector<int>& flat, int n, int k) {
    RationalMatrix w(n, k);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) w(i, j) = flat[static_cast<std::size_t>(i * k + j)];
    return w;
}

// Full-column-rank W with n in 3..5, k in 1..n-1, entries in -2..2, one representative
// per symmetry class. Shapes with at most 8 entries are enumerated exhaustively; the
// rest are sampled. Every shape gets an equal share of `cap`; shares an exhaustive
// shape cannot fill go to the sampled ones. A shape with more representatives than its
// share keeps a seeded random subset.
inline std::vector<RationalMatrix> reduction_corpus(std::size_t cap, unsigned seed) {
    std::vector<std::pair<int, int>> exhaustive, sampled;
    for (int n = 3; n <= 5; ++n)
        for (int k = 1; k < n && k <= 3; ++k) (n * k <= 8 ? exhaustive : sampled).emplace_back(n, k);
    const std::size_t share = cap / (exhaustive.size() + sampled.size());
    std::mt19937 rng(seed);
    std::vector<RationalMatrix> out;

    auto keep = [&](std::set<std::vector<int>>& reps, std::size_t limit, int n, int k) {
        std::vector<std::vector<int>> chosen(reps.begin(), reps.end());
        if (chosen.size() > limit) {
            std::shuffle(chosen.begin(), chosen.end(), rng);
            chosen.resize(limit);
            std::sort(chosen.begin(), chosen.end());
        }
        for (const auto& flat : chosen) out.push_back(w_from_flat(flat, n, k));
    };

    for (auto [n, k] : exhaustive) {
        const int cells = n * k;
        std::set<std::vector<int>> reps;
        std::vector<int> flat(static_cast<std::size_t>(cells), -2);
        for (;;) {
            if (full_column_rank(flat, n, k)) reps.insert(canonical_w(flat, n, k));
            int pos = 0;
            while (pos < cells && flat[static_cast<std::size_t>(pos)] == 2) flat[static_cast<std::size_t>(pos++)] = -2;
            if (pos == cells) break;
            ++flat[static_cast<std::size_t>(pos)];
        }
        keep(reps, share, n, k);
    }

    const std::size_t per_sampled = (cap - out.size()) / sampled.size();
    for (auto [n, k] : sampled) {
        std::set<std::vector<int>> reps;
        std::vector<int> flat(static_cast<std::size_t>(n * k));
        for (std::size_t draws = 0; reps.size() < per_sampled && draws < 200 * per_sampled; ++draws) {
            for (int& v : flat) v = uniform(rng, -2, 2);
            if (full_column_rank(flat, n, k)) reps.insert(canonical_w(flat, n, k));
        }
        keep(reps, per_sampled, n, k);
    }
    return out;
}

}  // namespace fixtures
