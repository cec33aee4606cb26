#ifndef COBEX_RANDOM_HPP
#define COBEX_RANDOM_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "cobex/cochain.hpp"
#include "cobex/complex.hpp"
#include "cobex/expansion.hpp"
#include "cobex/gf2.hpp"

namespace cobex {

/// Counter-based pseudorandom stream: each (seed, trial, cell) triple has its
/// own independent value, so trials are reproducible and order-independent.
namespace rng {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t at(std::uint64_t seed, std::uint64_t trial, std::uint64_t cell) {
    return splitmix64(splitmix64(splitmix64(seed) ^ trial) ^ cell);
}

inline double uniform(std::uint64_t seed, std::uint64_t trial, std::uint64_t cell) {
    return static_cast<double>(at(seed, trial, cell) >> 11) * 0x1.0p-53;
}

}  // namespace rng

/// Runs body(t) for all trials, split across workers. Bodies must write only
/// to per-trial slots; callers aggregate sequentially afterwards, so results
/// are identical for every worker count.
inline void for_each_trial(std::uint64_t trials, std::size_t workers,
                           const std::function<void(std::uint64_t)>& body) {
    workers = std::max<std::size_t>(1, workers);
    if (workers == 1 || trials < 2) {
        for (std::uint64_t t = 0; t < trials; ++t) body(t);
        return;
    }
    std::vector<std::thread> pool;
    std::uint64_t chunk = (trials + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            std::uint64_t lo = w * chunk;
            std::uint64_t hi = std::min<std::uint64_t>(trials, lo + chunk);
            for (std::uint64_t t = lo; t < hi; ++t) body(t);
        });
    for (auto& th : pool) th.join();
}

enum class SampleModel { ErdosRenyi, LinialMeshulam, PSubcomplex };

struct SampleSpec {
    SampleModel model = SampleModel::ErdosRenyi;
    int n = 0;                       // size parameter (ER / LM)
    int k = 0;                       // dimension (LM); 0 for ER
    double p = 0.0;
    std::uint64_t seed = 0;
    const Complex* ambient = nullptr;  // PSubcomplex only
};

/// Kept-cell indicator for one trial: cell i survives iff its stream value is
/// below p.
inline GF2Vector sample_keep_mask(std::size_t cell_count, double p, std::uint64_t seed,
                                  std::uint64_t trial) {
    GF2Vector mask(cell_count);
    for (std::size_t i = 0; i < cell_count; ++i)
        if (rng::uniform(seed, trial, i) < p) mask.set(i, true);
    return mask;
}

/// Materializes one random complex: the ambient's k-skeleton always present,
/// each (k+1)-cell kept independently with probability p.
inline Complex sample(const SampleSpec& spec, std::uint64_t trial = 0) {
    if (spec.p < 0.0 || spec.p > 1.0) throw std::invalid_argument("sample: p out of [0,1]");
    Complex ambient;
    const Complex* amb = spec.ambient;
    int top;
    if (spec.model == SampleModel::ErdosRenyi) {
        ambient = build_simplex_skeleton(spec.n, 1);
        amb = &ambient;
        top = 1;
    } else if (spec.model == SampleModel::LinialMeshulam) {
        ambient = build_simplex_skeleton(spec.n, spec.k + 1);
        amb = &ambient;
        top = spec.k + 1;
    } else {
        if (!amb) throw std::invalid_argument("sample: PSubcomplex needs an ambient complex");
        top = amb->top_dim;
        if (top != spec.k + 1)
            throw std::invalid_argument("sample: ambient dimension must be k+1");
    }
    GF2Vector keep = sample_keep_mask(amb->cell_count(top), spec.p, spec.seed, trial);
    std::set<std::size_t> drop;
    for (std::size_t i = 0; i < amb->cell_count(top); ++i)
        if (!keep.get(i)) drop.insert(i);
    return delete_cells(*amb, top, drop);
}

struct CurvePoint {
    double p = 0.0;
    std::uint64_t successes = 0;
    std::uint64_t trials = 0;
    std::uint64_t indeterminate = 0;
    double mean_value = 0.0;
    double std_err = 0.0;  // binomial standard error of the success fraction

    double fraction() const {
        return trials ? static_cast<double>(successes) / static_cast<double>(trials) : 0.0;
    }
};

enum class SweepMeasure { CohomologyVanishing, Connectivity };

struct ExperimentConfig {
    SampleSpec spec;
    std::vector<double> p_grid;
    std::uint64_t trials_per_point = 100;
    SweepMeasure measure = SweepMeasure::CohomologyVanishing;
    std::size_t workers = 1;
};

namespace detail {

// connectivity of the kept-edge subgraph of K_n via union-find
inline bool er_connected(int n, const GF2Vector& keep,
                         const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int comps = n;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (!keep.get(e)) continue;
        int a = find(edges[e].first), b = find(edges[e].second);
        if (a != b) {
            parent[a] = b;
            --comps;
        }
    }
    return comps == 1;
}

}  // namespace detail

/// Per grid point, the fraction of trials with vanishing reduced H^k (or
/// connectivity at k = 0). Deterministic given the seed; trial t at any grid
/// point always uses stream (seed, point_index * trials + t, cell).
inline std::vector<CurvePoint> threshold_sweep(const ExperimentConfig& cfg) {
    const SampleSpec& spec = cfg.spec;
    std::vector<CurvePoint> out;
    if (spec.model == SampleModel::ErdosRenyi ||
        (spec.model == SampleModel::LinialMeshulam && spec.k == 0)) {
        // connectivity path, no matrix work
        std::vector<std::pair<int, int>> edges;
        for (int a = 0; a < spec.n; ++a)
            for (int b = a + 1; b < spec.n; ++b) edges.emplace_back(a, b);
        for (std::size_t pi = 0; pi < cfg.p_grid.size(); ++pi) {
            CurvePoint pt;
            pt.p = cfg.p_grid[pi];
            pt.trials = cfg.trials_per_point;
            std::vector<std::uint8_t> ok(cfg.trials_per_point, 0);
            for_each_trial(cfg.trials_per_point, cfg.workers, [&](std::uint64_t t) {
                std::uint64_t trial = pi * cfg.trials_per_point + t;
                GF2Vector keep = sample_keep_mask(edges.size(), pt.p, spec.seed, trial);
                ok[t] = detail::er_connected(spec.n, keep, edges) ? 1 : 0;
            });
            for (std::uint8_t b : ok) pt.successes += b;
            double f = pt.fraction();
            pt.mean_value = f;
            pt.std_err = std::sqrt(f * (1.0 - f) / static_cast<double>(pt.trials));
            out.push_back(pt);
        }
        return out;
    }
    if (spec.model != SampleModel::LinialMeshulam)
        throw std::invalid_argument("threshold_sweep: unsupported model");
    // H^k(Y) = 0 iff rank of the kept-row coboundary matrix reaches
    // |X^(k)| - dim B^k; the skeleton (and hence the target rank) is fixed.
    Complex ambient = build_simplex_skeleton(spec.n, spec.k + 1);
    GF2Matrix d = coboundary(ambient, spec.k, true).matrix;
    std::size_t target = ambient.cell_count(spec.k) -
                         coboundary_space(ambient, spec.k, true).dim();
    for (std::size_t pi = 0; pi < cfg.p_grid.size(); ++pi) {
        CurvePoint pt;
        pt.p = cfg.p_grid[pi];
        pt.trials = cfg.trials_per_point;
        std::vector<std::uint8_t> ok(cfg.trials_per_point, 0);
        for_each_trial(cfg.trials_per_point, cfg.workers, [&](std::uint64_t t) {
            std::uint64_t trial = pi * cfg.trials_per_point + t;
            GF2Vector keep = sample_keep_mask(d.rows(), pt.p, spec.seed, trial);
            // incremental elimination with early exit at full target rank
            std::vector<GF2Vector> pivot_rows;
            std::vector<std::size_t> pivots;
            std::size_t rk = 0;
            for (std::size_t r = 0; r < d.rows() && rk < target; ++r) {
                if (!keep.get(r)) continue;
                GF2Vector row = d.row(r);
                for (std::size_t i = 0; i < pivots.size(); ++i)
                    if (row.get(pivots[i])) row.xor_with(pivot_rows[i]);
                if (row.is_zero()) continue;
                pivots.push_back(row.lowest_bit());
                pivot_rows.push_back(std::move(row));
                ++rk;
            }
            ok[t] = rk == target ? 1 : 0;
        });
        for (std::uint8_t b : ok) pt.successes += b;
        double f = pt.fraction();
        pt.mean_value = f;
        pt.std_err = std::sqrt(f * (1.0 - f) / static_cast<double>(pt.trials));
        out.push_back(pt);
    }
    return out;
}

struct InheritancePoint {
    CurvePoint curve;         // successes = trials meeting the theorem's bound
    double mean_ratio = 0.0;  // mean of h^k(Y) / (p h^k(X)) over exact trials
    double ratio_std_err = 0.0;
};

/// Monte Carlo for expansion inheritance: per grid point, the fraction of
/// trials with h^k(Y) >= (1-eps) p h^k(X), plus the mean normalized ratio.
/// The coset-leader table depends only on the ambient skeleton and is built
/// once; per-trial numerators are restricted to the kept (k+1)-cells.
inline std::vector<InheritancePoint> expansion_inheritance_mc(
    const Complex& ambient, int k, const std::vector<double>& p_grid,
    std::uint64_t trials, double eps, std::uint64_t seed, const Budget& budget = {}) {
    GF2Matrix d = coboundary(ambient, k, true).matrix;
    CosetTable table(coboundary_space(ambient, k, true), ambient.cell_count(k),
                     budget.w_cap, budget.q_max);
    if (!table.fully_resolved()) throw BudgetExceeded(table.quotient_dim());
    ExpansionReport amb = expansion_from_table(table, d, budget);
    if (amb.status != ExpansionStatus::Exact)
        throw std::invalid_argument("expansion_inheritance_mc: ambient not exactly solvable");
    double hx = to_double(amb.value);
    std::vector<InheritancePoint> out;
    for (std::size_t pi = 0; pi < p_grid.size(); ++pi) {
        InheritancePoint pt;
        pt.curve.p = p_grid[pi];
        std::vector<double> hy_of(trials);
        std::vector<std::uint8_t> exact_of(trials, 0);
        Budget inner = budget;
        inner.workers = 1;  // parallelism is across trials here
        for_each_trial(trials, budget.workers, [&](std::uint64_t t) {
            std::uint64_t trial = pi * trials + t;
            GF2Vector keep = sample_keep_mask(d.rows(), pt.curve.p, seed, trial);
            ExpansionReport ry = expansion_from_table(table, d, inner, &keep);
            if (ry.status == ExpansionStatus::Exact) {
                exact_of[t] = 1;
                hy_of[t] = to_double(ry.value);
            } else if (ry.status == ExpansionStatus::UndefinedEmptyDomain) {
                exact_of[t] = 1;
                hy_of[t] = 0.0;
            }
        });
        double sum = 0.0, sumsq = 0.0;
        for (std::uint64_t t = 0; t < trials; ++t) {
            if (!exact_of[t]) {
                ++pt.curve.indeterminate;
                continue;
            }
            ++pt.curve.trials;
            double ratio = hy_of[t] / (pt.curve.p * hx);
            sum += ratio;
            sumsq += ratio * ratio;
            if (hy_of[t] >= (1.0 - eps) * pt.curve.p * hx - 1e-12) ++pt.curve.successes;
        }
        double f = pt.curve.fraction();
        pt.curve.std_err =
            pt.curve.trials
                ? std::sqrt(f * (1.0 - f) / static_cast<double>(pt.curve.trials))
                : 0.0;
        if (pt.curve.trials) {
            double n = static_cast<double>(pt.curve.trials);
            pt.mean_ratio = sum / n;
            double var = std::max(0.0, sumsq / n - pt.mean_ratio * pt.mean_ratio);
            pt.ratio_std_err = std::sqrt(var / n);
        }
        pt.curve.mean_value = pt.mean_ratio;
        out.push_back(pt);
    }
    return out;
}

struct ConcentrationStats {
    std::uint64_t trials = 0;
    double p = 0.0;
    std::size_t full_norm = 0;  // ||d beta|| in the ambient complex
    double mean_norm = 0.0;
    // one entry per requested epsilon
    std::vector<double> epsilons;
    std::vector<double> tail_frequency;  // P[ ||d beta||_Y <= (1-eps) p ||d beta|| ]
    std::vector<double> chernoff_bound;  // exp(-eps^2 p ||d beta|| / 2)
};

/// Empirical distribution of ||d beta||_Y over random p-subcomplexes,
/// compared against the Chernoff tail bound.
inline ConcentrationStats coboundary_concentration(const Complex& ambient, int k,
                                                   const GF2Vector& beta, double p,
                                                   std::uint64_t trials,
                                                   std::uint64_t seed,
                                                   const std::vector<double>& epsilons) {
    GF2Matrix d = coboundary(ambient, k, true).matrix;
    GF2Vector dbeta = d.multiply(beta);
    std::size_t full = dbeta.weight();
    if (full == 0) throw std::invalid_argument("coboundary_concentration: ||d beta|| = 0");
    ConcentrationStats st;
    st.trials = trials;
    st.p = p;
    st.full_norm = full;
    st.epsilons = epsilons;
    st.tail_frequency.assign(epsilons.size(), 0.0);
    st.chernoff_bound.resize(epsilons.size());
    for (std::size_t e = 0; e < epsilons.size(); ++e)
        st.chernoff_bound[e] =
            std::exp(-epsilons[e] * epsilons[e] * p * static_cast<double>(full) / 2.0);
    std::vector<std::size_t> cells = dbeta.support();
    double sum = 0.0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        std::size_t kept = 0;
        for (std::size_t c : cells)
            if (rng::uniform(seed, t, c) < p) ++kept;
        sum += static_cast<double>(kept);
        for (std::size_t e = 0; e < epsilons.size(); ++e)
            if (static_cast<double>(kept) <=
                (1.0 - epsilons[e]) * p * static_cast<double>(full) + 1e-12)
                st.tail_frequency[e] += 1.0;
    }
    st.mean_norm = sum / static_cast<double>(trials);
    for (auto& f : st.tail_frequency) f /= static_cast<double>(trials);
    return st;
}

}  // namespace cobex

#endif
