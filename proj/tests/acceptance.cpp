// Acceptance suite: one test per criterion, each ending with a single
// "CRITERION n: PASS|FAIL" line. Informational measurements are printed as
// "  info:" lines above the verdict.

#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "cobex/cochain.hpp"
#include "cobex/complex.hpp"
#include "cobex/expansion.hpp"
#include "cobex/filling.hpp"
#include "cobex/random.hpp"
#include "cobex/spectral.hpp"

using namespace cobex;

namespace {

constexpr std::size_t kWorkers = 3;

std::uint64_t mask_of(const GF2Vector& v) {
    std::uint64_t m = 0;
    for (std::size_t i : v.support()) m |= std::uint64_t(1) << i;
    return m;
}

/// Independent expansion oracle: walks every coset directly with bit-mask
/// arithmetic and finds each coset's minimum weight by scanning the full code
/// span (no syndrome tables, no weight-ordered search). Lengths <= 64 only.
Rational oracle_expansion(const Complex& X, int k) {
    GF2Matrix d = coboundary(X, k, true).matrix;
    Basis B = coboundary_space(X, k, true);
    std::size_t len = X.cell_count(k);
    std::size_t q = len - B.dim();
    if (len > 64 || d.rows() > 64 || B.dim() > 24 || q > 24)
        throw std::invalid_argument("oracle_expansion: instance too large");
    std::vector<std::uint64_t> span(std::size_t(1) << B.dim(), 0);
    std::vector<std::uint64_t> gen(B.dim());
    for (std::size_t i = 0; i < B.dim(); ++i) gen[i] = mask_of(B.vectors[i]);
    for (std::size_t m = 1; m < span.size(); ++m)
        span[m] = span[m & (m - 1)] ^ gen[std::countr_zero(m)];
    std::vector<bool> pivot(len, false);
    for (std::size_t p : B.pivot_columns) pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < len; ++c)
        if (!pivot[c]) free_cols.push_back(c);
    std::vector<std::uint64_t> colimg(len, 0);
    for (std::size_t c = 0; c < len; ++c)
        colimg[c] = mask_of(d.multiply(GF2Vector::unit(len, c)));
    std::uint64_t rep = 0, img = 0;
    std::uint64_t best_num = 0, best_den = 0;
    std::uint64_t total = std::uint64_t(1) << q;
    for (std::uint64_t i = 1; i < total; ++i) {
        std::size_t b = std::countr_zero(i);  // Gray-code flip position
        rep ^= std::uint64_t(1) << free_cols[b];
        img ^= colimg[free_cols[b]];
        std::uint64_t den = 64;
        for (std::uint64_t s : span)
            den = std::min<std::uint64_t>(den, std::popcount(rep ^ s));
        std::uint64_t num = std::popcount(img);
        if (best_den == 0 || num * best_den < best_num * den) {
            best_num = num;
            best_den = den;
        }
    }
    return Rational(static_cast<std::int64_t>(best_num), static_cast<std::int64_t>(best_den));
}

std::size_t naive_quotient_norm(const Basis& code, const GF2Vector& beta) {
    std::size_t best = beta.weight();
    for (std::uint64_t m = 0; m < (std::uint64_t(1) << code.dim()); ++m) {
        GF2Vector v = beta;
        for (std::size_t i = 0; i < code.dim(); ++i)
            if ((m >> i) & 1) v.xor_with(code.vectors[i]);
        best = std::min(best, v.weight());
    }
    return best;
}

Rational exact_h(const Complex& X, int k, std::size_t workers = kWorkers) {
    Budget b;
    b.workers = workers;
    auto rep = coboundary_expansion(X, k, b);
    if (rep.status != ExpansionStatus::Exact)
        throw std::runtime_error("expected exact expansion");
    return rep.value;
}

std::string fmt(double x) {
    std::ostringstream out;
    out.precision(10);
    out << x;
    return out.str();
}

std::string curve_csv(const std::vector<CurvePoint>& pts) {
    std::ostringstream out;
    out << "p,trials,successes,fraction,std_err,mean_value,indeterminate\n";
    for (const auto& pt : pts)
        out << fmt(pt.p) << "," << pt.trials << "," << pt.successes << ","
            << fmt(pt.fraction()) << "," << fmt(pt.std_err) << "," << fmt(pt.mean_value)
            << "," << pt.indeterminate << "\n";
    return out.str();
}

double crossing_p(const std::vector<CurvePoint>& pts) {
    for (std::size_t i = 1; i < pts.size(); ++i) {
        double a = pts[i - 1].fraction(), b = pts[i].fraction();
        if (a < 0.5 && b >= 0.5) {
            double t = (0.5 - a) / (b - a);
            return pts[i - 1].p + t * (pts[i].p - pts[i - 1].p);
        }
    }
    return pts.front().fraction() >= 0.5 ? pts.front().p : -1.0;
}

void expect_monotone_2sigma(const std::vector<CurvePoint>& pts) {
    for (std::size_t i = 1; i < pts.size(); ++i)
        EXPECT_GE(pts[i].fraction() + 2.0 * (pts[i].std_err + pts[i - 1].std_err),
                  pts[i - 1].fraction())
            << "curve not monotone beyond noise at p = " << pts[i].p;
}

std::vector<CurvePoint> run_sweep(SampleModel model, int n, int k, double pred,
                                  std::vector<double> factors, std::uint64_t seed,
                                  std::size_t workers) {
    ExperimentConfig cfg;
    cfg.spec.model = model;
    cfg.spec.n = n;
    cfg.spec.k = k;
    cfg.spec.seed = seed;
    for (double f : factors) cfg.p_grid.push_back(std::min(1.0, f * pred));
    cfg.trials_per_point = 200;
    cfg.workers = workers;
    return threshold_sweep(cfg);
}

// sweep/inheritance results shared between the trend criteria and the
// worker-count determinism criterion
struct Shared {
    std::vector<std::string> sweep_csv;  // criterion 9, workers = kWorkers
    std::string inherit_csv;             // criterion 11
    std::string concentration_csv;       // criterion 10
};
Shared g_shared;

struct SweepConfig {
    SampleModel model;
    int n, k;
    double pred;
    std::vector<double> factors;
    std::uint64_t seed;
};

std::vector<SweepConfig> sweep_configs() {
    return {
        {SampleModel::LinialMeshulam, 20, 1, 2.0 * std::log(20.0) / 20.0,
         {0.5, 0.75, 1.0, 1.25, 1.6, 2.0}, 101},
        {SampleModel::LinialMeshulam, 40, 1, 2.0 * std::log(40.0) / 40.0,
         {0.5, 0.75, 1.0, 1.25, 1.6, 2.0}, 102},
        {SampleModel::LinialMeshulam, 60, 1, 2.0 * std::log(60.0) / 60.0,
         {0.5, 0.8, 1.1, 1.5, 2.0}, 103},
        {SampleModel::ErdosRenyi, 40, 0, std::log(40.0) / 40.0,
         {0.5, 0.75, 1.0, 1.25, 1.6, 2.0}, 104},
    };
}

std::vector<InheritancePoint> run_inheritance(std::size_t workers) {
    Complex X = build_simplex_skeleton(8, 2);
    Budget b;
    b.workers = workers;
    return expansion_inheritance_mc(X, 1, {0.6, 0.7, 0.8, 0.9, 1.0}, 120, 0.5, 2024, b);
}

std::string concentration_csv_run() {
    Complex X = build_simplex_skeleton(7, 2);
    std::vector<GF2Vector> betas;
    GF2Vector b1(21), b2(21), b3(21);
    b1.set(0, true);
    for (int i : {0, 1, 2}) b2.set(i, true);
    for (int i : {5, 9, 13, 17}) b3.set(i, true);
    betas = {b1, b2, b3};
    std::ostringstream out;
    out << "beta,p,full_norm,mean_norm,eps,tail_frequency,chernoff_bound\n";
    for (std::size_t bi = 0; bi < betas.size(); ++bi)
        for (double p : {0.3, 0.6, 0.9}) {
            auto st = coboundary_concentration(X, 1, betas[bi], p, 10000,
                                               900 + bi, {0.3, 0.5});
            for (std::size_t e = 0; e < st.epsilons.size(); ++e)
                out << bi << "," << fmt(p) << "," << st.full_norm << ","
                    << fmt(st.mean_norm) << "," << fmt(st.epsilons[e]) << ","
                    << fmt(st.tail_frequency[e]) << "," << fmt(st.chernoff_bound[e])
                    << "\n";
        }
    return out.str();
}

class Acceptance : public ::testing::Test {
protected:
    void Verdict(int n) { num_ = n; }
    void TearDown() override {
        std::cout << "CRITERION " << num_ << ": " << (HasFailure() ? "FAIL" : "PASS")
                  << std::endl;
    }
    int num_ = 0;
};

void info(const std::string& line) { std::cout << "  info: " << line << "\n"; }

}  // namespace

TEST_F(Acceptance, Criterion01SmallInstanceTable) {
    Verdict(1);
    for (int n = 3; n <= 16; ++n) {
        Rational h = exact_h(build_simplex_skeleton(n, 1), 0);
        EXPECT_EQ(h, Rational((n + 1) / 2)) << "h^0 of the complete graph on " << n;
    }
    for (int n = 4; n <= 8; ++n) {
        Rational h = exact_h(build_simplex_skeleton(n, 2), 1);
        EXPECT_GE(h, Rational(n, 3)) << "h^1 lower bound at n = " << n;
        info("h^1 of the 2-skeleton on " + std::to_string(n) + " vertices = " +
             to_string(h) + (h == Rational(n, 3) ? " (equality, 3 | n not required)"
                                                 : " (strict)"));
        if (n == 4 || n == 6) EXPECT_EQ(h, Rational(2));
    }
}

TEST_F(Acceptance, Criterion02CrossPolytope) {
    Verdict(2);
    for (int n = 2; n <= 5; ++n) {
        Rational h = exact_h(build_cross_polytope(n), 0);
        EXPECT_EQ(h, Rational(n - 1));
        EXPECT_EQ(h, predicted_bound(Family::Cross, n, 0));
    }
    Rational h1 = exact_h(build_cross_polytope(3), 1);
    info("h^1 of the octahedron = " + to_string(h1));
    EXPECT_GE(h1, Rational(2, 3));
}

TEST_F(Acceptance, Criterion03Cube) {
    Verdict(3);
    for (int n = 2; n <= 4; ++n) EXPECT_EQ(exact_h(build_cube(n), 0), Rational(1));
    EXPECT_EQ(exact_h(build_cube(3), 1), Rational(1));
    EXPECT_EQ(exact_h(build_cube(4), 1), Rational(1));
}

TEST_F(Acceptance, Criterion04CompleteBipartiteMeasurement) {
    Verdict(4);
    std::ostringstream report;
    report << "# h^0 of K_{n,n}: measured vs the claimed closed form\n\n"
           << "The claimed value is h(K_{n,n}) = n. The exact solver and the\n"
           << "subset-enumeration oracle agree with each other for every n, and\n"
           << "both disagree with the claim for n >= 2.\n\n"
           << "| n | solver | oracle | claimed | matches claim |\n"
           << "|---|--------|--------|---------|---------------|\n";
    for (int n = 1; n <= 6; ++n) {
        Complex K = build_multipartite(n, 0);
        Rational solver = exact_h(K, 0);
        Rational oracle = edge_expansion_sets(K).value;
        EXPECT_EQ(solver, oracle) << "solver/oracle mismatch at n = " << n;
        report << "| " << n << " | " << to_string(solver) << " | " << to_string(oracle)
               << " | " << n << "/1 | " << (solver == Rational(n) ? "yes" : "no")
               << " |\n";
        info("h^0(K_{" + std::to_string(n) + "," + std::to_string(n) + "}) = " +
             to_string(solver) + " (claimed " + std::to_string(n) + ")");
    }
    std::ofstream out("knn_discrepancy_report.md");
    ASSERT_TRUE(out.good());
    out << report.str();
    info("discrepancy report written to knn_discrepancy_report.md");
}

TEST_F(Acceptance, Criterion05MultipartiteRecursion) {
    Verdict(5);
    for (int n = 1; n <= 3; ++n) {
        Complex L = build_multipartite(n, 1);
        Rational solver = exact_h(L, 1);
        Rational oracle = oracle_expansion(L, 1);
        EXPECT_EQ(solver, oracle) << "solver/oracle mismatch at n = " << n;
        Rational claimed = predicted_bound(Family::Multipartite, n, 1);  // n / 3
        // recursion 1/c_1 = (1/n)(1 + (2n-2)/c_0) seeded with the measured c_0
        Rational c0 = exact_h(build_multipartite(n, 0), 0);
        Rational corrected = Rational(n) * c0 / (c0 + Rational(2 * n - 2));
        info("h^1 of the complete tripartite complex, n = " + std::to_string(n) +
             ": measured " + to_string(solver) + ", claimed " + to_string(claimed) +
             ", corrected-base recursion " + to_string(corrected));
    }
}

TEST_F(Acceptance, Criterion06CubeFillingBound) {
    Verdict(6);
    std::size_t violations = 0, checked = 0;
    for (int n = 2; n <= 5; ++n)
        for (int j = 0; j < n; ++j) {
            CubeIndex I(n);
            GF2Matrix bd_next = I.boundary_matrix(j + 1);
            GF2Matrix bd_check = I.boundary_matrix(j + 1);
            for (int t = 0; t < 100; ++t) {
                GF2Vector w(I.count(j + 1));
                for (std::size_t i = 0; i < w.size(); ++i)
                    if (rng::uniform(600 + n * 10 + j, t, i) < 0.5) w.set(i, true);
                GF2Vector z = bd_next.multiply(w);
                auto fill = cube_fill(n, j, z);
                ++checked;
                if (bd_check.multiply(fill.y) != z || !fill.meets_bound) {
                    ++violations;
                    ADD_FAILURE() << "violation at n=" << n << " j=" << j << " t=" << t;
                }
            }
        }
    info("cube fillings checked: " + std::to_string(checked) + ", violations: " +
         std::to_string(violations));
    EXPECT_EQ(violations, 0u);
}

TEST_F(Acceptance, Criterion07Duality) {
    Verdict(7);
    std::size_t mismatches = 0;
    // exhaustive on all basis cochains in every degree for n = 3
    {
        Complex cross = build_cross_polytope(3);
        CubeIndex cube(3);
        for (int k = 0; k + 1 < 3; ++k) {
            CrossCubeDuality Dk(3, k), Dk1(3, k + 1);
            GF2Matrix d = coboundary(cross, k, false).matrix;
            GF2Matrix bd = cube.boundary_matrix(3 - k - 1);
            for (std::size_t c = 0; c < cross.cell_count(k); ++c) {
                GF2Vector beta = GF2Vector::unit(cross.cell_count(k), c);
                if (Dk1.to_cube_chain(d.multiply(beta)) != bd.multiply(Dk.to_cube_chain(beta)))
                    ++mismatches;
            }
        }
    }
    // 1000 random cochains each for n = 4, 5
    for (int n : {4, 5}) {
        Complex cross = build_cross_polytope(n);
        CubeIndex cube(n);
        for (int t = 0; t < 1000; ++t) {
            int k = t % (n - 1);
            CrossCubeDuality Dk(n, k), Dk1(n, k + 1);
            GF2Matrix d = coboundary(cross, k, false).matrix;
            GF2Matrix bd = cube.boundary_matrix(n - k - 1);
            GF2Vector beta(cross.cell_count(k));
            for (std::size_t i = 0; i < beta.size(); ++i)
                if (rng::uniform(700 + n, t, i) < 0.5) beta.set(i, true);
            if (Dk1.to_cube_chain(d.multiply(beta)) != bd.multiply(Dk.to_cube_chain(beta)))
                ++mismatches;
        }
    }
    info("duality mismatches: " + std::to_string(mismatches));
    EXPECT_EQ(mismatches, 0u);
}

TEST_F(Acceptance, Criterion08FillingNormIdentity) {
    Verdict(8);
    std::size_t instances = 0;
    for (int n : {6, 7}) {
        Complex ambient = build_simplex_skeleton(n, 2);
        SampleSpec spec;
        spec.model = SampleModel::PSubcomplex;
        spec.ambient = &ambient;
        spec.k = 1;
        spec.p = 0.75;
        spec.seed = 800 + n;
        for (std::uint64_t t = 0; instances < (n == 6 ? 25u : 50u) && t < 500; ++t) {
            Complex Y = sample(spec, t);
            if (Y.top_dim != 2 || cohomology_dim(Y, 1) != 0) continue;
            ++instances;
            Budget b;
            b.workers = kWorkers;
            auto h = coboundary_expansion(Y, 1, b);
            auto fr = filling_norm(Y, 1, b);
            ASSERT_EQ(h.status, ExpansionStatus::Exact);
            ASSERT_TRUE(fr.exact);
            Rational lhs = fr.value * h.value *
                           Rational(static_cast<std::int64_t>(Y.cell_count(1)));
            EXPECT_EQ(lhs, Rational(static_cast<std::int64_t>(Y.cell_count(2))))
                << "identity failed, n = " << n << ", trial " << t;
        }
    }
    EXPECT_EQ(instances, 50u);
    // constructed instance with H^1 != 0: expansion vanishes, filling norm stays finite
    Complex holed = delete_cells(build_simplex_skeleton(4, 2), 2, {0, 1});
    ASSERT_EQ(cohomology_dim(holed, 1), 1u);
    EXPECT_EQ(exact_h(holed, 1), Rational(0));
    auto fr = filling_norm(holed, 1);
    EXPECT_TRUE(fr.exact);
    EXPECT_GT(fr.value, Rational(0));
    info("H^1 != 0 instance: h^1 = 0, filling norm = " + to_string(fr.value));
}

TEST_F(Acceptance, Criterion09ThresholdTrends) {
    Verdict(9);
    g_shared.sweep_csv.clear();
    for (const auto& cfg : sweep_configs()) {
        auto curve = run_sweep(cfg.model, cfg.n, cfg.k, cfg.pred, cfg.factors,
                               cfg.seed, kWorkers);
        g_shared.sweep_csv.push_back(curve_csv(curve));
        double cross = crossing_p(curve);
        info("k = " + std::to_string(cfg.k) + ", n = " + std::to_string(cfg.n) +
             ": predicted threshold " + fmt(cfg.pred) + ", measured crossing " +
             fmt(cross));
        ASSERT_GT(cross, 0.0) << "curve never crosses 1/2 for n = " << cfg.n;
        EXPECT_GE(cross, cfg.pred / 2.0);
        EXPECT_LE(cross, cfg.pred * 2.0);
        expect_monotone_2sigma(curve);
    }
}

TEST_F(Acceptance, Criterion10ChernoffConcentration) {
    Verdict(10);
    Complex X = build_simplex_skeleton(7, 2);
    std::vector<GF2Vector> betas;
    GF2Vector b1(21), b2(21), b3(21);
    b1.set(0, true);
    for (int i : {0, 1, 2}) b2.set(i, true);
    for (int i : {5, 9, 13, 17}) b3.set(i, true);
    betas = {b1, b2, b3};
    for (std::size_t bi = 0; bi < betas.size(); ++bi)
        for (double p : {0.3, 0.6, 0.9}) {
            auto st = coboundary_concentration(X, 1, betas[bi], p, 10000, 900 + bi,
                                               {0.3, 0.5});
            for (std::size_t e = 0; e < st.epsilons.size(); ++e) {
                double cb = st.chernoff_bound[e];
                double sigma = std::sqrt(std::max(cb * (1.0 - cb), 1e-12) / 10000.0);
                EXPECT_LE(st.tail_frequency[e], cb + 3.0 * sigma)
                    << "beta " << bi << ", p = " << p << ", eps = " << st.epsilons[e];
            }
        }
    g_shared.concentration_csv = concentration_csv_run();
    info("9 (beta, p) pairs, 10^4 trials each, eps in {0.3, 0.5}");
}

TEST_F(Acceptance, Criterion11InheritanceTrend) {
    Verdict(11);
    auto pts = run_inheritance(kWorkers);
    std::vector<CurvePoint> curve;
    for (const auto& pt : pts) curve.push_back(pt.curve);
    g_shared.inherit_csv = curve_csv(curve);
    for (const auto& pt : pts) {
        EXPECT_GE(pt.curve.trials, 100u) << "too few exact trials at p = " << pt.curve.p;
        info("p = " + fmt(pt.curve.p) + ": mean ratio " + fmt(pt.mean_ratio) +
             " (std err " + fmt(pt.ratio_std_err) + "), bound fraction " +
             fmt(pt.curve.fraction()));
    }
    for (std::size_t i = 1; i < pts.size(); ++i)
        EXPECT_GE(pts[i].mean_ratio +
                      2.0 * (pts[i].ratio_std_err + pts[i - 1].ratio_std_err),
                  pts[i - 1].mean_ratio)
            << "mean ratio decreased beyond noise at p = " << pts[i].curve.p;
    EXPECT_DOUBLE_EQ(pts.back().mean_ratio, 1.0);  // p = 1 recovers the ambient value
    EXPECT_EQ(pts.back().curve.successes, pts.back().curve.trials);
}

TEST_F(Acceptance, Criterion12CheegerBuser) {
    Verdict(12);
    std::size_t done = 0, probed = 0;
    for (std::uint64_t i = 0; done < 500 && i < 2000; ++i) {
        int n = 4 + static_cast<int>(i % 13);  // 4..16
        double p = 0.2 + 0.1 * static_cast<double>((i / 13) % 8);
        Complex K = build_simplex_skeleton(n, 1);
        GF2Vector keep = sample_keep_mask(K.cell_count(1), p, 1200, i);
        std::set<std::size_t> drop;
        for (std::size_t e = 0; e < K.cell_count(1); ++e)
            if (!keep.get(e)) drop.insert(e);
        if (drop.size() == K.cell_count(1)) continue;  // empty graph
        Complex G = delete_cells(K, 1, drop);
        auto rep = cheeger_buser_check(G);
        EXPECT_TRUE(rep.sandwich_holds)
            << "n = " << n << ", p = " << p << ", trial " << i;
        ++done;
        if (rep.lambda1 > 1e-9) {
            auto probe = real_expansion_probe(G, 20, i);
            EXPECT_GE(probe.min_probe_quotient, std::sqrt(probe.lambda1) - 1e-8);
            ++probed;
        }
    }
    EXPECT_EQ(done, 500u);
    info("instances: " + std::to_string(done) + ", probe checks on connected graphs: " +
         std::to_string(probed));
}

TEST_F(Acceptance, Criterion13OracleEquivalence) {
    Verdict(13);
    // quotient norms against exhaustive minimization over the full code span
    Complex ambient = build_simplex_skeleton(5, 2);  // 10 edges
    Basis B1 = coboundary_space(ambient, 1, true);
    std::size_t checked = 0;
    for (std::uint64_t t = 0; t < 100; ++t) {
        GF2Vector beta(10);
        for (std::size_t i = 0; i < 10; ++i)
            if (rng::uniform(1300, t, i) < 0.5) beta.set(i, true);
        EXPECT_EQ(quotient_norm(ambient, 1, beta), naive_quotient_norm(B1, beta));
        ++checked;
    }
    for (std::uint64_t t = 0; t < 100; ++t) {
        int n = 6 + static_cast<int>(t % 7);  // vertex cochains on 6..12 vertices
        Complex K = build_simplex_skeleton(n, 1);
        Basis B0 = coboundary_space(K, 0, true);
        GF2Vector beta(n);
        for (int i = 0; i < n; ++i)
            if (rng::uniform(1301, t, i) < 0.5) beta.set(i, true);
        EXPECT_EQ(quotient_norm(K, 0, beta), naive_quotient_norm(B0, beta));
        ++checked;
    }
    // k = 0 expansion against direct subset enumeration on random graphs
    std::size_t graphs = 0;
    for (std::uint64_t i = 0; graphs < 200 && i < 600; ++i) {
        int n = 6 + static_cast<int>(i % 9);  // 6..14
        double p = 0.2 + 0.1 * static_cast<double>(i % 7);
        Complex K = build_simplex_skeleton(n, 1);
        GF2Vector keep = sample_keep_mask(K.cell_count(1), p, 1302, i);
        std::set<std::size_t> drop;
        for (std::size_t e = 0; e < K.cell_count(1); ++e)
            if (!keep.get(e)) drop.insert(e);
        if (drop.size() == K.cell_count(1)) continue;
        Complex G = delete_cells(K, 1, drop);
        Budget b;
        b.workers = kWorkers;
        auto rep = coboundary_expansion(G, 0, b);
        ASSERT_EQ(rep.status, ExpansionStatus::Exact);
        EXPECT_EQ(rep.value, edge_expansion_sets(G).value) << "graph trial " << i;
        ++graphs;
    }
    EXPECT_EQ(graphs, 200u);
    info("quotient-norm checks: " + std::to_string(checked) + ", graph checks: " +
         std::to_string(graphs));
}

TEST_F(Acceptance, Criterion14WorkerDeterminism) {
    Verdict(14);
    ASSERT_EQ(g_shared.sweep_csv.size(), sweep_configs().size())
        << "criterion 9 must run first";
    std::size_t i = 0;
    for (const auto& cfg : sweep_configs()) {
        auto curve = run_sweep(cfg.model, cfg.n, cfg.k, cfg.pred, cfg.factors,
                               cfg.seed, 1);
        EXPECT_EQ(curve_csv(curve), g_shared.sweep_csv[i])
            << "sweep CSV differs between worker counts (n = " << cfg.n << ")";
        ++i;
    }
    EXPECT_EQ(g_shared.concentration_csv, concentration_csv_run());
    auto pts = run_inheritance(1);
    std::vector<CurvePoint> curve;
    for (const auto& pt : pts) curve.push_back(pt.curve);
    EXPECT_EQ(curve_csv(curve), g_shared.inherit_csv)
        << "inheritance CSV differs between worker counts";
    info("CSVs byte-identical for worker counts 1 and " + std::to_string(kWorkers));
}
