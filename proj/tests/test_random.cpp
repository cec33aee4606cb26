#include <gtest/gtest.h>

#include <cmath>

#include "cobex/cochain.hpp"
#include "cobex/complex.hpp"
#include "cobex/random.hpp"

using namespace cobex;

TEST(Rng, StreamIsPureFunctionOfCoordinates) {
    EXPECT_EQ(rng::at(1, 2, 3), rng::at(1, 2, 3));
    EXPECT_NE(rng::at(1, 2, 3), rng::at(1, 2, 4));
    EXPECT_NE(rng::at(1, 2, 3), rng::at(1, 3, 3));
    EXPECT_NE(rng::at(1, 2, 3), rng::at(2, 2, 3));
    for (std::uint64_t i = 0; i < 1000; ++i) {
        double u = rng::uniform(99, i, i * 7 + 1);
        EXPECT_GE(u, 0.0);
        EXPECT_LT(u, 1.0);
    }
}

TEST(Rng, UniformLooksUniform) {
    // crude moment check over 20000 draws
    double sum = 0.0;
    const int N = 20000;
    for (int i = 0; i < N; ++i) sum += rng::uniform(7, 0, i);
    double mean = sum / N;
    EXPECT_NEAR(mean, 0.5, 0.01);
}

TEST(KeepMask, EdgeProbabilities) {
    GF2Vector all = sample_keep_mask(50, 1.0, 3, 0);
    EXPECT_EQ(all.weight(), 50u);
    GF2Vector none = sample_keep_mask(50, 0.0, 3, 0);
    EXPECT_TRUE(none.is_zero());
}

TEST(KeepMask, BinomialMean) {
    // mean kept count over many trials within 4 sigma of p * m
    const std::size_t m = 200;
    const double p = 0.3;
    const int trials = 500;
    double total = 0;
    for (int t = 0; t < trials; ++t) total += sample_keep_mask(m, p, 17, t).weight();
    double mean = total / trials;
    double sigma = std::sqrt(p * (1 - p) * m / trials);
    EXPECT_NEAR(mean, p * m, 4 * sigma);
}

TEST(Sample, ExtremesReproduceAmbientOrSkeleton) {
    SampleSpec spec;
    spec.model = SampleModel::LinialMeshulam;
    spec.n = 5;
    spec.k = 1;
    spec.seed = 1;
    spec.p = 1.0;
    Complex full = sample(spec);
    EXPECT_EQ(full.cell_count(2), build_simplex_skeleton(5, 2).cell_count(2));
    spec.p = 0.0;
    Complex skel = sample(spec);
    EXPECT_EQ(skel.top_dim, 1);
    EXPECT_EQ(skel.cell_count(1), 10u);
    spec.p = 1.5;
    EXPECT_THROW(sample(spec), std::invalid_argument);
}

TEST(Sample, SubcomplexModelNeedsAmbient) {
    SampleSpec spec;
    spec.model = SampleModel::PSubcomplex;
    spec.p = 0.5;
    EXPECT_THROW(sample(spec), std::invalid_argument);
    Complex X = build_cross_polytope(3);
    spec.ambient = &X;
    spec.k = X.top_dim - 1;
    Complex Y = sample(spec, 0);
    EXPECT_LE(Y.cell_count(X.top_dim), X.cell_count(X.top_dim));
}

TEST(Sweep, DeterministicAcrossWorkerCounts) {
    ExperimentConfig cfg;
    cfg.spec.model = SampleModel::LinialMeshulam;
    cfg.spec.n = 8;
    cfg.spec.k = 1;
    cfg.spec.seed = 2024;
    cfg.p_grid = {0.3, 0.5, 0.7, 0.9};
    cfg.trials_per_point = 40;
    cfg.workers = 1;
    auto a = threshold_sweep(cfg);
    cfg.workers = 4;
    auto b = threshold_sweep(cfg);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].successes, b[i].successes);
        EXPECT_EQ(a[i].trials, b[i].trials);
        EXPECT_DOUBLE_EQ(a[i].mean_value, b[i].mean_value);
    }
}

TEST(Sweep, ConnectivityEndpoints) {
    ExperimentConfig cfg;
    cfg.spec.model = SampleModel::ErdosRenyi;
    cfg.spec.n = 10;
    cfg.spec.seed = 5;
    cfg.p_grid = {0.0, 1.0};
    cfg.trials_per_point = 20;
    auto curve = threshold_sweep(cfg);
    EXPECT_EQ(curve[0].successes, 0u);   // empty graph disconnected
    EXPECT_EQ(curve[1].successes, 20u);  // complete graph connected
    EXPECT_DOUBLE_EQ(curve[1].std_err, 0.0);
}

TEST(Sweep, FractionIncreasesAcrossThreshold) {
    // connectivity threshold for n = 12 is around ln n / n ~ 0.21;
    // compare well-separated p values with enough trials to be stable
    ExperimentConfig cfg;
    cfg.spec.model = SampleModel::ErdosRenyi;
    cfg.spec.n = 12;
    cfg.spec.seed = 31;
    cfg.p_grid = {0.05, 0.35, 0.8};
    cfg.trials_per_point = 300;
    cfg.workers = 2;
    auto curve = threshold_sweep(cfg);
    EXPECT_LT(curve[0].fraction() + 0.1, curve[1].fraction());
    EXPECT_LT(curve[1].fraction(), curve[2].fraction() + 1e-12);
    EXPECT_GT(curve[2].fraction(), 0.99);
}

TEST(Sweep, ConnectivityAgreesWithReducedH0) {
    // the union-find path must match the homological definition trial by trial
    SampleSpec spec;
    spec.model = SampleModel::ErdosRenyi;
    spec.n = 7;
    spec.seed = 12;
    spec.p = 0.3;
    ExperimentConfig cfg;
    cfg.spec = spec;
    cfg.p_grid = {0.3};
    cfg.trials_per_point = 60;
    auto curve = threshold_sweep(cfg);
    std::uint64_t connected = 0;
    for (std::uint64_t t = 0; t < 60; ++t) {
        Complex Y = sample(spec, t);
        if (Y.top_dim == 1 && cohomology_dim(Y, 0) == 0) ++connected;
    }
    EXPECT_EQ(curve[0].successes, connected);
}

TEST(Sweep, CohomologySweepMatchesDirectComputation) {
    SampleSpec spec;
    spec.model = SampleModel::LinialMeshulam;
    spec.n = 6;
    spec.k = 1;
    spec.seed = 9;
    ExperimentConfig cfg;
    cfg.spec = spec;
    cfg.p_grid = {0.6};
    cfg.trials_per_point = 40;
    auto curve = threshold_sweep(cfg);
    std::uint64_t vanish = 0;
    spec.p = 0.6;
    for (std::uint64_t t = 0; t < 40; ++t) {
        Complex Y = sample(spec, t);
        if (Y.top_dim == 2 && cohomology_dim(Y, 1) == 0) ++vanish;
    }
    EXPECT_EQ(curve[0].successes, vanish);
}

TEST(Inheritance, FullProbabilityRecoversAmbient) {
    Complex K5 = build_simplex_skeleton(5, 1);
    auto pts = expansion_inheritance_mc(K5, 0, {1.0}, 10, 0.1, 77);
    ASSERT_EQ(pts.size(), 1u);
    EXPECT_EQ(pts[0].curve.successes, 10u);
    EXPECT_EQ(pts[0].curve.indeterminate, 0u);
    EXPECT_NEAR(pts[0].mean_ratio, 1.0, 1e-12);
}

TEST(Inheritance, DeterministicAndSane) {
    Complex X = build_simplex_skeleton(6, 2);
    Budget one, four;
    four.workers = 4;
    auto a = expansion_inheritance_mc(X, 1, {0.6, 0.9}, 25, 0.25, 5, one);
    auto b = expansion_inheritance_mc(X, 1, {0.6, 0.9}, 25, 0.25, 5, four);
    ASSERT_EQ(a.size(), 2u);
    for (std::size_t i = 0; i < 2; ++i) {
        EXPECT_EQ(a[i].curve.successes, b[i].curve.successes);
        EXPECT_DOUBLE_EQ(a[i].mean_ratio, b[i].mean_ratio);
        EXPECT_LE(a[i].curve.successes, a[i].curve.trials);
        EXPECT_GE(a[i].mean_ratio, 0.0);
    }
}

TEST(Inheritance, SubcomplexExpansionNeverExceedsMaxRatio) {
    // h^0(Y) <= h^0(X) cannot fail by much after normalization: with p near 1
    // the ratio h(Y)/(p h(X)) stays within [0, 1/p]
    Complex K6 = build_simplex_skeleton(6, 1);
    auto pts = expansion_inheritance_mc(K6, 0, {0.8}, 50, 0.5, 123);
    ASSERT_EQ(pts.size(), 1u);
    EXPECT_LE(pts[0].mean_ratio, 1.0 / 0.8 + 1e-9);
}

TEST(Concentration, FullProbabilityIsExact) {
    Complex K6 = build_simplex_skeleton(6, 1);
    auto st = coboundary_concentration(K6, 0, GF2Vector::unit(6, 0), 1.0, 30, 4,
                                       {0.1, 0.5});
    EXPECT_EQ(st.full_norm, 5u);  // vertex star in K_6
    EXPECT_DOUBLE_EQ(st.mean_norm, 5.0);
    EXPECT_DOUBLE_EQ(st.tail_frequency[0], 0.0);
    EXPECT_DOUBLE_EQ(st.tail_frequency[1], 0.0);
}

TEST(Concentration, MeanTracksThinning) {
    Complex X = build_simplex_skeleton(12, 1);
    GF2Vector beta(12);
    for (int i = 0; i < 6; ++i) beta.set(i, true);  // cut with 36 edges
    double p = 0.4;
    auto st = coboundary_concentration(X, 0, beta, p, 2000, 21, {0.3});
    EXPECT_EQ(st.full_norm, 36u);
    double sigma = std::sqrt(p * (1 - p) * 36.0 / 2000.0);
    EXPECT_NEAR(st.mean_norm, p * 36.0, 4 * sigma);
    EXPECT_NEAR(st.chernoff_bound[0], std::exp(-0.09 * p * 36.0 / 2.0), 1e-12);
    // empirical tail should not wildly exceed the Chernoff bound
    EXPECT_LE(st.tail_frequency[0], st.chernoff_bound[0] + 0.05);
}

TEST(Concentration, RejectsZeroCoboundary) {
    Complex K4 = build_simplex_skeleton(4, 1);
    GF2Vector ones(4);
    for (int i = 0; i < 4; ++i) ones.set(i, true);
    EXPECT_THROW(coboundary_concentration(K4, 0, ones, 0.5, 10, 1, {0.1}),
                 std::invalid_argument);
}
