// cobex: coboundary expansion toolkit CLI.
//
// Subcommands cover complex generation/inspection, exact expansion and
// spectral computation, cube filling, duality checks, random sampling, and
// Monte Carlo sweeps. JSON goes to stdout; CSV via --csv. Exit codes:
// 0 success, 2 usage error, 3 budget exceeded, 4 numeric failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cobex/cochain.hpp"
#include "cobex/complex.hpp"
#include "cobex/expansion.hpp"
#include "cobex/filling.hpp"
#include "cobex/io.hpp"
#include "cobex/random.hpp"
#include "cobex/rational.hpp"
#include "cobex/spectral.hpp"

using nlohmann::json;

namespace {

struct FamilyOpts {
    std::string family;
    std::string in_file;
    int n = 0;
    int d = -1;
    int k_param = 1;
};

void add_family_flags(CLI::App* cmd, FamilyOpts& f) {
    cmd->add_option("--family", f.family, "simplex|cube|cross|multipartite");
    cmd->add_option("--in", f.in_file, "complex JSON file");
    cmd->add_option("--n", f.n, "family size parameter");
    cmd->add_option("--d", f.d, "skeleton dimension (simplex; default n-1)");
    cmd->add_option("--k-param", f.k_param, "multipartite k parameter");
}

cobex::Complex make_complex(const FamilyOpts& f) {
    if (!f.in_file.empty()) return cobex::load_complex(f.in_file);
    if (f.family == "simplex")
        return cobex::build_simplex_skeleton(f.n, f.d >= 0 ? f.d : f.n - 1);
    if (f.family == "cube") return cobex::build_cube(f.n);
    if (f.family == "cross") return cobex::build_cross_polytope(f.n);
    if (f.family == "multipartite") return cobex::build_multipartite(f.n, f.k_param);
    throw std::invalid_argument("specify --in FILE or --family with --n");
}

std::optional<cobex::Family> family_enum(const std::string& name) {
    if (name == "simplex") return cobex::Family::Simplex;
    if (name == "cube") return cobex::Family::Cube;
    if (name == "cross") return cobex::Family::Cross;
    if (name == "multipartite") return cobex::Family::Multipartite;
    return std::nullopt;
}

std::vector<double> parse_grid(const std::string& s) {
    // start:stop:step, endpoints inclusive within step rounding
    double start, stop, step;
    char c1, c2;
    std::istringstream in(s);
    if (!(in >> start >> c1 >> stop >> c2 >> step) || c1 != ':' || c2 != ':' || step <= 0)
        throw std::invalid_argument("p-grid must be start:stop:step");
    std::vector<double> grid;
    for (int i = 0;; ++i) {
        double p = start + i * step;
        if (p > stop + step / 2) break;
        grid.push_back(std::min(p, 1.0));
    }
    return grid;
}

std::string fmt(double x) {
    std::ostringstream out;
    out.precision(10);
    out << x;
    return out.str();
}

void write_curve_csv(const std::string& path, const std::vector<cobex::CurvePoint>& pts) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "p,trials,successes,fraction,std_err,mean_value,indeterminate\n";
    for (const auto& pt : pts)
        out << fmt(pt.p) << "," << pt.trials << "," << pt.successes << ","
            << fmt(pt.fraction()) << "," << fmt(pt.std_err) << "," << fmt(pt.mean_value)
            << "," << pt.indeterminate << "\n";
}

cobex::GF2Vector parse_support(const std::string& s, std::size_t length) {
    cobex::GF2Vector v(length);
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        std::size_t idx = std::stoul(tok);
        if (idx >= length) throw std::invalid_argument("cell index out of range");
        v.set(idx, true);
    }
    return v;
}

const char* status_name(cobex::ExpansionStatus s) {
    switch (s) {
        case cobex::ExpansionStatus::Exact: return "exact";
        case cobex::ExpansionStatus::Bounds: return "bounds";
        default: return "undefined-empty-domain";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cobex: exact coboundary expansion, filling, and random-complex experiments"};
    app.require_subcommand(1);

    cobex::Budget budget;
    if (const char* env = std::getenv("COBEX_WORKERS")) budget.workers = std::stoul(env);
    app.add_option("--q-max", budget.q_max, "max quotient dimension for coset tables")
        ->capture_default_str();
    app.add_option("--w-cap", budget.w_cap, "leader-weight search cap")->capture_default_str();
    app.add_option("--budget", budget.max_cosets, "max coset visits")->capture_default_str();
    app.add_option("--workers", budget.workers, "worker thread count")->capture_default_str();

    // ---- gen / info / sample ----
    FamilyOpts gen_f;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen", "generate a complex and write it as JSON");
    add_family_flags(gen, gen_f);
    gen->add_option("--out", gen_out, "output path (default stdout)");

    std::string info_file;
    auto* info = app.add_subcommand("info", "cell counts and degree profile of a complex");
    info->add_option("file", info_file, "complex JSON file");
    info->add_option("--in", info_file, "complex JSON file");

    FamilyOpts coh_f;
    int coh_k = 0;
    auto* coh = app.add_subcommand("cohomology", "dim H^k in the reduced complex");
    add_family_flags(coh, coh_f);
    coh->add_option("--k", coh_k)->required();

    FamilyOpts exp_f;
    int exp_k = 0;
    bool exp_unreduced = false;
    auto* exp = app.add_subcommand("expansion", "exact coboundary expansion h^k");
    add_family_flags(exp, exp_f);
    exp->add_option("--k", exp_k)->required();
    exp->add_flag("--unreduced", exp_unreduced, "use the unreduced cochain complex");

    FamilyOpts fn_f;
    int fn_k = 0;
    auto* fn = app.add_subcommand("filling-norm", "Gromov filling norm ||d^-1_k||");
    add_family_flags(fn, fn_f);
    fn->add_option("--k", fn_k)->required();

    int fc_n = 3, fc_j = 0;
    std::string fc_support, fc_strategy = "exhaustive";
    std::uint64_t fc_seed = 0;
    bool fc_random = false;
    auto* fc = app.add_subcommand("fill-cube", "fill a j-cycle in Q_n within the isoperimetric bound");
    fc->add_option("--n", fc_n)->required();
    fc->add_option("--j", fc_j)->required();
    fc->add_option("--support", fc_support, "comma-separated j-cell indices of the cycle");
    fc->add_flag("--random", fc_random, "use a random cycle (boundary of a random chain)");
    fc->add_option("--seed", fc_seed, "seed for --random");
    fc->add_option("--strategy", fc_strategy, "exhaustive|greedy");

    int du_n = 3, du_k = 0;
    auto* du = app.add_subcommand("dual", "check the cube/cross-polytope duality iota on all basis cochains");
    du->add_option("--n", du_n)->required();
    du->add_option("--k", du_k)->required();

    FamilyOpts ch_f;
    auto* ch = app.add_subcommand("cheeger", "Cheeger-Buser sandwich for a graph");
    add_family_flags(ch, ch_f);

    FamilyOpts sp_f;
    int sp_k = -1;
    std::uint64_t sp_seed = 0;
    std::size_t sp_probes = 0;
    auto* sp = app.add_subcommand("spectral", "graph spectrum / up-down Laplacian gap");
    add_family_flags(sp, sp_f);
    sp->add_option("--k", sp_k, "up-down Laplacian dimension (default: graph lambda1)");
    sp->add_option("--probes", sp_probes, "random Rayleigh-quotient probes");
    sp->add_option("--seed", sp_seed);

    std::string sa_model = "er", sa_out, sa_in;
    int sa_n = 0, sa_k = 0;
    double sa_p = 0.5;
    std::uint64_t sa_seed = 0, sa_trial = 0;
    auto* sa = app.add_subcommand("sample", "draw one random complex");
    sa->add_option("--model", sa_model, "er|lm|sub");
    sa->add_option("--n", sa_n);
    sa->add_option("--k", sa_k);
    sa->add_option("--p", sa_p)->required();
    sa->add_option("--seed", sa_seed);
    sa->add_option("--trial", sa_trial);
    sa->add_option("--in", sa_in, "ambient complex (model sub)");
    sa->add_option("--out", sa_out, "output path (default stdout)");

    std::string sw_model = "lm", sw_grid, sw_csv;
    int sw_n = 0, sw_k = 1;
    std::uint64_t sw_trials = 100, sw_seed = 0;
    auto* sw = app.add_subcommand("sweep", "threshold sweep: vanishing H^k / connectivity vs p");
    sw->add_option("--model", sw_model, "lm|er");
    sw->add_option("--n", sw_n)->required();
    sw->add_option("--k", sw_k);
    sw->add_option("--p-grid", sw_grid, "start:stop:step")->required();
    sw->add_option("--trials", sw_trials);
    sw->add_option("--seed", sw_seed);
    sw->add_option("--csv", sw_csv, "CSV output path");

    FamilyOpts im_f;
    int im_k = 1;
    double im_eps = 0.5;
    std::string im_grid, im_csv;
    std::uint64_t im_trials = 100, im_seed = 0;
    auto* im = app.add_subcommand("inherit-mc", "expansion inheritance Monte Carlo");
    add_family_flags(im, im_f);
    im->add_option("--k", im_k)->required();
    im->add_option("--eps", im_eps);
    im->add_option("--p-grid", im_grid)->required();
    im->add_option("--trials", im_trials);
    im->add_option("--seed", im_seed);
    im->add_option("--csv", im_csv);

    FamilyOpts cc_f;
    int cc_k = 1;
    double cc_p = 0.5;
    std::string cc_support, cc_eps = "0.3,0.5";
    std::uint64_t cc_trials = 10000, cc_seed = 0;
    auto* cc = app.add_subcommand("concentration", "Chernoff concentration of ||d beta||_Y");
    add_family_flags(cc, cc_f);
    cc->add_option("--k", cc_k)->required();
    cc->add_option("--beta", cc_support, "comma-separated k-cell support")->required();
    cc->add_option("--p", cc_p)->required();
    cc->add_option("--trials", cc_trials);
    cc->add_option("--seed", cc_seed);
    cc->add_option("--eps", cc_eps, "comma-separated epsilon list");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen) {
            cobex::Complex X = make_complex(gen_f);
            X.validate();
            if (gen_out.empty())
                std::cout << cobex::complex_to_json(X).dump(2) << "\n";
            else
                cobex::save_complex(X, gen_out);
        } else if (*info) {
            if (info_file.empty()) throw std::invalid_argument("info: need a complex file");
            cobex::Complex X = cobex::load_complex(info_file);
            json j;
            j["top_dim"] = X.top_dim;
            std::vector<std::size_t> counts;
            for (int d = 0; d <= X.top_dim; ++d) counts.push_back(X.cell_count(d));
            j["cell_counts"] = counts;
            if (X.top_dim >= 1) {
                auto prof = cobex::degree_profile(X, 0);
                j["D_0"] = prof.max_degree;
                j["mean_degree_0"] = cobex::to_string(prof.mean_degree);
            }
            std::cout << j.dump(2) << "\n";
        } else if (*coh) {
            cobex::Complex X = make_complex(coh_f);
            json j;
            j["k"] = coh_k;
            j["dim_Hk"] = cobex::cohomology_dim(X, coh_k);
            std::cout << j.dump(2) << "\n";
        } else if (*exp) {
            cobex::Complex X = make_complex(exp_f);
            auto rep = cobex::coboundary_expansion(X, exp_k, budget, !exp_unreduced);
            json j;
            j["k"] = exp_k;
            j["status"] = status_name(rep.status);
            j["quotient_dim"] = rep.quotient_dim;
            j["cosets_enumerated"] = rep.cosets_enumerated;
            if (rep.status == cobex::ExpansionStatus::Exact) {
                j["h"] = cobex::to_string(rep.value);
                j["witness"] = rep.witness.support();
            } else if (rep.status == cobex::ExpansionStatus::Bounds) {
                j["lower"] = cobex::to_string(rep.value);
                j["upper"] = cobex::to_string(rep.upper_bound);
            }
            if (auto fam = family_enum(exp_f.family)) {
                j["predicted"] = cobex::to_string(
                    cobex::predicted_bound(*fam, exp_f.n, exp_k));
            }
            if (rep.status == cobex::ExpansionStatus::Exact && rep.value > cobex::Rational(0))
                j["face_relative_ratio"] = cobex::face_relative_ratio(X, exp_k, rep.value);
            std::cout << j.dump(2) << "\n";
        } else if (*fn) {
            cobex::Complex X = make_complex(fn_f);
            auto rep = cobex::filling_norm(X, fn_k, budget);
            json j;
            j["k"] = fn_k;
            j["filling_norm"] = cobex::to_string(rep.value);
            j["exact"] = rep.exact;
            j["Hk_dim"] = cobex::cohomology_dim(X, fn_k);
            std::cout << j.dump(2) << "\n";
        } else if (*fc) {
            cobex::CubeIndex idx(fc_n);
            cobex::GF2Vector z(idx.count(fc_j));
            if (fc_random) {
                // boundary of a random (j+1)-chain; valid cycle since Q_n is contractible
                cobex::GF2Vector w(idx.count(fc_j + 1));
                for (std::size_t i = 0; i < w.size(); ++i)
                    if (cobex::rng::uniform(fc_seed, 0, i) < 0.5) w.set(i, true);
                z = idx.boundary_matrix(fc_j + 1).multiply(w);
            } else {
                z = parse_support(fc_support, idx.count(fc_j));
            }
            auto strategy = fc_strategy == "greedy" ? cobex::FillStrategy::Greedy
                                                    : cobex::FillStrategy::Exhaustive;
            auto fill = cobex::cube_fill(fc_n, fc_j, z, strategy);
            json j;
            j["n"] = fc_n;
            j["j"] = fc_j;
            j["vol_z"] = fill.z.weight();
            j["vol_y"] = fill.y.weight();
            j["y_support"] = fill.y.support();
            j["bound"] = cobex::to_string(fill.bound);
            j["achieved_ratio"] = cobex::to_string(fill.achieved_ratio);
            j["meets_bound"] = fill.meets_bound;
            std::cout << j.dump(2) << "\n";
        } else if (*du) {
            cobex::CrossCubeDuality iota(du_n, du_k);
            cobex::Complex cross = cobex::build_cross_polytope(du_n);
            cobex::CubeIndex cube(du_n);
            cobex::GF2Matrix d = cobex::coboundary(cross, du_k, true).matrix;
            cobex::CrossCubeDuality iota_next(du_n, du_k + 1);
            cobex::GF2Matrix bd = cube.boundary_matrix(du_n - du_k - 1);
            std::size_t mismatches = 0, checked = 0;
            for (std::size_t i = 0; i < cross.cell_count(du_k); ++i) {
                cobex::GF2Vector beta = cobex::GF2Vector::unit(cross.cell_count(du_k), i);
                auto lhs = iota_next.to_cube_chain(d.multiply(beta));
                auto rhs = bd.multiply(iota.to_cube_chain(beta));
                ++checked;
                if (lhs != rhs) ++mismatches;
            }
            json j;
            j["n"] = du_n;
            j["k"] = du_k;
            j["basis_cochains_checked"] = checked;
            j["mismatches"] = mismatches;
            std::cout << j.dump(2) << "\n";
            if (mismatches) return 1;
        } else if (*ch) {
            cobex::Complex G = make_complex(ch_f);
            auto rep = cobex::cheeger_buser_check(G, budget);
            json j;
            j["lambda1"] = rep.lambda1;
            j["max_degree"] = rep.max_degree;
            j["h0"] = cobex::to_string(rep.h_z2);
            j["cheeger_lower"] = rep.cheeger_lower;
            j["buser_upper"] = rep.buser_upper;
            j["sandwich_holds"] = rep.sandwich_holds;
            std::cout << j.dump(2) << "\n";
        } else if (*sp) {
            cobex::Complex X = make_complex(sp_f);
            json j;
            if (sp_k >= 0) {
                j["k"] = sp_k;
                j["up_down_gap"] = cobex::up_down_laplacian_gap(X, sp_k);
            } else {
                j["eigenvalues"] = cobex::eigenvalues_sym(cobex::graph_laplacian(X));
                j["lambda1"] = cobex::spectral_gap(X);
                if (sp_probes) {
                    auto probe = cobex::real_expansion_probe(X, sp_probes, sp_seed);
                    j["eigenvector_quotient"] = probe.eigenvector_quotient;
                    j["min_probe_quotient"] = probe.min_probe_quotient;
                }
            }
            std::cout << j.dump(2) << "\n";
        } else if (*sa) {
            cobex::SampleSpec spec;
            spec.n = sa_n;
            spec.k = sa_k;
            spec.p = sa_p;
            spec.seed = sa_seed;
            cobex::Complex ambient;
            if (sa_model == "er")
                spec.model = cobex::SampleModel::ErdosRenyi;
            else if (sa_model == "lm")
                spec.model = cobex::SampleModel::LinialMeshulam;
            else if (sa_model == "sub") {
                spec.model = cobex::SampleModel::PSubcomplex;
                ambient = cobex::load_complex(sa_in);
                spec.ambient = &ambient;
                spec.k = ambient.top_dim - 1;
            } else
                throw std::invalid_argument("sample: --model must be er|lm|sub");
            cobex::Complex Y = cobex::sample(spec, sa_trial);
            if (sa_out.empty())
                std::cout << cobex::complex_to_json(Y).dump(2) << "\n";
            else
                cobex::save_complex(Y, sa_out);
        } else if (*sw) {
            cobex::ExperimentConfig cfg;
            cfg.spec.n = sw_n;
            cfg.spec.k = sw_k;
            cfg.spec.seed = sw_seed;
            cfg.spec.model = sw_model == "er" ? cobex::SampleModel::ErdosRenyi
                                              : cobex::SampleModel::LinialMeshulam;
            cfg.p_grid = parse_grid(sw_grid);
            cfg.trials_per_point = sw_trials;
            cfg.workers = budget.workers;
            auto pts = cobex::threshold_sweep(cfg);
            if (!sw_csv.empty()) write_curve_csv(sw_csv, pts);
            json j = json::array();
            for (const auto& pt : pts)
                j.push_back({{"p", pt.p},
                             {"fraction", pt.fraction()},
                             {"trials", pt.trials},
                             {"std_err", pt.std_err}});
            std::cout << j.dump(2) << "\n";
        } else if (*im) {
            cobex::Complex X = make_complex(im_f);
            auto pts = cobex::expansion_inheritance_mc(X, im_k, parse_grid(im_grid),
                                                       im_trials, im_eps, im_seed, budget);
            std::vector<cobex::CurvePoint> curve;
            for (const auto& pt : pts) curve.push_back(pt.curve);
            if (!im_csv.empty()) write_curve_csv(im_csv, curve);
            json j = json::array();
            for (const auto& pt : pts)
                j.push_back({{"p", pt.curve.p},
                             {"bound_fraction", pt.curve.fraction()},
                             {"mean_ratio", pt.mean_ratio},
                             {"trials", pt.curve.trials},
                             {"indeterminate", pt.curve.indeterminate}});
            std::cout << j.dump(2) << "\n";
        } else if (*cc) {
            cobex::Complex X = make_complex(cc_f);
            cobex::GF2Vector beta = parse_support(cc_support, X.cell_count(cc_k));
            std::vector<double> epsilons;
            std::istringstream in(cc_eps);
            std::string tok;
            while (std::getline(in, tok, ',')) epsilons.push_back(std::stod(tok));
            auto st = cobex::coboundary_concentration(X, cc_k, beta, cc_p, cc_trials,
                                                      cc_seed, epsilons);
            json j;
            j["p"] = st.p;
            j["trials"] = st.trials;
            j["full_norm"] = st.full_norm;
            j["mean_norm"] = st.mean_norm;
            j["expected_mean"] = st.p * static_cast<double>(st.full_norm);
            j["epsilons"] = st.epsilons;
            j["tail_frequency"] = st.tail_frequency;
            j["chernoff_bound"] = st.chernoff_bound;
            std::cout << j.dump(2) << "\n";
        }
    } catch (const cobex::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
