#ifndef COBEX_SPECTRAL_HPP
#define COBEX_SPECTRAL_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cobex/cochain.hpp"
#include "cobex/complex.hpp"
#include "cobex/expansion.hpp"
#include "cobex/random.hpp"
#include "cobex/rational.hpp"

namespace cobex {

/// Dense symmetric matrix for the real spectral computations.
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(std::size_t order)
        : order_(order), data_(order * order, 0.0) {}

    std::size_t order() const { return order_; }
    double& at(std::size_t r, std::size_t c) { return data_[r * order_ + c]; }
    double at(std::size_t r, std::size_t c) const { return data_[r * order_ + c]; }

private:
    std::size_t order_ = 0;
    std::vector<double> data_;
};

/// Cyclic Jacobi eigensolver: all eigenvalues ascending, optionally the
/// orthogonal eigenvector matrix (columns matching the sorted eigenvalues).
inline std::vector<double> eigenvalues_sym(SymmetricMatrix a, double tol = 1e-10,
                                           std::vector<std::vector<double>>* vectors = nullptr,
                                           std::size_t sweep_cap = 100) {
    std::size_t n = a.order();
    std::vector<std::vector<double>> v;
    if (vectors) {
        v.assign(n, std::vector<double>(n, 0.0));
        for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;
    }
    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a.at(i, j) * a.at(i, j);
        return std::sqrt(s);
    };
    std::size_t sweeps = 0;
    while (n > 1 && off_norm() >= tol) {
        if (++sweeps > sweep_cap)
            throw std::runtime_error("eigenvalues_sym: Jacobi did not converge");
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                double apq = a.at(p, q);
                if (std::abs(apq) < tol / (10.0 * static_cast<double>(n * n))) continue;
                double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (std::size_t i = 0; i < n; ++i) {
                    double aip = a.at(i, p), aiq = a.at(i, q);
                    a.at(i, p) = c * aip - s * aiq;
                    a.at(i, q) = s * aip + c * aiq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    double api = a.at(p, i), aqi = a.at(q, i);
                    a.at(p, i) = c * api - s * aqi;
                    a.at(q, i) = s * api + c * aqi;
                }
                if (vectors)
                    for (std::size_t i = 0; i < n; ++i) {
                        double vip = v[i][p], viq = v[i][q];
                        v[i][p] = c * vip - s * viq;
                        v[i][q] = s * vip + c * viq;
                    }
            }
    }
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return a.at(x, x) < a.at(y, y); });
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a.at(order[i], order[i]);
    if (vectors) {
        vectors->assign(n, std::vector<double>(n));
        for (std::size_t col = 0; col < n; ++col)
            for (std::size_t i = 0; i < n; ++i) (*vectors)[i][col] = v[i][order[col]];
    }
    return eig;
}

/// Degree-diagonal minus adjacency, from the dimension-1 incidence lists.
inline SymmetricMatrix graph_laplacian(const Complex& G) {
    if (G.top_dim < 1) throw std::invalid_argument("graph_laplacian: need edges");
    SymmetricMatrix L(G.cell_count(0));
    for (std::size_t e = 0; e < G.cell_count(1); ++e) {
        const auto& bd = G.boundary_of(1, e);
        if (bd.size() != 2) continue;
        std::size_t u = bd[0], w = bd[1];
        L.at(u, u) += 1.0;
        L.at(w, w) += 1.0;
        L.at(u, w) -= 1.0;
        L.at(w, u) -= 1.0;
    }
    return L;
}

/// lambda_1: second-smallest Laplacian eigenvalue.
inline double spectral_gap(const Complex& G) {
    auto eig = eigenvalues_sym(graph_laplacian(G));
    if (eig.size() < 2) throw std::invalid_argument("spectral_gap: need >= 2 vertices");
    return eig[1];
}

struct ProbeReport {
    double lambda1 = 0.0;
    double eigenvector_quotient = 0.0;  // must match sqrt(lambda1)
    double min_probe_quotient = 0.0;    // over random probes; >= sqrt(lambda1)
    std::size_t probes = 0;
};

/// Evaluates the real Rayleigh-type quotient ||d beta||_2 / min_c ||beta + c 1||_2
/// at the lambda_1-eigenvector and at seeded random vectors. The variational
/// characterization makes sqrt(lambda_1) the minimum over nonconstant beta.
inline ProbeReport real_expansion_probe(const Complex& G, std::size_t probes,
                                        std::uint64_t seed) {
    std::size_t n = G.cell_count(0);
    std::vector<std::vector<double>> vecs;
    auto eig = eigenvalues_sym(graph_laplacian(G), 1e-12, &vecs);
    if (eig.size() < 2 || eig[1] < 1e-9)
        throw std::domain_error("real_expansion_probe: graph must be connected");
    auto quotient = [&](const std::vector<double>& beta) {
        double mean = 0.0;
        for (double b : beta) mean += b;
        mean /= static_cast<double>(n);
        double den = 0.0;
        for (double b : beta) den += (b - mean) * (b - mean);
        double num = 0.0;
        for (std::size_t e = 0; e < G.cell_count(1); ++e) {
            const auto& bd = G.boundary_of(1, e);
            double diff = beta[bd[0]] - beta[bd[1]];
            num += diff * diff;
        }
        return std::sqrt(num / den);
    };
    ProbeReport rep;
    rep.lambda1 = eig[1];
    rep.probes = probes;
    std::vector<double> fiedler(n);
    for (std::size_t i = 0; i < n; ++i) fiedler[i] = vecs[i][1];
    rep.eigenvector_quotient = quotient(fiedler);
    rep.min_probe_quotient = rep.eigenvector_quotient;
    for (std::size_t t = 0; t < probes; ++t) {
        std::vector<double> beta(n);
        bool constant = true;
        for (std::size_t i = 0; i < n; ++i) {
            beta[i] = rng::uniform(seed, t, i) - 0.5;
            if (i && std::abs(beta[i] - beta[0]) > 1e-12) constant = false;
        }
        if (constant) continue;
        rep.min_probe_quotient = std::min(rep.min_probe_quotient, quotient(beta));
    }
    return rep;
}

struct SpectralReport {
    double lambda1 = 0.0;
    std::size_t max_degree = 0;
    Rational h_z2{0};
    double cheeger_lower = 0.0;  // lambda1 / 2
    double buser_upper = 0.0;    // sqrt(2 D lambda1)
    bool sandwich_holds = false;
};

/// Cheeger-Buser check: lambda1/2 <= h^0(G; Z2) <= sqrt(2 D lambda1),
/// with 1e-8 tolerance folded into both comparisons.
inline SpectralReport cheeger_buser_check(const Complex& G, const Budget& budget = {}) {
    SpectralReport rep;
    auto eig = eigenvalues_sym(graph_laplacian(G));
    rep.lambda1 = eig.size() > 1 ? eig[1] : 0.0;
    if (rep.lambda1 < 1e-12) rep.lambda1 = std::max(rep.lambda1, 0.0);
    rep.max_degree = degree_profile(G, 0).max_degree;
    if (G.cell_count(1) == 0)
        rep.h_z2 = Rational(0);
    else {
        ExpansionReport h = coboundary_expansion(G, 0, budget);
        if (h.status == ExpansionStatus::Bounds) throw BudgetExceeded(h.quotient_dim);
        rep.h_z2 = h.status == ExpansionStatus::Exact ? h.value : Rational(0);
    }
    rep.cheeger_lower = rep.lambda1 / 2.0;
    rep.buser_upper =
        std::sqrt(2.0 * static_cast<double>(rep.max_degree) * rep.lambda1);
    double h = to_double(rep.h_z2);
    rep.sandwich_holds = rep.cheeger_lower <= h + 1e-8 && h <= rep.buser_upper + 1e-8;
    return rep;
}

namespace detail {

/// Signed incidence matrix of d: C^k -> C^{k+1} for a simplicial complex
/// with the lexicographic orientation; entry is (-1)^i for the face omitting
/// the i-th smallest vertex.
inline std::vector<std::vector<double>> signed_coboundary(const Complex& X, int k) {
    if (X.label_kind != LabelKind::VertexTuple)
        throw std::domain_error("signed incidence needs a simplicial complex");
    auto parse = [](const std::string& lbl) {
        std::vector<int> v;
        std::string cur;
        for (char ch : lbl)
            if (ch >= '0' && ch <= '9')
                cur += ch;
            else if (!cur.empty()) {
                v.push_back(std::stoi(cur));
                cur.clear();
            }
        return v;
    };
    std::map<std::vector<int>, std::size_t> face_index;
    for (std::size_t i = 0; i < X.cell_count(k); ++i)
        face_index[parse(X.cells[k][i])] = i;
    std::vector<std::vector<double>> m(X.cell_count(k + 1),
                                       std::vector<double>(X.cell_count(k), 0.0));
    for (std::size_t x = 0; x < X.cell_count(k + 1); ++x) {
        std::vector<int> verts = parse(X.cells[k + 1][x]);
        for (std::size_t omit = 0; omit < verts.size(); ++omit) {
            std::vector<int> face;
            for (std::size_t i = 0; i < verts.size(); ++i)
                if (i != omit) face.push_back(verts[i]);
            m[x][face_index.at(face)] = (omit % 2 == 0) ? 1.0 : -1.0;
        }
    }
    return m;
}

}  // namespace detail

/// Smallest eigenvalue of the k-th up-down combinatorial Laplacian restricted
/// to the orthogonal complement of the k-coboundaries (reduced at k = 0, so
/// k = 0 recovers lambda_1 of the graph Laplacian). Exploratory quantity.
inline double up_down_laplacian_gap(const Complex& X, int k) {
    if (k < 0 || k > X.top_dim) throw std::invalid_argument("up_down_laplacian_gap: bad k");
    std::size_t m = X.cell_count(k);
    std::vector<std::vector<double>> up, down;
    if (k < X.top_dim) up = detail::signed_coboundary(X, k);
    if (k >= 1)
        down = detail::signed_coboundary(X, k - 1);
    SymmetricMatrix L(m);
    for (const auto& row : up)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) L.at(i, j) += row[i] * row[j];
    if (!down.empty()) {
        std::size_t lower = down[0].size();
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                double s = 0.0;
                for (std::size_t r = 0; r < lower; ++r) s += down[i][r] * down[j][r];
                L.at(i, j) += s;
            }
    }
    // basis of the complement of B^k (constants' span at k = 0, reduced)
    std::vector<std::vector<double>> span;
    if (k == 0) {
        span.push_back(std::vector<double>(m, 1.0));
    } else {
        for (std::size_t c = 0; c < down[0].size(); ++c) {
            std::vector<double> col(m);
            for (std::size_t i = 0; i < m; ++i) col[i] = down[i][c];
            span.push_back(std::move(col));
        }
    }
    auto dot = [m](const std::vector<double>& a, const std::vector<double>& b) {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) s += a[i] * b[i];
        return s;
    };
    std::vector<std::vector<double>> ortho;  // orthonormal basis of B^k
    for (auto& v : span) {
        for (const auto& u : ortho) {
            double c = dot(v, u);
            for (std::size_t i = 0; i < m; ++i) v[i] -= c * u[i];
        }
        double nrm = std::sqrt(dot(v, v));
        if (nrm > 1e-9) {
            for (double& x : v) x /= nrm;
            ortho.push_back(v);
        }
    }
    std::vector<std::vector<double>> comp;  // orthonormal basis of the complement
    for (std::size_t e = 0; e < m; ++e) {
        std::vector<double> v(m, 0.0);
        v[e] = 1.0;
        for (const auto& u : ortho) {
            double c = dot(v, u);
            for (std::size_t i = 0; i < m; ++i) v[i] -= c * u[i];
        }
        for (const auto& u : comp) {
            double c = dot(v, u);
            for (std::size_t i = 0; i < m; ++i) v[i] -= c * u[i];
        }
        double nrm = std::sqrt(dot(v, v));
        if (nrm > 1e-9) {
            for (double& x : v) x /= nrm;
            comp.push_back(v);
        }
    }
    if (comp.empty()) return 0.0;
    SymmetricMatrix R(comp.size());
    for (std::size_t a = 0; a < comp.size(); ++a)
        for (std::size_t b = a; b < comp.size(); ++b) {
            double s = 0.0;
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) s += comp[a][i] * L.at(i, j) * comp[b][j];
            R.at(a, b) = s;
            R.at(b, a) = s;
        }
    return eigenvalues_sym(R).front();
}

}  // namespace cobex

#endif
