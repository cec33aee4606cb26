#ifndef COBEX_COMPLEX_HPP
#define COBEX_COMPLEX_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cobex/rational.hpp"

namespace cobex {

struct CellId {
    int dimension;
    std::size_t index;
};

enum class LabelKind { VertexTuple, CubeWord, SignedSet, Opaque };

/// A finite regular cell complex with mod-2 boundary incidence.
///
/// Cells of each dimension are densely indexed; `boundary[d][i]` lists the
/// (d-1)-cells appearing an odd number of times in the boundary of the i-th
/// d-cell, sorted and duplicate-free. Immutable after construction.
class Complex {
public:
    int top_dim = 0;
    // cells[d] = printable labels of the d-cells, unique within a dimension.
    std::vector<std::vector<std::string>> cells;
    // boundary[d-1] holds the incidence lists for dimension d (d >= 1).
    std::vector<std::vector<std::vector<std::size_t>>> boundary;
    LabelKind label_kind = LabelKind::Opaque;

    std::size_t cell_count(int d) const {
        if (d < 0 || d > top_dim) return 0;
        return cells[d].size();
    }

    const std::vector<std::size_t>& boundary_of(int d, std::size_t i) const {
        return boundary[d - 1][i];
    }

    /// Checks sortedness, label uniqueness, index ranges, and that the mod-2
    /// composition of successive boundary maps vanishes. Throws on violation.
    void validate() const {
        if (static_cast<int>(cells.size()) != top_dim + 1)
            throw std::runtime_error("complex: cells/top_dim mismatch");
        if (static_cast<int>(boundary.size()) != std::max(top_dim, 0))
            throw std::runtime_error("complex: boundary/top_dim mismatch");
        for (int d = 0; d <= top_dim; ++d) {
            std::set<std::string> seen(cells[d].begin(), cells[d].end());
            if (seen.size() != cells[d].size())
                throw std::runtime_error("complex: duplicate labels in dimension " +
                                         std::to_string(d));
        }
        for (int d = 1; d <= top_dim; ++d) {
            if (boundary[d - 1].size() != cells[d].size())
                throw std::runtime_error("complex: boundary list size mismatch");
            for (const auto& bd : boundary[d - 1]) {
                if (!std::is_sorted(bd.begin(), bd.end()))
                    throw std::runtime_error("complex: boundary list not sorted");
                if (std::adjacent_find(bd.begin(), bd.end()) != bd.end())
                    throw std::runtime_error("complex: duplicate boundary entry");
                for (std::size_t j : bd)
                    if (j >= cells[d - 1].size())
                        throw std::runtime_error("complex: boundary index out of range");
            }
        }
        // boundary-of-boundary = 0 mod 2
        for (int d = 2; d <= top_dim; ++d) {
            for (std::size_t i = 0; i < cells[d].size(); ++i) {
                std::map<std::size_t, int> count;
                for (std::size_t f : boundary[d - 1][i])
                    for (std::size_t g : boundary[d - 2][f]) count[g] ^= 1;
                for (auto& [g, parity] : count)
                    if (parity)
                        throw std::runtime_error("complex: d∘d != 0 at cell " +
                                                 cells[d][i]);
            }
        }
    }
};

struct DegreeProfile {
    int k;
    std::size_t max_degree;  // D_k
    std::size_t min_degree;
    Rational mean_degree;
};

namespace detail {

inline std::string vertex_tuple_label(const std::vector<int>& verts) {
    std::string s;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(verts[i]);
    }
    return "{" + s + "}";
}

// All (k+1)-subsets of {0..n-1}, combination order.
inline std::vector<std::vector<int>> subsets(int n, int size) {
    std::vector<std::vector<int>> out;
    if (size > n || size < 0) return out;
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
        out.push_back(idx);
        int i = size;
        while (i > 0 && idx[i - 1] == n - size + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (int j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

}  // namespace detail

/// Builds a simplicial complex from its maximal faces (0-based vertex lists)
/// by downward closure. Labels use 1-based vertices, matching [n] = {1..n}.
inline Complex build_simplicial(const std::vector<std::vector<int>>& maximal_faces) {
    int top = 0;
    for (const auto& f : maximal_faces)
        top = std::max(top, static_cast<int>(f.size()) - 1);
    std::vector<std::set<std::vector<int>>> faces(top + 1);
    // downward closure
    std::vector<std::vector<int>> stack;
    for (auto f : maximal_faces) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        stack.push_back(f);
    }
    while (!stack.empty()) {
        auto f = stack.back();
        stack.pop_back();
        int d = static_cast<int>(f.size()) - 1;
        if (d < 0 || !faces[d].insert(f).second) continue;
        if (d > 0)
            for (std::size_t omit = 0; omit < f.size(); ++omit) {
                std::vector<int> sub;
                for (std::size_t i = 0; i < f.size(); ++i)
                    if (i != omit) sub.push_back(f[i]);
                stack.push_back(sub);
            }
    }
    Complex X;
    X.top_dim = top;
    X.label_kind = LabelKind::VertexTuple;
    X.cells.resize(top + 1);
    X.boundary.resize(top);
    std::vector<std::map<std::vector<int>, std::size_t>> index(top + 1);
    for (int d = 0; d <= top; ++d) {
        for (const auto& f : faces[d]) {
            index[d][f] = X.cells[d].size();
            std::vector<int> lbl(f);
            for (int& v : lbl) ++v;  // 1-based labels
            X.cells[d].push_back(detail::vertex_tuple_label(lbl));
        }
    }
    for (int d = 1; d <= top; ++d) {
        X.boundary[d - 1].resize(X.cells[d].size());
        for (const auto& [f, i] : index[d]) {
            std::vector<std::size_t> bd;
            for (std::size_t omit = 0; omit < f.size(); ++omit) {
                std::vector<int> sub;
                for (std::size_t j = 0; j < f.size(); ++j)
                    if (j != omit) sub.push_back(f[j]);
                bd.push_back(index[d - 1].at(sub));
            }
            std::sort(bd.begin(), bd.end());
            X.boundary[d - 1][i] = bd;
        }
    }
    return X;
}

/// The d-skeleton of the simplex on n vertices: cells of dimension j <= d are
/// all (j+1)-subsets of {1..n}.
inline Complex build_simplex_skeleton(int n, int d) {
    if (n < 1 || d < 0 || d > n - 1)
        throw std::invalid_argument("build_simplex_skeleton: need 0 <= d <= n-1");
    return build_simplicial(detail::subsets(n, d + 1));
}

/// The n-cube Q_n: j-cells are words over {0,1,*} with exactly j stars; the
/// boundary of a cell fixes each starred coordinate both ways.
inline Complex build_cube(int n) {
    if (n < 1) throw std::invalid_argument("build_cube: need n >= 1");
    Complex X;
    X.top_dim = n;
    X.label_kind = LabelKind::CubeWord;
    X.cells.resize(n + 1);
    X.boundary.resize(n);
    std::vector<std::map<std::string, std::size_t>> index(n + 1);
    // enumerate all 3^n words, bucketed by star count
    std::vector<std::string> words = {""};
    for (int i = 0; i < n; ++i) {
        std::vector<std::string> next;
        for (const auto& w : words)
            for (char c : {'0', '1', '*'}) next.push_back(w + c);
        words = std::move(next);
    }
    for (const auto& w : words) {
        int stars = static_cast<int>(std::count(w.begin(), w.end(), '*'));
        index[stars][w] = X.cells[stars].size();
        X.cells[stars].push_back(w);
    }
    for (int d = 1; d <= n; ++d) {
        X.boundary[d - 1].resize(X.cells[d].size());
        for (const auto& [w, i] : index[d]) {
            std::vector<std::size_t> bd;
            for (int pos = 0; pos < n; ++pos) {
                if (w[pos] != '*') continue;
                std::string f = w;
                f[pos] = '0';
                bd.push_back(index[d - 1].at(f));
                f[pos] = '1';
                bd.push_back(index[d - 1].at(f));
            }
            std::sort(bd.begin(), bd.end());
            X.boundary[d - 1][i] = bd;
        }
    }
    return X;
}

namespace detail {

// Cross-polytope cells are sets of signed coordinates with distinct indices.
// Encoded internally as sorted vectors of (index, sign).
inline std::string signed_set_label(const std::vector<std::pair<int, int>>& c) {
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += (c[i].second > 0 ? "+" : "-") + std::to_string(c[i].first + 1);
    }
    return "{" + s + "}";
}

}  // namespace detail

/// The n-dimensional cross-polytope: k-cells are sets of k+1 signed
/// coordinates with distinct indices; boundary deletes one element.
inline Complex build_cross_polytope(int n) {
    if (n < 1) throw std::invalid_argument("build_cross_polytope: need n >= 1");
    using Cell = std::vector<std::pair<int, int>>;
    Complex X;
    X.top_dim = n - 1;
    X.label_kind = LabelKind::SignedSet;
    X.cells.resize(n);
    X.boundary.resize(n - 1);
    std::vector<std::map<Cell, std::size_t>> index(n);
    for (int k = 0; k < n; ++k) {
        for (const auto& idxs : detail::subsets(n, k + 1)) {
            for (int signs = 0; signs < (1 << (k + 1)); ++signs) {
                Cell c;
                for (int i = 0; i <= k; ++i)
                    c.emplace_back(idxs[i], (signs >> i) & 1 ? -1 : 1);
                index[k][c] = X.cells[k].size();
                X.cells[k].push_back(detail::signed_set_label(c));
            }
        }
    }
    for (int d = 1; d < n; ++d) {
        X.boundary[d - 1].resize(X.cells[d].size());
        for (const auto& [c, i] : index[d]) {
            std::vector<std::size_t> bd;
            for (std::size_t omit = 0; omit < c.size(); ++omit) {
                Cell sub;
                for (std::size_t j = 0; j < c.size(); ++j)
                    if (j != omit) sub.push_back(c[j]);
                bd.push_back(index[d - 1].at(sub));
            }
            std::sort(bd.begin(), bd.end());
            X.boundary[d - 1][i] = bd;
        }
    }
    return X;
}

/// The complete (k+2)-partite complex on parts of size n: cells pick at most
/// one vertex per part, top dimension k+1.
inline Complex build_multipartite(int n, int k) {
    if (n < 1 || k < 0) throw std::invalid_argument("build_multipartite: need n >= 1, k >= 0");
    int parts = k + 2;
    std::vector<std::vector<int>> tops;
    std::vector<int> choice(parts, 0);
    for (;;) {
        std::vector<int> cell;
        for (int p = 0; p < parts; ++p) cell.push_back(p * n + choice[p]);
        tops.push_back(cell);
        int p = parts - 1;
        while (p >= 0 && choice[p] == n - 1) choice[p--] = 0;
        if (p < 0) break;
        ++choice[p];
    }
    return build_simplicial(tops);
}

/// Simplicial join: cells are unions of one cell (or nothing) from each factor.
/// Factor Y's vertices are relabeled above X's.
inline Complex join(const Complex& X, const Complex& Y) {
    if (X.label_kind != LabelKind::VertexTuple || Y.label_kind != LabelKind::VertexTuple)
        throw std::domain_error("join: both factors must be simplicial");
    auto tops_of = [](const Complex& C) {
        // recover vertex lists of all cells; maximal cells suffice for closure
        std::vector<std::vector<int>> out;
        for (int d = 0; d <= C.top_dim; ++d)
            for (const auto& lbl : C.cells[d]) {
                std::vector<int> v;
                std::string cur;
                for (char ch : lbl)
                    if (ch >= '0' && ch <= '9')
                        cur += ch;
                    else if (!cur.empty()) {
                        v.push_back(std::stoi(cur) - 1);
                        cur.clear();
                    }
                out.push_back(v);
            }
        return out;
    };
    int off = static_cast<int>(X.cell_count(0));
    std::vector<std::vector<int>> joined;
    auto xs = tops_of(X);
    auto ys = tops_of(Y);
    for (const auto& a : xs)
        for (const auto& b : ys) {
            std::vector<int> c = a;
            for (int v : b) c.push_back(v + off);
            joined.push_back(c);
        }
    return build_simplicial(joined);
}

inline DegreeProfile degree_profile(const Complex& X, int k) {
    if (k < 0 || k >= X.top_dim)
        throw std::invalid_argument("degree_profile: need 0 <= k < top_dim");
    std::vector<std::size_t> deg(X.cell_count(k), 0);
    for (const auto& bd : X.boundary[k])
        for (std::size_t f : bd) ++deg[f];
    DegreeProfile p;
    p.k = k;
    p.max_degree = *std::max_element(deg.begin(), deg.end());
    p.min_degree = *std::min_element(deg.begin(), deg.end());
    std::size_t total = 0;
    for (std::size_t d : deg) total += d;
    p.mean_degree = Rational(static_cast<std::int64_t>(total),
                             static_cast<std::int64_t>(deg.size()));
    return p;
}

/// Removes top-dimensional cells by index. Only top cells may be deleted,
/// keeping the complex closed. If all top cells go, top_dim drops by one.
inline Complex delete_cells(const Complex& X, int dim, const std::set<std::size_t>& drop) {
    if (dim != X.top_dim)
        throw std::domain_error("delete_cells: only top-dimensional cells are deletable");
    for (std::size_t i : drop)
        if (i >= X.cell_count(dim)) throw std::invalid_argument("delete_cells: index out of range");
    Complex Y = X;
    auto& lbls = Y.cells[dim];
    std::vector<std::string> keep_lbls;
    std::vector<std::vector<std::size_t>> keep_bd;
    for (std::size_t i = 0; i < lbls.size(); ++i) {
        if (drop.count(i)) continue;
        keep_lbls.push_back(lbls[i]);
        if (dim >= 1) keep_bd.push_back(X.boundary[dim - 1][i]);
    }
    Y.cells[dim] = std::move(keep_lbls);
    if (dim >= 1) Y.boundary[dim - 1] = std::move(keep_bd);
    if (Y.cells[dim].empty() && dim > 0) {
        Y.cells.pop_back();
        Y.boundary.pop_back();
        Y.top_dim = dim - 1;
    }
    return Y;
}

}  // namespace cobex

#endif
