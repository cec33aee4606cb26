#ifndef COBEX_FILLING_HPP
#define COBEX_FILLING_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cobex/cochain.hpp"
#include "cobex/complex.hpp"
#include "cobex/gf2.hpp"
#include "cobex/rational.hpp"

namespace cobex {

/// Dense indexing of the cells of Q_n, one table per dimension, in the same
/// order as the labels produced by build_cube (words enumerated with digit
/// order 0 < 1 < *, leftmost coordinate most significant).
///
/// A cell is a pair of bit masks: `stars` marks the free coordinates,
/// `values` the fixed coordinate values (zero on starred positions).
class CubeIndex {
public:
    struct Cell {
        std::uint32_t stars;
        std::uint32_t values;
        bool operator<(const Cell& o) const {
            return stars != o.stars ? stars < o.stars : values < o.values;
        }
    };

    explicit CubeIndex(int n) : n_(n) {
        if (n < 1 || n > 20) throw std::invalid_argument("CubeIndex: n out of range");
        cells_.resize(n + 1);
        index_.resize(n + 1);
        std::uint64_t total = 1;
        for (int i = 0; i < n; ++i) total *= 3;
        for (std::uint64_t t = 0; t < total; ++t) {
            Cell c{0, 0};
            std::uint64_t rem = t;
            std::uint64_t place = total / 3;
            for (int pos = 0; pos < n; ++pos) {
                int digit = static_cast<int>(rem / place);
                rem %= place;
                if (pos + 1 < n) place /= 3;
                if (digit == 1)
                    c.values |= std::uint32_t(1) << pos;
                else if (digit == 2)
                    c.stars |= std::uint32_t(1) << pos;
            }
            int d = std::popcount(c.stars);
            index_[d][c] = cells_[d].size();
            cells_[d].push_back(c);
        }
    }

    int n() const { return n_; }
    std::size_t count(int d) const { return cells_[d].size(); }
    const Cell& cell(int d, std::size_t i) const { return cells_[d][i]; }
    std::size_t index_of(int d, const Cell& c) const { return index_[d].at(c); }

    /// Mod-2 boundary matrix of dimension d: rows are (d-1)-cells, columns
    /// d-cells, viewed as the map C_d -> C_{d-1}.
    GF2Matrix boundary_matrix(int d) const {
        GF2Matrix m(count(d - 1), count(d));
        for (std::size_t i = 0; i < count(d); ++i) {
            Cell c = cells_[d][i];
            std::uint32_t st = c.stars;
            while (st) {
                int pos = std::countr_zero(st);
                st &= st - 1;
                Cell f{c.stars & ~(std::uint32_t(1) << pos), c.values};
                m.set(index_of(d - 1, f), i, true);
                f.values |= std::uint32_t(1) << pos;
                m.set(index_of(d - 1, f), i, true);
            }
        }
        return m;
    }

private:
    int n_;
    std::vector<std::vector<Cell>> cells_;
    std::vector<std::map<Cell, std::size_t>> index_;
};

enum class FillStrategy { Exhaustive, Greedy };

struct ChainFill {
    GF2Vector z;  // the input j-cycle
    GF2Vector y;  // the filling (j+1)-chain, boundary y = z
    Rational achieved_ratio{0};
    Rational bound{0};  // (n-j) / (2(j+1))
    bool meets_bound = true;
};

namespace detail {

// z restricted to the facet {coord i = b}: cells with i unset in stars and
// value b there.
inline GF2Vector restrict_to_facet(const CubeIndex& idx, int j, const GF2Vector& z, int i,
                                   bool b) {
    GF2Vector out(z.size());
    for (std::size_t c : z.support()) {
        const auto& cell = idx.cell(j, c);
        if ((cell.stars >> i) & 1) continue;
        if (((cell.values >> i) & 1) == static_cast<std::uint32_t>(b)) out.set(c, true);
    }
    return out;
}

inline CubeIndex::Cell delete_coord(CubeIndex::Cell c, int i) {
    auto squeeze = [&](std::uint32_t m) {
        std::uint32_t low = m & ((std::uint32_t(1) << i) - 1);
        std::uint32_t high = (m >> (i + 1)) << i;
        return low | high;
    };
    return {squeeze(c.stars), squeeze(c.values)};
}

inline CubeIndex::Cell insert_coord(CubeIndex::Cell c, int i, char digit) {
    auto widen = [&](std::uint32_t m) {
        std::uint32_t low = m & ((std::uint32_t(1) << i) - 1);
        std::uint32_t high = (m >> i) << (i + 1);
        return low | high;
    };
    CubeIndex::Cell out{widen(c.stars), widen(c.values)};
    if (digit == '1') out.values |= std::uint32_t(1) << i;
    if (digit == '*') out.stars |= std::uint32_t(1) << i;
    return out;
}

/// Recursive facet construction from the isoperimetric lemma: for a chosen
/// facet pair H+/H-, take the product (z ∩ H+) x I plus a recursive filling
/// of the projected cycle (z ∩ H+) + (z ∩ H-) inside H-.
inline GF2Vector fill_with_facet(const std::vector<CubeIndex>& idx, int m, int j,
                                 const GF2Vector& z, int i, bool b, FillStrategy strategy);

inline GF2Vector fill_rec(const std::vector<CubeIndex>& idx, int m, int j,
                          const GF2Vector& z, FillStrategy strategy) {
    const CubeIndex& I = idx[m];
    if (m == j + 1) {
        // cycles of top codimension one form the span of the boundary of Q_{j+1}
        GF2Vector y(I.count(j + 1));
        if (z.is_zero()) return y;
        y.set(0, true);  // the unique top cell
        GF2Vector bd = I.boundary_matrix(j + 1).multiply(y);
        if (bd != z) throw std::domain_error("cube_fill: input is not a cycle");
        return y;
    }
    if (strategy == FillStrategy::Greedy) {
        // largest restriction to H+ first, ties by smallest (i, b)
        int best_i = 0;
        bool best_b = false;
        std::size_t best_vol = 0;
        bool have = false;
        for (int i = 0; i < m; ++i)
            for (bool b : {false, true}) {
                std::size_t vol = restrict_to_facet(I, j, z, i, b).weight();
                if (!have || vol > best_vol) {
                    have = true;
                    best_vol = vol;
                    best_i = i;
                    best_b = b;
                }
            }
        return fill_with_facet(idx, m, j, z, best_i, best_b, strategy);
    }
    std::optional<GF2Vector> best;
    for (int i = 0; i < m; ++i)
        for (bool b : {false, true}) {
            GF2Vector y = fill_with_facet(idx, m, j, z, i, b, strategy);
            if (!best || y.weight() < best->weight()) best = std::move(y);
        }
    return *best;
}

inline GF2Vector fill_with_facet(const std::vector<CubeIndex>& idx, int m, int j,
                                 const GF2Vector& z, int i, bool b, FillStrategy strategy) {
    const CubeIndex& I = idx[m];
    const CubeIndex& S = idx[m - 1];
    GF2Vector zp = restrict_to_facet(I, j, z, i, b);
    GF2Vector zm = restrict_to_facet(I, j, z, i, !b);
    // project both restrictions into Q_{m-1} and fill their sum there
    GF2Vector zproj(S.count(j));
    for (std::size_t c : zp.support())
        zproj.flip(S.index_of(j, delete_coord(I.cell(j, c), i)));
    for (std::size_t c : zm.support())
        zproj.flip(S.index_of(j, delete_coord(I.cell(j, c), i)));
    GF2Vector ylow = fill_rec(idx, m - 1, j, zproj, strategy);
    // y+ = (z ∩ H+) x I; y- = the recursive filling embedded in H-
    GF2Vector y(I.count(j + 1));
    for (std::size_t c : zp.support()) {
        CubeIndex::Cell cell = I.cell(j, c);
        cell.stars |= std::uint32_t(1) << i;
        cell.values &= ~(std::uint32_t(1) << i);
        y.flip(I.index_of(j + 1, cell));
    }
    for (std::size_t c : ylow.support())
        y.flip(I.index_of(j + 1, insert_coord(S.cell(j + 1, c), i, !b ? '1' : '0')));
    return y;
}

}  // namespace detail

/// Fills a j-cycle z in Q_n with a (j+1)-chain y, boundary y = z. The
/// exhaustive strategy tries every facet pair at each recursion level and
/// keeps the minimum-volume result, which guarantees
/// vol(y) <= (n-j)/(2(j+1)) vol(z); greedy picks one facet per level and only
/// checks the bound afterwards, flagging violations in `meets_bound`.
inline ChainFill cube_fill(int n, int j, const GF2Vector& z,
                           FillStrategy strategy = FillStrategy::Exhaustive) {
    if (j < 0 || j >= n) throw std::invalid_argument("cube_fill: need 0 <= j < n");
    std::vector<CubeIndex> idx;
    for (int m = 0; m <= n; ++m) idx.emplace_back(std::max(m, 1));
    const CubeIndex& I = idx[n];
    if (z.size() != I.count(j)) throw std::invalid_argument("cube_fill: chain length mismatch");
    if (j == 0) {
        // reduced convention: 0-cycles are the even-size vertex sets
        if (z.weight() % 2 != 0) throw std::domain_error("cube_fill: input is not a cycle");
    } else if (!I.boundary_matrix(j).multiply(z).is_zero()) {
        throw std::domain_error("cube_fill: input is not a cycle");
    }
    ChainFill out;
    out.z = z;
    out.bound = Rational(n - j, 2 * (j + 1));
    if (z.is_zero()) {
        out.y = GF2Vector(I.count(j + 1));
        out.achieved_ratio = Rational(0);
        return out;
    }
    out.y = detail::fill_rec(idx, n, j, z, strategy);
    if (I.boundary_matrix(j + 1).multiply(out.y) != z)
        throw std::logic_error("cube_fill: boundary check failed");
    out.achieved_ratio = Rational(static_cast<std::int64_t>(out.y.weight()),
                                  static_cast<std::int64_t>(z.weight()));
    out.meets_bound = out.achieved_ratio <= out.bound;
    return out;
}

/// Exact minimum volume of any filling of z, by syndrome decoding over the
/// boundary map of Q_n. Independent of the facet recursion.
inline std::size_t min_fill_oracle(int n, int j, const GF2Vector& z,
                                   std::size_t q_max = 28) {
    CubeIndex I(n);
    GF2Matrix bd = I.boundary_matrix(j + 1);
    GF2Vector target = z;
    std::optional<GF2Vector> y0;
    if (j == 0) {
        if (z.weight() % 2 != 0) throw std::domain_error("min_fill_oracle: not a cycle");
    }
    y0 = solve(bd, target);
    if (!y0) throw std::domain_error("min_fill_oracle: not a boundary");
    if (y0->is_zero()) return 0;
    CosetTable table(kernel_basis(bd), bd.cols(), bd.cols(), q_max);
    std::uint64_t s = table.syndrome(*y0);
    return table.leader_weight(s);
}

/// The cube / cross-polytope duality: the k-cell of the cross-polytope with
/// signed coordinates {sigma_i e_i : i in S} corresponds to the cube cell
/// whose coordinates in S are fixed to (1+sigma_i)/2 and free elsewhere.
/// Index arrays follow build_cross_polytope / build_cube label order.
class CrossCubeDuality {
public:
    CrossCubeDuality(int n, int k) : n_(n), k_(k), cube_(n) {
        if (k < 0 || k > n - 1) throw std::invalid_argument("CrossCubeDuality: k out of range");
        // mirror the cell enumeration of build_cross_polytope
        std::vector<int> comb(k + 1);
        for (int i = 0; i <= k; ++i) comb[i] = i;
        for (;;) {
            for (int signs = 0; signs < (1 << (k + 1)); ++signs) {
                CubeIndex::Cell c{~std::uint32_t(0), 0};
                c.stars = (std::uint32_t(1) << n) - 1;
                for (int i = 0; i <= k; ++i) {
                    c.stars &= ~(std::uint32_t(1) << comb[i]);
                    bool negative = (signs >> i) & 1;
                    if (!negative) c.values |= std::uint32_t(1) << comb[i];
                }
                cross_to_cube_.push_back(cube_.index_of(n - k - 1, c));
            }
            int i = k + 1;
            while (i > 0 && comb[i - 1] == n - (k + 1) + (i - 1)) --i;
            if (i == 0) break;
            ++comb[i - 1];
            for (int j = i; j < k + 1; ++j) comb[j] = comb[j - 1] + 1;
        }
        cube_to_cross_.assign(cross_to_cube_.size(), 0);
        for (std::size_t i = 0; i < cross_to_cube_.size(); ++i)
            cube_to_cross_[cross_to_cube_[i]] = i;
    }

    /// iota: C^k of the cross-polytope -> C_{n-k-1} of the cube.
    GF2Vector to_cube_chain(const GF2Vector& beta) const {
        GF2Vector out(cross_to_cube_.size());
        for (std::size_t i : beta.support()) out.set(cross_to_cube_[i], true);
        return out;
    }

    GF2Vector to_cross_cochain(const GF2Vector& chain) const {
        GF2Vector out(cube_to_cross_.size());
        for (std::size_t i : chain.support()) out.set(cube_to_cross_[i], true);
        return out;
    }

    int cube_dim() const { return n_ - k_ - 1; }

private:
    int n_, k_;
    CubeIndex cube_;
    std::vector<std::size_t> cross_to_cube_;   // cross k-cell index -> cube cell index
    std::vector<std::size_t> cube_to_cross_;
};

}  // namespace cobex

#endif
