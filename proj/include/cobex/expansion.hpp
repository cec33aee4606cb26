#ifndef COBEX_EXPANSION_HPP
#define COBEX_EXPANSION_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "cobex/cochain.hpp"
#include "cobex/complex.hpp"
#include "cobex/gf2.hpp"
#include "cobex/rational.hpp"

namespace cobex {

struct Budget {
    std::size_t q_max = 28;
    std::size_t w_cap = 64;
    std::uint64_t max_cosets = 100'000'000;
    std::size_t workers = 1;
};

enum class ExpansionStatus { Exact, Bounds, UndefinedEmptyDomain };

struct ExpansionReport {
    int k = 0;
    ExpansionStatus status = ExpansionStatus::Exact;
    Rational value{0};        // exact value, or the certified lower bound
    Rational upper_bound{0};  // meaningful when status == Bounds
    GF2Vector witness;        // coset leader attaining the minimum (exact mode)
    std::uint64_t cosets_enumerated = 0;
    std::size_t quotient_dim = 0;
};

namespace detail {

inline std::uint64_t gray(std::uint64_t i) { return i ^ (i >> 1); }

/// Minimum over syndromes in [lo, hi) of num(s)/den(s), where num(s) is the
/// weight of the XOR of generator images selected by the Gray code of s
/// (optionally masked), and den(s) comes from the coset table. Ties broken by
/// smallest Gray syndrome. Returns (num, den, syndrome) or nullopt.
struct CosetScanResult {
    std::uint64_t num, den, syndrome;
};

template <typename DenFn, typename Better>
std::optional<CosetScanResult> scan_cosets(const std::vector<GF2Vector>& images,
                                           const GF2Vector* row_mask, std::uint64_t lo,
                                           std::uint64_t hi, DenFn den_of, Better better) {
    if (lo < 1) lo = 1;
    if (lo >= hi) return std::nullopt;
    std::size_t q = images.size();
    GF2Vector cur(images[0].size());
    std::uint64_t g0 = gray(lo);
    for (std::size_t b = 0; b < q; ++b)
        if ((g0 >> b) & 1) cur.xor_with(images[b]);
    std::optional<CosetScanResult> best;
    GF2Vector masked = cur;
    for (std::uint64_t i = lo;; ++i) {
        std::uint64_t s = gray(i);
        std::uint64_t num;
        if (row_mask) {
            masked = cur;
            masked.and_with(*row_mask);
            num = masked.weight();
        } else {
            num = cur.weight();
        }
        std::uint64_t den = den_of(s);
        if (den != 0) {
            CosetScanResult cand{num, den, s};
            if (!best || better(cand, *best)) best = cand;
        }
        if (i + 1 >= hi) break;
        cur.xor_with(images[std::countr_zero(i + 1)]);
    }
    return best;
}

}  // namespace detail

/// Exact h^k(X) = min over nontrivial cosets of B^k of ||d beta|| / ||[beta]||.
/// Both numerator and denominator are coset invariants, so one representative
/// per coset suffices; representatives are walked in Gray-code order with one
/// XOR of a precomputed generator image per step.
///
/// `row_mask`, when given, restricts the numerator to a subset of the
/// (k+1)-cells (used for random subcomplexes sharing the ambient skeleton).
inline ExpansionReport expansion_from_table(const CosetTable& table, const GF2Matrix& d,
                                            const Budget& budget,
                                            const GF2Vector* row_mask = nullptr) {
    ExpansionReport rep;
    rep.quotient_dim = table.quotient_dim();
    std::size_t q = table.quotient_dim();
    if (q == 0) {
        rep.status = ExpansionStatus::UndefinedEmptyDomain;
        return rep;
    }
    std::uint64_t total = std::uint64_t(1) << q;
    rep.cosets_enumerated = total - 1;
    // generator images: d applied to the unit vector at each free column
    std::vector<GF2Vector> images;
    images.reserve(q);
    for (std::size_t c : table.free_columns())
        images.push_back(d.multiply(GF2Vector::unit(d.cols(), c)));

    auto den_of = [&](std::uint64_t s) -> std::uint64_t { return table.leader_weight(s); };
    auto better = [](const detail::CosetScanResult& a, const detail::CosetScanResult& b) {
        __int128 lhs = static_cast<__int128>(a.num) * b.den;
        __int128 rhs = static_cast<__int128>(b.num) * a.den;
        if (lhs != rhs) return lhs < rhs;
        return a.syndrome < b.syndrome;
    };

    std::size_t workers = std::max<std::size_t>(1, budget.workers);
    std::vector<std::optional<detail::CosetScanResult>> partial(workers);
    if (workers == 1 || total < 4096) {
        partial[0] = detail::scan_cosets(images, row_mask, 1, total, den_of, better);
    } else {
        std::vector<std::thread> pool;
        std::uint64_t chunk = (total + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                std::uint64_t lo = std::max<std::uint64_t>(1, w * chunk);
                std::uint64_t hi = std::min(total, (w + 1) * chunk);
                partial[w] = detail::scan_cosets(images, row_mask, lo, hi, den_of, better);
            });
        for (auto& t : pool) t.join();
    }
    std::optional<detail::CosetScanResult> best;
    for (const auto& p : partial)
        if (p && (!best || better(*p, *best))) best = p;

    rep.value = Rational(static_cast<std::int64_t>(best->num),
                         static_cast<std::int64_t>(best->den));
    if (table.fully_resolved()) {
        rep.status = ExpansionStatus::Exact;
        rep.witness = table.leader(best->syndrome);
        rep.upper_bound = rep.value;
    } else {
        // truncated leader table: unresolved denominators are only known to
        // lie in [w_cap+1, length], so the minimum is an interval
        rep.status = ExpansionStatus::Bounds;
        auto lower_den = [&](std::uint64_t s) -> std::uint64_t {
            return table.resolved(s) ? table.leader_weight(s) : table.length();
        };
        auto lo = detail::scan_cosets(images, row_mask, 1, total, lower_den, better);
        rep.value = Rational(static_cast<std::int64_t>(lo->num),
                             static_cast<std::int64_t>(lo->den));
        rep.upper_bound = Rational(static_cast<std::int64_t>(best->num),
                                   static_cast<std::int64_t>(best->den));
        if (rep.value == rep.upper_bound) {
            rep.status = ExpansionStatus::Exact;
            rep.witness = table.representative(best->syndrome);
        }
    }
    return rep;
}

inline ExpansionReport coboundary_expansion(const Complex& X, int k,
                                            const Budget& budget = {},
                                            bool reduced = true) {
    if (k < 0 || k >= X.top_dim || X.cell_count(k + 1) == 0)
        throw std::invalid_argument("coboundary_expansion: X must have (k+1)-cells");
    Basis B = coboundary_space(X, k, reduced);
    std::size_t q = X.cell_count(k) - B.dim();
    ExpansionReport rep;
    rep.k = k;
    rep.quotient_dim = q;
    if (q == 0) {
        rep.status = ExpansionStatus::UndefinedEmptyDomain;
        return rep;
    }
    GF2Matrix d = coboundary(X, k, reduced).matrix;
    if (q > budget.q_max || (std::uint64_t(1) << q) - 1 > budget.max_cosets) {
        // sampling fallback: every beta outside B^k gives h <= ||d beta||,
        // since ||[beta]|| >= 1; no nontrivial certified lower bound
        rep.status = ExpansionStatus::Bounds;
        rep.value = Rational(0);
        std::optional<Rational> ub;
        enumerate_by_weight(X.cell_count(k), std::min<std::size_t>(2, X.cell_count(k)),
                            [&](const GF2Vector& v) {
                                if (!v.is_zero() && !B.contains(v)) {
                                    Rational r(static_cast<std::int64_t>(
                                        d.multiply(v).weight()));
                                    if (!ub || r < *ub) ub = r;
                                }
                                return true;
                            });
        rep.upper_bound = ub.value_or(Rational(0));
        return rep;
    }
    CosetTable table(std::move(B), X.cell_count(k), budget.w_cap, budget.q_max);
    ExpansionReport out = expansion_from_table(table, d, budget);
    out.k = k;
    return out;
}

/// Graph edge expansion by direct subset enumeration:
/// min over proper nonempty A of #E(A, A^c) / min(|A|, |A^c|).
struct EdgeExpansionResult {
    Rational value{0};
    std::vector<std::size_t> witness_set;
};

inline EdgeExpansionResult edge_expansion_sets(const Complex& G) {
    if (G.top_dim < 1) throw std::invalid_argument("edge_expansion_sets: need a graph");
    std::size_t n = G.cell_count(0);
    if (n > 24) throw BudgetExceeded(n);
    std::size_t m = G.cell_count(1);
    std::vector<std::uint32_t> edge_mask(m, 0);
    for (std::size_t e = 0; e < m; ++e)
        for (std::size_t v : G.boundary_of(1, e)) edge_mask[e] |= std::uint32_t(1) << v;
    EdgeExpansionResult best;
    bool have = false;
    // fix vertex 0 outside A; A <-> complement symmetry halves the search
    std::uint32_t lim = std::uint32_t(1) << (n - 1);
    for (std::uint32_t a = 1; a < lim; ++a) {
        std::uint32_t A = a << 1;
        std::uint64_t cut = 0;
        for (std::size_t e = 0; e < m; ++e) {
            std::uint32_t inter = edge_mask[e] & A;
            if (inter != 0 && inter != edge_mask[e]) ++cut;
        }
        std::uint64_t sz = std::popcount(A);
        std::uint64_t denom = std::min<std::uint64_t>(sz, n - sz);
        Rational r(static_cast<std::int64_t>(cut), static_cast<std::int64_t>(denom));
        if (!have || r < best.value) {
            have = true;
            best.value = r;
            best.witness_set.clear();
            for (std::size_t v = 0; v < n; ++v)
                if ((A >> v) & 1) best.witness_set.push_back(v);
        }
    }
    return best;
}

struct FillingNormReport {
    Rational value{0};
    GF2Vector witness;  // a cochain beta whose coboundary attains the max
    bool exact = true;
    Rational upper_bound{0};
};

/// Gromov's filling norm ||d^{-1}_k||: the smallest c with, for every
/// coboundary d beta, some alpha, d alpha = d beta, and
/// ||alpha|| / |X^(k)| <= c ||d beta|| / |X^(k+1)|. The minimum filling of
/// d beta is the leader weight of beta's coset modulo Z^k = ker d_k.
inline FillingNormReport filling_norm(const Complex& X, int k, const Budget& budget = {}) {
    if (k < 0 || k >= X.top_dim || X.cell_count(k + 1) == 0)
        throw std::invalid_argument("filling_norm: X must have (k+1)-cells");
    GF2Matrix d = coboundary(X, k, true).matrix;
    Basis Z = kernel_basis(d);
    std::size_t len = X.cell_count(k);
    std::size_t q = len - Z.dim();  // = rank d_k = dim B^{k+1}
    if (q == 0) throw std::invalid_argument("filling_norm: no nonzero coboundaries");
    CosetTable table(std::move(Z), len, budget.w_cap, budget.q_max);
    std::vector<GF2Vector> images;
    for (std::size_t c : table.free_columns())
        images.push_back(d.multiply(GF2Vector::unit(len, c)));
    std::int64_t nk = static_cast<std::int64_t>(len);
    std::int64_t nk1 = static_cast<std::int64_t>(X.cell_count(k + 1));
    // maximize (fill/|X^k|) / (||d beta||/|X^{k+1}|): swap num/den roles
    auto den_of = [&](std::uint64_t s) -> std::uint64_t { return table.leader_weight(s); };
    auto better = [](const detail::CosetScanResult& a, const detail::CosetScanResult& b) {
        // larger den/num ratio wins (den = fill weight, num = ||d beta||)
        __int128 lhs = static_cast<__int128>(a.den) * b.num;
        __int128 rhs = static_cast<__int128>(b.den) * a.num;
        if (lhs != rhs) return lhs > rhs;
        return a.syndrome < b.syndrome;
    };
    std::uint64_t total = std::uint64_t(1) << q;
    auto best = detail::scan_cosets(images, nullptr, 1, total, den_of, better);
    FillingNormReport rep;
    rep.value = Rational(static_cast<std::int64_t>(best->den) * nk1,
                         static_cast<std::int64_t>(best->num) * nk);
    rep.witness = table.representative(best->syndrome);
    rep.exact = table.fully_resolved();
    rep.upper_bound = rep.value;
    if (!rep.exact) {
        auto upper_den = [&](std::uint64_t s) -> std::uint64_t {
            return table.resolved(s) ? table.leader_weight(s) : table.length();
        };
        auto hi = detail::scan_cosets(images, nullptr, 1, total, upper_den, better);
        rep.upper_bound = Rational(static_cast<std::int64_t>(hi->den) * nk1,
                                   static_cast<std::int64_t>(hi->num) * nk);
        // rep.value, computed with the certified lower bounds, is a lower bound
    }
    return rep;
}

enum class Family { Simplex, Cross, Multipartite, Cube };

/// Closed-form predictions used as comparison columns in reports.
inline Rational predicted_bound(Family family, int n, int k) {
    switch (family) {
        case Family::Simplex:
            return Rational(n, k + 2);
        case Family::Cross:
            return Rational(2 * (n - k - 1), k + 2);
        case Family::Multipartite:
            return Rational(n, (std::int64_t(1) << (k + 1)) - 1);
        case Family::Cube:
            return Rational(1);
    }
    throw std::invalid_argument("predicted_bound: unknown family");
}

/// log |X^(k)| / h^k, the quantity whose decay defines face-relative expansion.
inline double face_relative_ratio(const Complex& X, int k, const Rational& h_value) {
    if (h_value <= Rational(0))
        throw std::domain_error("face_relative_ratio: undefined for h = 0");
    return std::log(static_cast<double>(X.cell_count(k))) / to_double(h_value);
}

}  // namespace cobex

#endif
