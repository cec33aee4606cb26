#ifndef COBEX_COCHAIN_HPP
#define COBEX_COCHAIN_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "cobex/complex.hpp"
#include "cobex/gf2.hpp"

namespace cobex {

struct Cochain {
    const Complex* complex = nullptr;
    int k = 0;
    GF2Vector vec;
};

/// Thrown when a coset table or enumeration would exceed its configured
/// memory/visit budget. Carries the offending quotient dimension.
struct BudgetExceeded : std::runtime_error {
    std::size_t q;
    explicit BudgetExceeded(std::size_t q_)
        : std::runtime_error("budget exceeded: quotient dimension " + std::to_string(q_)),
          q(q_) {}
};

/// The matrix of d: C^k -> C^{k+1}; row x has ones at the k-cells in the
/// boundary of the (k+1)-cell x. In reduced mode, k = -1 is the all-ones
/// column (so B^0 = {0, 1}).
struct CoboundaryOperator {
    int k;
    bool reduced;
    GF2Matrix matrix;  // |X^{(k+1)}| x |X^{(k)}|
};

inline CoboundaryOperator coboundary(const Complex& X, int k, bool reduced = true) {
    if (k < -1 || k >= X.top_dim || (k == -1 && !reduced))
        throw std::invalid_argument("coboundary: k out of range");
    CoboundaryOperator op;
    op.k = k;
    op.reduced = reduced;
    if (k == -1) {
        op.matrix = GF2Matrix(X.cell_count(0), 1);
        for (std::size_t r = 0; r < X.cell_count(0); ++r) op.matrix.set(r, 0, true);
        return op;
    }
    op.matrix = GF2Matrix(X.cell_count(k + 1), X.cell_count(k));
    for (std::size_t x = 0; x < X.cell_count(k + 1); ++x)
        for (std::size_t y : X.boundary_of(k + 1, x)) op.matrix.set(x, y, true);
    return op;
}

/// Basis of the coboundaries B^k = im(d_{k-1}) under the given convention.
/// Reduced mode makes B^0 = {0, all-ones}; B^k for k >= 1 is unaffected.
inline Basis coboundary_space(const Complex& X, int k, bool reduced = true) {
    if (k == 0 && !reduced) {
        Basis b;
        b.ambient_length = X.cell_count(0);
        return b;
    }
    return image_basis(coboundary(X, k - 1, reduced).matrix);
}

/// dim H^k in the reduced complex: dim ker(d_k) - dim B^k.
inline std::size_t cohomology_dim(const Complex& X, int k) {
    if (k < 0 || k > X.top_dim) throw std::invalid_argument("cohomology_dim: k out of range");
    std::size_t zdim;
    if (k == X.top_dim)
        zdim = X.cell_count(k);  // d_k is the zero map
    else
        zdim = kernel_basis(coboundary(X, k, true).matrix).dim();
    return zdim - coboundary_space(X, k, true).dim();
}

/// Syndrome-decoding table for the quotient of GF(2)^length by a code:
/// leader_weight[s] is the minimum support size over the coset with syndrome
/// s. The syndrome of v is v reduced modulo the code, restricted to the
/// code's free (non-pivot) columns.
class CosetTable {
public:
    static constexpr std::uint8_t kUnresolved = 255;

    CosetTable(Basis code, std::size_t length, std::size_t w_cap, std::size_t q_max = 28)
        : code_(std::move(code)), length_(length), w_cap_(w_cap) {
        q_ = length_ - code_.dim();
        if (q_ > q_max) throw BudgetExceeded(q_);
        std::vector<bool> is_pivot(length_, false);
        for (std::size_t p : code_.pivot_columns) is_pivot[p] = true;
        for (std::size_t c = 0; c < length_; ++c)
            if (!is_pivot[c]) free_columns_.push_back(c);
        // per-position syndromes: syndrome of the unit vector e_i
        position_syndrome_.resize(length_);
        for (std::size_t i = 0; i < length_; ++i)
            position_syndrome_[i] = syndrome_slow(GF2Vector::unit(length_, i));
        leader_weight_.assign(std::size_t(1) << q_, kUnresolved);
        fill();
    }

    std::size_t quotient_dim() const { return q_; }
    std::size_t length() const { return length_; }
    const Basis& code() const { return code_; }
    bool fully_resolved() const { return unresolved_ == 0; }
    std::size_t w_cap() const { return w_cap_; }

    std::uint64_t syndrome(const GF2Vector& v) const {
        std::uint64_t s = 0;
        for (std::size_t i : v.support()) s ^= position_syndrome_[i];
        return s;
    }

    std::uint64_t position_syndrome(std::size_t i) const { return position_syndrome_[i]; }

    bool resolved(std::uint64_t s) const { return leader_weight_[s] != kUnresolved; }

    /// Exact leader weight, or certified lower bound w_cap+1 for entries the
    /// truncated search never reached.
    std::size_t leader_weight(std::uint64_t s) const {
        return resolved(s) ? leader_weight_[s] : w_cap_ + 1;
    }

    /// A representative of the coset with syndrome s: bits of s placed at the
    /// code's free columns.
    GF2Vector representative(std::uint64_t s) const {
        GF2Vector v(length_);
        for (std::size_t b = 0; b < q_; ++b)
            if ((s >> b) & 1) v.set(free_columns_[b], true);
        return v;
    }

    const std::vector<std::size_t>& free_columns() const { return free_columns_; }

    /// The first-seen (deterministic) minimum-weight vector of the coset, by
    /// re-walking the weight-ordered enumeration. Exact entries only.
    GF2Vector leader(std::uint64_t s) const {
        if (!resolved(s)) throw std::logic_error("coset leader unresolved");
        GF2Vector out(length_);
        bool found = false;
        enumerate_by_weight(length_, leader_weight_[s], [&](const GF2Vector& v) {
            if (syndrome(v) == s) {
                out = v;
                found = true;
                return false;
            }
            return true;
        });
        if (!found) throw std::logic_error("coset leader not found");
        return out;
    }

private:
    std::uint64_t syndrome_slow(GF2Vector v) const {
        v = code_.reduce(std::move(v));
        std::uint64_t s = 0;
        for (std::size_t b = 0; b < free_columns_.size(); ++b)
            if (v.get(free_columns_[b])) s |= std::uint64_t(1) << b;
        return s;
    }

    // Weight-ordered combination walk over supports, syndrome maintained as a
    // running XOR of per-position syndromes; no per-vector allocation.
    void fill() {
        std::size_t seen = 0, total = leader_weight_.size();
        std::size_t cap = std::min(w_cap_, length_);
        leader_weight_[0] = 0;
        if (++seen == total) {
            unresolved_ = 0;
            return;
        }
        std::vector<std::size_t> idx;
        std::vector<std::uint64_t> prefix;  // prefix[i] = XOR of syndromes of idx[0..i]
        for (std::size_t w = 1; w <= cap; ++w) {
            idx.resize(w);
            prefix.resize(w);
            for (std::size_t i = 0; i < w; ++i) {
                idx[i] = i;
                prefix[i] = (i ? prefix[i - 1] : 0) ^ position_syndrome_[i];
            }
            for (;;) {
                std::uint64_t s = prefix[w - 1];
                if (leader_weight_[s] == kUnresolved) {
                    leader_weight_[s] = static_cast<std::uint8_t>(w);
                    if (++seen == total) {
                        unresolved_ = 0;
                        return;
                    }
                }
                std::size_t i = w;
                while (i > 0 && idx[i - 1] == length_ - w + (i - 1)) --i;
                if (i == 0) break;
                ++idx[i - 1];
                for (std::size_t j = i - 1; j < w; ++j) {
                    if (j > i - 1) idx[j] = idx[j - 1] + 1;
                    prefix[j] = (j ? prefix[j - 1] : 0) ^ position_syndrome_[idx[j]];
                }
            }
        }
        unresolved_ = total - seen;
    }

    Basis code_;
    std::size_t length_, w_cap_, q_ = 0, unresolved_ = 0;
    std::vector<std::size_t> free_columns_;
    std::vector<std::uint64_t> position_syndrome_;
    std::vector<std::uint8_t> leader_weight_;
};

inline CosetTable build_coset_table(Basis code, std::size_t length, std::size_t w_cap,
                                    std::size_t q_max = 28) {
    return CosetTable(std::move(code), length, w_cap, q_max);
}

/// Exact quotient norm ||[beta]|| = min support over the coset beta + B^k.
inline std::size_t quotient_norm(const Complex& X, int k, const GF2Vector& beta,
                                 bool reduced = true, std::size_t w_cap = 64,
                                 std::size_t q_max = 28) {
    CosetTable table(coboundary_space(X, k, reduced), X.cell_count(k), w_cap, q_max);
    std::uint64_t s = table.syndrome(beta);
    if (!table.resolved(s)) throw BudgetExceeded(table.quotient_dim());
    return table.leader_weight(s);
}

}  // namespace cobex

#endif
