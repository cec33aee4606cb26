#ifndef COBEX_GF2_HPP
#define COBEX_GF2_HPP

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cobex {

/// A fixed-length bit vector over GF(2), packed into 64-bit words.
/// Bits at positions >= length are kept zero.
class GF2Vector {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    GF2Vector() = default;
    explicit GF2Vector(std::size_t length)
        : length_(length), words_((length + kWordBits - 1) / kWordBits, 0) {}

    static GF2Vector unit(std::size_t length, std::size_t pos) {
        GF2Vector v(length);
        v.set(pos, true);
        return v;
    }

    std::size_t size() const { return length_; }

    bool get(std::size_t i) const {
        return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
    }

    void set(std::size_t i, bool b) {
        Word mask = Word(1) << (i % kWordBits);
        if (b)
            words_[i / kWordBits] |= mask;
        else
            words_[i / kWordBits] &= ~mask;
    }

    void flip(std::size_t i) { words_[i / kWordBits] ^= Word(1) << (i % kWordBits); }

    void xor_with(const GF2Vector& o) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    }

    void and_with(const GF2Vector& o) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    }

    std::size_t weight() const {
        std::size_t c = 0;
        for (Word w : words_) c += std::popcount(w);
        return c;
    }

    bool is_zero() const {
        for (Word w : words_)
            if (w) return false;
        return true;
    }

    /// Index of the lowest set bit, or length if none.
    std::size_t lowest_bit() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return w * kWordBits + std::countr_zero(words_[w]);
        return length_;
    }

    bool operator==(const GF2Vector& o) const {
        return length_ == o.length_ && words_ == o.words_;
    }
    bool operator!=(const GF2Vector& o) const { return !(*this == o); }

    /// Lexicographic order on the packed representation, bit 0 most significant.
    /// Used for deterministic tie-breaking among equal-weight vectors.
    bool lex_less(const GF2Vector& o) const {
        for (std::size_t i = 0; i < length_; ++i) {
            bool a = get(i), b = o.get(i);
            if (a != b) return a && !b;  // set bit earlier = lex-smaller leader convention
        }
        return false;
    }

    const std::vector<Word>& words() const { return words_; }
    std::vector<Word>& words() { return words_; }

    std::vector<std::size_t> support() const {
        std::vector<std::size_t> s;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            Word x = words_[w];
            while (x) {
                s.push_back(w * kWordBits + std::countr_zero(x));
                x &= x - 1;
            }
        }
        return s;
    }

    std::string to_string() const {
        std::string s(length_, '0');
        for (std::size_t i = 0; i < length_; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

private:
    std::size_t length_ = 0;
    std::vector<Word> words_;
};

/// Dense row-major bit matrix over GF(2).
class GF2Matrix {
public:
    GF2Matrix() = default;
    GF2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows, GF2Vector(cols)) {}

    static GF2Matrix identity(std::size_t n) {
        GF2Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.data_[i].set(i, true);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool b) { data_[r].set(c, b); }

    GF2Vector& row(std::size_t r) { return data_[r]; }
    const GF2Vector& row(std::size_t r) const { return data_[r]; }

    GF2Matrix transposed() const {
        GF2Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (data_[r].get(c)) t.data_[c].set(r, true);
        return t;
    }

    /// Matrix-vector product over GF(2).
    GF2Vector multiply(const GF2Vector& x) const {
        if (x.size() != cols_) throw std::invalid_argument("gf2: dimension mismatch");
        GF2Vector y(rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            Word acc = 0;
            const auto& rw = data_[r].words();
            const auto& xw = x.words();
            for (std::size_t w = 0; w < rw.size(); ++w) acc ^= rw[w] & xw[w];
            y.set(r, std::popcount(acc) & 1);
        }
        return y;
    }

private:
    using Word = GF2Vector::Word;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<GF2Vector> data_;
};

/// A basis of a subspace of GF(2)^n, stored in reduced row-echelon form so
/// that subspace equality is representation equality.
struct Basis {
    std::vector<GF2Vector> vectors;
    std::vector<std::size_t> pivot_columns;
    std::size_t ambient_length = 0;

    std::size_t dim() const { return vectors.size(); }

    /// Reduce v modulo the spanned subspace (clears all pivot positions).
    GF2Vector reduce(GF2Vector v) const {
        for (std::size_t i = 0; i < vectors.size(); ++i)
            if (v.get(pivot_columns[i])) v.xor_with(vectors[i]);
        return v;
    }

    bool contains(const GF2Vector& v) const { return reduce(v).is_zero(); }

    /// Insert v if independent of the current span; keeps RREF. Returns true if inserted.
    bool insert(GF2Vector v) {
        ambient_length = v.size();
        v = reduce(std::move(v));
        if (v.is_zero()) return false;
        std::size_t p = v.lowest_bit();
        // back-substitute into existing rows
        for (std::size_t i = 0; i < vectors.size(); ++i)
            if (vectors[i].get(p)) vectors[i].xor_with(v);
        std::size_t pos = 0;
        while (pos < pivot_columns.size() && pivot_columns[pos] < p) ++pos;
        vectors.insert(vectors.begin() + pos, std::move(v));
        pivot_columns.insert(pivot_columns.begin() + pos, p);
        return true;
    }
};

inline Basis row_space_basis(const GF2Matrix& m) {
    Basis b;
    b.ambient_length = m.cols();
    for (std::size_t r = 0; r < m.rows(); ++r) b.insert(m.row(r));
    return b;
}

inline std::size_t rank(const GF2Matrix& m) { return row_space_basis(m).dim(); }

/// Basis of the column space, i.e. the image of x -> Mx.
inline Basis image_basis(const GF2Matrix& m) { return row_space_basis(m.transposed()); }

/// Basis of { x : Mx = 0 }.
inline Basis kernel_basis(const GF2Matrix& m) {
    std::size_t n = m.cols();
    Basis rows = row_space_basis(m);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : rows.pivot_columns) is_pivot[p] = true;
    Basis ker;
    ker.ambient_length = n;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        GF2Vector v(n);
        v.set(f, true);
        for (std::size_t i = 0; i < rows.vectors.size(); ++i)
            if (rows.vectors[i].get(f)) v.set(rows.pivot_columns[i], true);
        ker.insert(std::move(v));
    }
    return ker;
}

/// One particular solution of Mx = b, or nullopt if inconsistent.
inline std::optional<GF2Vector> solve(const GF2Matrix& m, const GF2Vector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("gf2: solve dimension mismatch");
    std::size_t n = m.cols();
    // eliminate on [M | b] rows
    std::vector<GF2Vector> reduced;          // echelon rows of M
    std::vector<bool> rhs;                   // corresponding bit of b
    std::vector<std::size_t> pivots;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        GF2Vector row = m.row(r);
        bool rb = b.get(r);
        for (std::size_t i = 0; i < reduced.size(); ++i)
            if (row.get(pivots[i])) {
                row.xor_with(reduced[i]);
                rb = rb != rhs[i];
            }
        if (row.is_zero()) {
            if (rb) return std::nullopt;
            continue;
        }
        std::size_t p = row.lowest_bit();
        for (std::size_t i = 0; i < reduced.size(); ++i)
            if (reduced[i].get(p)) {
                reduced[i].xor_with(row);
                rhs[i] = rhs[i] != rb;
            }
        std::size_t pos = 0;
        while (pos < pivots.size() && pivots[pos] < p) ++pos;
        reduced.insert(reduced.begin() + pos, std::move(row));
        rhs.insert(rhs.begin() + pos, rb);
        pivots.insert(pivots.begin() + pos, p);
    }
    GF2Vector x(n);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        if (rhs[i]) x.set(pivots[i], true);
    return x;
}

/// Visit all vectors of weight 0, 1, ..., w_max, lexicographic within a weight
/// class (supports enumerated in standard combination order).
/// Stops early when the visitor returns false.
inline void enumerate_by_weight(std::size_t length, std::size_t w_max,
                                const std::function<bool(const GF2Vector&)>& visit) {
    if (w_max > length) throw std::invalid_argument("enumerate_by_weight: w_max > length");
    GF2Vector v(length);
    if (!visit(v)) return;
    std::vector<std::size_t> idx;
    for (std::size_t w = 1; w <= w_max; ++w) {
        idx.assign(w, 0);
        for (std::size_t i = 0; i < w; ++i) idx[i] = i;
        for (;;) {
            GF2Vector u(length);
            for (std::size_t i : idx) u.set(i, true);
            if (!visit(u)) return;
            // next combination of w positions out of length
            std::size_t i = w;
            while (i > 0 && idx[i - 1] == length - w + (i - 1)) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < w; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
}

}  // namespace cobex

#endif
