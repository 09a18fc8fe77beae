#pragma once

// Partitions, Young tableaux, permutations and the classical counting
// formulas for Specht modules.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace specht {

/// A weakly decreasing sequence of positive integers.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            if (parts_[k] < 1)
                throw std::invalid_argument("partition parts must be positive");
            if (k > 0 && parts_[k] > parts_[k - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
        n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    int n() const noexcept { return n_; }
    std::size_t length() const noexcept { return parts_.size(); }
    int operator[](std::size_t k) const { return parts_.at(k); }

    /// Height of column c (0-based).
    int column_height(int c) const {
        int h = 0;
        for (int p : parts_)
            if (p > c) ++h;
        return h;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t k = 0; k < parts_.size(); ++k)
            os << (k ? "," : "") << parts_[k];
        os << ')';
        return os.str();
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// Builds a shape from a raw part list such as (a, b, 1^i).
/// Trailing zero parts are dropped, so (4,3,1^0) is (4,3). Anything that is
/// still not a partition (e.g. a part smaller than its successor) yields
/// nullopt, which stands for the zero module.
inline std::optional<Partition> make_shape(std::vector<int> parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (parts[k] < 1) return std::nullopt;
        if (k > 0 && parts[k] > parts[k - 1]) return std::nullopt;
    }
    return Partition(std::move(parts));
}

/// (first, second, 1^ones)
inline std::optional<Partition> hook_like_shape(int first, int second, int ones) {
    if (first < 0 || second < 0 || ones < 0) return std::nullopt;
    std::vector<int> parts{first, second};
    parts.insert(parts.end(), static_cast<std::size_t>(ones), 1);
    if (second == 0 && ones > 0) return std::nullopt;
    return make_shape(std::move(parts));
}

inline Partition conjugate(const Partition& p) {
    std::vector<int> out;
    if (p.length() == 0) return Partition{};
    for (int c = 0; c < p[0]; ++c) out.push_back(p.column_height(c));
    return Partition(std::move(out));
}

/// hook(b) = arm + leg + 1, laid out row by row.
inline std::vector<std::vector<int>> hook_lengths(const Partition& p) {
    const Partition conj = conjugate(p);
    std::vector<std::vector<int>> hooks(p.length());
    for (std::size_t r = 0; r < p.length(); ++r) {
        for (int c = 0; c < p[r]; ++c) {
            const int arm = p[r] - c - 1;
            const int leg = conj[static_cast<std::size_t>(c)] - static_cast<int>(r) - 1;
            hooks[r].push_back(arm + leg + 1);
        }
    }
    return hooks;
}

inline mpz_class factorial(int n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

/// Binomial coefficient with the convention C(a, b) = 0 unless 0 <= b <= a.
inline mpz_class binomial(long a, long b) {
    if (b < 0 || a < 0 || b > a) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

inline std::size_t binomial_size(long a, long b) {
    const mpz_class r = binomial(a, b);
    if (!r.fits_ulong_p()) throw std::overflow_error("binomial does not fit in size_t");
    return r.get_ui();
}

/// Hook length formula: n! / prod(hooks).
inline std::uint64_t dim_specht(const Partition& p) {
    mpz_class denom = 1;
    for (const auto& row : hook_lengths(p))
        for (int h : row) denom *= h;
    const mpz_class q = factorial(p.n()) / denom;
    if (!q.fits_ulong_p()) throw std::overflow_error("dim_specht overflow");
    return q.get_ui();
}

/// Dimension of the module for a possibly-empty shape.
inline std::uint64_t dim_specht(const std::optional<Partition>& p) {
    return p ? dim_specht(*p) : 0;
}

/// Partitions of n-1 obtained by deleting one removable corner, top row first.
inline std::vector<Partition> branching_dims(const Partition& p) {
    std::vector<Partition> out;
    const auto& parts = p.parts();
    for (std::size_t r = 0; r < parts.size(); ++r) {
        const bool corner = (r + 1 == parts.size()) || parts[r + 1] < parts[r];
        if (!corner) continue;
        std::vector<int> q = parts;
        --q[r];
        if (q[r] == 0) q.pop_back();
        out.emplace_back(std::move(q));
    }
    return out;
}

/// All partitions of n in reverse lexicographic order, (n) first.
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

/// Permutation of {1..n}; image()[k] = sigma(k), index 0 unused.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> one_based_images) : image_{0} {
        image_.insert(image_.end(), one_based_images.begin(), one_based_images.end());
        std::vector<bool> seen(image_.size(), false);
        for (std::size_t k = 1; k < image_.size(); ++k) {
            const int v = image_[k];
            if (v < 1 || v >= static_cast<int>(image_.size()) || seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("not a permutation");
            seen[static_cast<std::size_t>(v)] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> img(static_cast<std::size_t>(n));
        std::iota(img.begin(), img.end(), 1);
        return Permutation(std::move(img));
    }

    static Permutation transposition(int n, int a, int b) {
        Permutation p = identity(n);
        std::swap(p.image_.at(static_cast<std::size_t>(a)), p.image_.at(static_cast<std::size_t>(b)));
        return p;
    }

    int n() const noexcept { return image_.empty() ? 0 : static_cast<int>(image_.size()) - 1; }
    int operator()(int k) const { return image_[static_cast<std::size_t>(k)]; }

    /// (a * b)(k) = a(b(k))
    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        if (a.n() != b.n()) throw std::invalid_argument("permutation size mismatch");
        Permutation r = a;
        for (int k = 1; k <= a.n(); ++k) r.image_[static_cast<std::size_t>(k)] = a(b(k));
        return r;
    }

    Permutation inverse() const {
        Permutation r = *this;
        for (int k = 1; k <= n(); ++k) r.image_[static_cast<std::size_t>((*this)(k))] = k;
        return r;
    }

    int sign() const {
        std::vector<bool> seen(image_.size(), false);
        int s = 1;
        for (int k = 1; k <= n(); ++k) {
            if (seen[static_cast<std::size_t>(k)]) continue;
            int len = 0;
            for (int c = k; !seen[static_cast<std::size_t>(c)]; c = (*this)(c)) {
                seen[static_cast<std::size_t>(c)] = true;
                ++len;
            }
            if (len % 2 == 0) s = -s;
        }
        return s;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> image_;
};

/// Sign of the permutation that sorts `values` (all distinct).
inline int sorting_sign(const std::vector<int>& values) {
    int inversions = 0;
    for (std::size_t a = 0; a < values.size(); ++a)
        for (std::size_t b = a + 1; b < values.size(); ++b)
            if (values[a] > values[b]) ++inversions;
    return inversions % 2 ? -1 : 1;
}

/// A filling of a Young diagram, stored row by row.
class Tableau {
public:
    Tableau() = default;

    explicit Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
        std::vector<int> lengths;
        for (const auto& r : rows_) lengths.push_back(static_cast<int>(r.size()));
        auto shape = make_shape(lengths);
        if (!shape || shape->length() != rows_.size())
            throw std::invalid_argument("tableau rows do not form a Young diagram");
        shape_ = *shape;
        std::vector<bool> seen(static_cast<std::size_t>(shape_.n()) + 1, false);
        for (const auto& r : rows_) {
            for (int v : r) {
                if (v < 1 || v > shape_.n() || seen[static_cast<std::size_t>(v)])
                    throw std::invalid_argument("tableau filling is not a bijection onto 1..n");
                seen[static_cast<std::size_t>(v)] = true;
            }
        }
    }

    const Partition& shape() const noexcept { return shape_; }
    int n() const noexcept { return shape_.n(); }
    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
    int at(std::size_t r, std::size_t c) const { return rows_.at(r).at(c); }

    std::vector<int> column(int c) const {
        std::vector<int> out;
        for (const auto& r : rows_)
            if (static_cast<int>(r.size()) > c) out.push_back(r[static_cast<std::size_t>(c)]);
        return out;
    }

    std::vector<std::vector<int>> columns() const {
        std::vector<std::vector<int>> out;
        if (rows_.empty()) return out;
        for (int c = 0; c < shape_[0]; ++c) out.push_back(column(c));
        return out;
    }

    /// Rows concatenated top to bottom.
    std::vector<int> reading_word() const {
        std::vector<int> w;
        for (const auto& r : rows_) w.insert(w.end(), r.begin(), r.end());
        return w;
    }

    bool is_standard() const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            for (std::size_t c = 0; c < rows_[r].size(); ++c) {
                if (c + 1 < rows_[r].size() && rows_[r][c] > rows_[r][c + 1]) return false;
                if (r + 1 < rows_.size() && c < rows_[r + 1].size() && rows_[r][c] > rows_[r + 1][c])
                    return false;
            }
        }
        return true;
    }

    /// Entry k becomes sigma(k).
    Tableau relabel(const Permutation& sigma) const {
        if (sigma.n() != n()) throw std::invalid_argument("permutation size mismatch");
        auto rows = rows_;
        for (auto& r : rows)
            for (int& v : r) v = sigma(v);
        Tableau t;
        t.rows_ = std::move(rows);
        t.shape_ = shape_;
        return t;
    }

    /// Sorts each column increasingly and returns the sign of the rearrangement.
    int sort_columns() {
        int sign = 1;
        for (int c = 0; shape_.length() && c < shape_[0]; ++c) {
            std::vector<int> col = column(c);
            sign *= sorting_sign(col);
            std::sort(col.begin(), col.end());
            for (std::size_t r = 0; r < col.size(); ++r) rows_[r][static_cast<std::size_t>(c)] = col[r];
        }
        return sign;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << '[';
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            os << (r ? "," : "") << '[';
            for (std::size_t c = 0; c < rows_[r].size(); ++c) os << (c ? "," : "") << rows_[r][c];
            os << ']';
        }
        os << ']';
        return os.str();
    }

    friend bool operator==(const Tableau& a, const Tableau& b) { return a.rows_ == b.rows_; }

    // Unchecked construction for internal rearrangements of a valid tableau.
    static Tableau unchecked(std::vector<std::vector<int>> rows, Partition shape) {
        Tableau t;
        t.rows_ = std::move(rows);
        t.shape_ = std::move(shape);
        return t;
    }

    std::vector<std::vector<int>>& mutable_rows() noexcept { return rows_; }

private:
    std::vector<std::vector<int>> rows_;
    Partition shape_;
};

struct TableauHash {
    std::size_t operator()(const Tableau& t) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (const auto& r : t.rows()) {
            h = (h ^ 0xffu) * 1099511628211ull;
            for (int v : r) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
        }
        return h;
    }
};

/// Fills the shape with 1..n in row-reading order.
inline Tableau row_reading_tableau(const Partition& p) {
    std::vector<std::vector<int>> rows;
    int next = 1;
    for (int len : p.parts()) {
        rows.emplace_back();
        for (int c = 0; c < len; ++c) rows.back().push_back(next++);
    }
    return Tableau(std::move(rows));
}

/// Fills the shape row by row with the given word.
inline Tableau tableau_from_word(const Partition& p, const std::vector<int>& word) {
    std::vector<std::vector<int>> rows;
    std::size_t k = 0;
    for (int len : p.parts()) {
        rows.emplace_back(word.begin() + static_cast<long>(k), word.begin() + static_cast<long>(k + len));
        k += static_cast<std::size_t>(len);
    }
    return Tableau(std::move(rows));
}

/// Standard Young tableaux of shape p, ordered lexicographically by reading word.
inline std::vector<Tableau> enumerate_syt(const Partition& p) {
    std::vector<Tableau> out;
    const std::size_t rows = p.length();
    std::vector<std::vector<int>> fill(rows);
    std::function<void(int)> place = [&](int k) {
        if (k > p.n()) {
            out.push_back(Tableau::unchecked(fill, p));
            return;
        }
        for (std::size_t r = 0; r < rows; ++r) {
            const std::size_t len = fill[r].size();
            if (static_cast<int>(len) >= p[r]) continue;
            if (r > 0 && fill[r - 1].size() <= len) continue;
            fill[r].push_back(k);
            place(k + 1);
            fill[r].pop_back();
        }
    };
    if (p.n() > 0) place(1);
    std::sort(out.begin(), out.end(), [](const Tableau& a, const Tableau& b) {
        return a.reading_word() < b.reading_word();
    });
    return out;
}

}  // namespace specht
