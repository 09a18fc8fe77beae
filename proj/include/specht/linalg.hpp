#pragma once

// Rank computations: sparse elimination modulo a word-size prime and
// fraction-free exact elimination over Z (hence Q).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace specht {

inline constexpr std::uint32_t kPrime = 2147483647u;  // 2^31 - 1

/// x mod p for x < 2^63, using 2^31 = 1 (mod p).
inline std::uint32_t mod_fold(std::uint64_t x) {
    x = (x & kPrime) + (x >> 31);
    x = (x & kPrime) + (x >> 31);
    return static_cast<std::uint32_t>(x >= kPrime ? x - kPrime : x);
}

inline std::uint32_t mod_mul(std::uint32_t a, std::uint32_t b) {
    return mod_fold(static_cast<std::uint64_t>(a) * b);
}

inline std::uint32_t mod_add(std::uint32_t a, std::uint32_t b) {
    const std::uint32_t s = a + b;  // < 2^32
    return s >= kPrime ? s - kPrime : s;
}

inline std::uint32_t mod_neg(std::uint32_t a) { return a == 0 ? 0 : kPrime - a; }

inline std::uint32_t mod_pow(std::uint32_t a, std::uint64_t e) {
    std::uint64_t r = 1, b = a;
    while (e) {
        if (e & 1) r = mod_fold(r * b);
        b = mod_fold(b * b);
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

inline std::uint32_t mod_inv(std::uint32_t a) {
    if (a == 0) throw std::domain_error("inverse of zero mod p");
    return mod_pow(a, kPrime - 2);
}

inline std::uint32_t mod_from_mpz(const mpz_class& z) {
    mpz_class r = z % mpz_class(kPrime);
    if (r < 0) r += kPrime;
    return static_cast<std::uint32_t>(r.get_ui());
}

/// Image of a rational in F_p; throws if the denominator vanishes.
inline std::uint32_t mod_from_mpq(const mpq_class& q) {
    return mod_mul(mod_from_mpz(q.get_num()), mod_inv(mod_from_mpz(q.get_den())));
}

using ModEntry = std::pair<std::uint32_t, std::uint32_t>;  // (column, value)
using ModRow = std::vector<ModEntry>;                        // sorted by column

/// Incremental row echelon form over F_p with top reduction. Rows are
/// reduced only until their leading column is not a pivot.
class ModularEchelon {
public:
    explicit ModularEchelon(std::size_t ncols)
        : pivots_(ncols), dense_(ncols, 0), queued_(ncols, 0) {}

    std::size_t ncols() const noexcept { return dense_.size(); }
    std::size_t rank() const noexcept { return rank_; }
    std::size_t stored_entries() const noexcept { return stored_; }

    /// Returns true when the row is independent of the rows added so far.
    bool add_row(const ModRow& row) {
        if (row.empty()) return false;
        for (const auto& [c, v] : row) {
            if (c >= dense_.size()) throw std::out_of_range("row column out of range");
            if (v == 0) continue;
            dense_[c] = mod_add(static_cast<std::uint32_t>(dense_[c]), v);
            touch(c);
        }
        while (!heap_.empty()) {
            const std::uint32_t c = heap_.top();
            heap_.pop();
            queued_[c] = 0;
            const std::uint32_t v = static_cast<std::uint32_t>(dense_[c]);
            if (v == 0) continue;
            const auto& piv = pivots_[c];
            if (piv.empty()) {
                // new pivot: gather c and every remaining touched column
                ModRow stored;
                const std::uint32_t inv = mod_inv(v);
                stored.emplace_back(c, 1);
                dense_[c] = 0;
                while (!heap_.empty()) {
                    const std::uint32_t k = heap_.top();
                    heap_.pop();
                    queued_[k] = 0;
                    const std::uint32_t w = static_cast<std::uint32_t>(dense_[k]);
                    dense_[k] = 0;
                    if (w != 0) stored.emplace_back(k, mod_mul(w, inv));
                }
                stored_ += stored.size();
                pivots_[c] = std::move(stored);
                ++rank_;
                return true;
            }
            // pivot rows are normalized with leading entry 1
            const std::uint32_t f = mod_neg(v);
            dense_[c] = 0;
            for (std::size_t k = 1; k < piv.size(); ++k) {
                const auto [col, val] = piv[k];
                dense_[col] = mod_fold(dense_[col] + static_cast<std::uint64_t>(f) * val);
                touch(col);
            }
        }
        return false;
    }

private:
    void touch(std::uint32_t c) {
        if (!queued_[c]) {
            queued_[c] = 1;
            heap_.push(c);
        }
    }

    std::vector<ModRow> pivots_;
    std::vector<std::uint64_t> dense_;
    std::vector<std::uint8_t> queued_;
    std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap_;
    std::size_t rank_ = 0;
    std::size_t stored_ = 0;
};

inline std::size_t rank_mod_p(const std::vector<ModRow>& rows, std::size_t ncols) {
    ModularEchelon e(ncols);
    for (const auto& r : rows) e.add_row(r);
    return e.rank();
}

using IntEntry = std::pair<std::uint32_t, mpz_class>;
using IntRow = std::vector<IntEntry>;  // sorted by column, no zeros

/// Fraction-free incremental echelon form over Z. Pivoting is deterministic:
/// a row is top-reduced by the pivot owning its leading column, and becomes a
/// new pivot at its first column without one. Rows are kept primitive.
class ExactEchelon {
public:
    explicit ExactEchelon(std::size_t ncols) : pivots_(ncols) {}

    std::size_t rank() const noexcept { return rank_; }

    bool add_row(IntRow row) {
        make_primitive(row);
        while (!row.empty()) {
            const std::uint32_t c = row.front().first;
            if (c >= pivots_.size()) throw std::out_of_range("row column out of range");
            const IntRow& piv = pivots_[c];
            if (piv.empty()) {
                if (row.front().second < 0)
                    for (auto& e : row) e.second = -e.second;
                pivots_[c] = std::move(row);
                ++rank_;
                return true;
            }
            // row <- (p/g) row - (r/g) piv, with g = gcd(p, r)
            const mpz_class& p = piv.front().second;
            const mpz_class& r = row.front().second;
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), r.get_mpz_t());
            const mpz_class a = p / g, b = r / g;
            IntRow out;
            out.reserve(row.size() + piv.size());
            std::size_t x = 1, y = 1;
            while (x < row.size() || y < piv.size()) {
                if (y == piv.size() || (x < row.size() && row[x].first < piv[y].first)) {
                    out.emplace_back(row[x].first, a * row[x].second);
                    ++x;
                } else if (x == row.size() || piv[y].first < row[x].first) {
                    out.emplace_back(piv[y].first, -b * piv[y].second);
                    ++y;
                } else {
                    mpz_class v = a * row[x].second - b * piv[y].second;
                    if (v != 0) out.emplace_back(row[x].first, std::move(v));
                    ++x;
                    ++y;
                }
            }
            row = std::move(out);
            make_primitive(row);
        }
        return false;
    }

private:
    static void make_primitive(IntRow& row) {
        if (row.empty()) return;
        mpz_class g = 0;
        for (const auto& e : row) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
            if (g == 1) return;
        }
        for (auto& e : row) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
    }

    std::vector<IntRow> pivots_;
    std::size_t rank_ = 0;
};

/// Clears denominators of a sparse rational row.
inline IntRow integral_row(const std::vector<std::pair<std::uint32_t, mpq_class>>& row) {
    mpz_class l = 1;
    for (const auto& e : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.second.get_den_mpz_t());
    IntRow out;
    out.reserve(row.size());
    for (const auto& [c, q] : row) {
        if (q == 0) continue;
        out.emplace_back(c, q.get_num() * (l / q.get_den()));
    }
    std::sort(out.begin(), out.end(), [](const IntEntry& a, const IntEntry& b) { return a.first < b.first; });
    return out;
}

inline std::size_t rank_exact(const std::vector<IntRow>& rows, std::size_t ncols) {
    ExactEchelon e(ncols);
    for (const auto& r : rows) e.add_row(r);
    return e.rank();
}

}  // namespace specht
