#pragma once

// Specht modules in tabloid and standard-polytabloid coordinates.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "specht/combinatorics.hpp"
#include "specht/polynomial.hpp"

namespace specht {

/// Row-equivalence class of a tableau.
struct Tabloid {
    Partition shape;
    std::vector<std::vector<int>> row_sets;  // each sorted

    static Tabloid of(const Tableau& t) {
        Tabloid r{t.shape(), t.rows()};
        for (auto& s : r.row_sets) std::sort(s.begin(), s.end());
        return r;
    }

    /// Row index of every entry, packed 4 bits per entry.
    std::uint64_t key() const {
        std::uint64_t k = 0;
        for (std::size_t r = 0; r < row_sets.size(); ++r)
            for (int v : row_sets[r]) k |= static_cast<std::uint64_t>(r) << (4 * (v - 1));
        return k;
    }

    static Tabloid from_key(const Partition& shape, std::uint64_t key) {
        Tabloid t{shape, std::vector<std::vector<int>>(shape.length())};
        for (int v = 1; v <= shape.n(); ++v) t.row_sets[(key >> (4 * (v - 1))) & 0xfu].push_back(v);
        return t;
    }

    friend bool operator==(const Tabloid&, const Tabloid&) = default;
};

inline void check_tabloid_capacity(const Partition& p) {
    if (p.n() > 16 || p.length() > 16)
        throw std::invalid_argument("tabloid encoding supports n <= 16");
}

/// Finite linear combination of tabloids of one shape.
class TabloidVector {
public:
    explicit TabloidVector(Partition shape) : shape_(std::move(shape)) { check_tabloid_capacity(shape_); }

    const Partition& shape() const noexcept { return shape_; }
    const std::unordered_map<std::uint64_t, mpq_class>& coeffs() const noexcept { return coeffs_; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    void add(std::uint64_t key, const mpq_class& c) {
        if (c == 0) return;
        auto [it, inserted] = coeffs_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    void add(const Tabloid& t, const mpq_class& c) { add(t.key(), c); }

    void add_scaled(const TabloidVector& o, const mpq_class& s) {
        for (const auto& [k, c] : o.coeffs_) add(k, c * s);
    }

    mpq_class coefficient(const Tabloid& t) const {
        auto it = coeffs_.find(t.key());
        return it == coeffs_.end() ? mpq_class(0) : it->second;
    }

    friend bool operator==(const TabloidVector& a, const TabloidVector& b) {
        return a.shape_ == b.shape_ && a.coeffs_ == b.coeffs_;
    }

private:
    Partition shape_;
    std::unordered_map<std::uint64_t, mpq_class> coeffs_;
};

/// Standard polytabloid basis of one shape: SYT in reading-word order.
class SpechtBasis {
public:
    explicit SpechtBasis(Partition shape) : shape_(std::move(shape)), syt_(enumerate_syt(shape_)) {
        for (std::size_t k = 0; k < syt_.size(); ++k) index_.emplace(syt_[k], k);
    }

    const Partition& shape() const noexcept { return shape_; }
    const std::vector<Tableau>& tableaux() const noexcept { return syt_; }
    std::size_t dim() const noexcept { return syt_.size(); }
    const Tableau& operator[](std::size_t k) const { return syt_.at(k); }

    /// Position of a standard tableau, or npos.
    std::size_t index_of(const Tableau& t) const {
        auto it = index_.find(t);
        return it == index_.end() ? npos : it->second;
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    Partition shape_;
    std::vector<Tableau> syt_;
    std::unordered_map<Tableau, std::size_t, TableauHash> index_;
};

/// Element of V_shape in standard-basis coordinates.
struct SpechtVector {
    Partition shape;
    std::map<std::size_t, mpq_class> coords;

    static SpechtVector unit(const Partition& shape, std::size_t k) {
        SpechtVector v{shape, {}};
        v.coords.emplace(k, 1);
        return v;
    }

    bool is_zero() const noexcept { return coords.empty(); }

    void add(std::size_t k, const mpq_class& c) {
        if (c == 0) return;
        auto [it, inserted] = coords.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coords.erase(it);
        }
    }

    void add_scaled(const SpechtVector& o, const mpq_class& s) {
        for (const auto& [k, c] : o.coords) add(k, c * s);
    }

    SpechtVector& operator*=(const mpq_class& s) {
        if (s == 0) coords.clear();
        for (auto& kv : coords) kv.second *= s;
        return *this;
    }

    friend SpechtVector operator-(const SpechtVector& a, const SpechtVector& b) {
        SpechtVector r = a;
        r.add_scaled(b, -1);
        return r;
    }

    friend bool operator==(const SpechtVector& a, const SpechtVector& b) {
        return a.shape == b.shape && a.coords == b.coords;
    }
};

/// Visits every element of the column stabilizer as (sigma, sgn(sigma)).
template <typename F>
void for_each_column_stabilizer_element(const Tableau& t, F&& visit) {
    const auto cols = t.columns();
    std::vector<std::vector<int>> perms;  // current arrangement of each column
    for (const auto& c : cols) {
        std::vector<int> sorted = c;
        std::sort(sorted.begin(), sorted.end());
        perms.push_back(sorted);
    }
    const int n = t.n();
    while (true) {
        std::vector<int> img(static_cast<std::size_t>(n));
        std::iota(img.begin(), img.end(), 1);
        int sign = 1;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            std::vector<int> sorted = perms[c];
            std::sort(sorted.begin(), sorted.end());
            for (std::size_t r = 0; r < sorted.size(); ++r)
                img[static_cast<std::size_t>(sorted[r] - 1)] = perms[c][r];
            sign *= sorting_sign(perms[c]);
        }
        visit(Permutation(img), sign);
        std::size_t c = 0;
        for (; c < perms.size(); ++c) {
            if (std::next_permutation(perms[c].begin(), perms[c].end())) break;
        }
        if (c == perms.size()) break;
    }
}

inline mpz_class column_stabilizer_order(const Tableau& t) {
    mpz_class order = 1;
    for (const auto& c : t.columns()) order *= factorial(static_cast<int>(c.size()));
    return order;
}

/// e(t) = sum over the column stabilizer of sgn(sigma) sigma{t}.
inline TabloidVector polytabloid(const Tableau& t) {
    check_tabloid_capacity(t.shape());
    TabloidVector out(t.shape());
    const auto cols = t.columns();
    // row of every box is fixed; only the column contents get permuted
    std::vector<std::vector<int>> arrangement = cols;
    for (auto& c : arrangement) std::sort(c.begin(), c.end());
    while (true) {
        std::uint64_t key = 0;
        int sign = 1;
        for (const auto& col : arrangement) {
            for (std::size_t r = 0; r < col.size(); ++r) key |= static_cast<std::uint64_t>(r) << (4 * (col[r] - 1));
        }
        for (std::size_t c = 0; c < cols.size(); ++c) {
            // sign of the permutation taking the original column to the arrangement
            std::vector<int> pos(cols[c].size());
            for (std::size_t r = 0; r < cols[c].size(); ++r)
                pos[r] = static_cast<int>(std::find(cols[c].begin(), cols[c].end(), arrangement[c][r]) - cols[c].begin());
            sign *= sorting_sign(pos);
        }
        out.add(key, sign);
        std::size_t c = 0;
        for (; c < arrangement.size(); ++c)
            if (std::next_permutation(arrangement[c].begin(), arrangement[c].end())) break;
        if (c == arrangement.size()) break;
    }
    return out;
}

/// Expands a standard-coordinate vector into tabloid coordinates.
inline TabloidVector to_tabloids(const SpechtVector& v, const SpechtBasis& basis) {
    TabloidVector out(basis.shape());
    for (const auto& [k, c] : v.coords) out.add_scaled(polytabloid(basis[k]), c);
    return out;
}

/// Garnir straightening with per-instance memoization. Not thread-safe;
/// use one instance per thread.
class Straightener {
public:
    explicit Straightener(std::shared_ptr<const SpechtBasis> basis) : basis_(std::move(basis)) {}
    explicit Straightener(const Partition& shape) : basis_(std::make_shared<SpechtBasis>(shape)) {}

    const SpechtBasis& basis() const noexcept { return *basis_; }
    std::shared_ptr<const SpechtBasis> basis_ptr() const noexcept { return basis_; }

    SpechtVector straighten(const Tableau& t) {
        if (t.shape() != basis_->shape()) throw std::invalid_argument("straighten: shape mismatch");
        Tableau sorted = t;
        const int sign = sorted.sort_columns();
        SpechtVector r = straighten_sorted(sorted);
        if (sign < 0) r *= mpq_class(-1);
        return r;
    }

    /// Every tableau straightened so far, with its coordinates: the linear
    /// relations e(t) = sum c_S e(S) discovered by this instance.
    const std::unordered_map<Tableau, SpechtVector, TableauHash>& discovered() const noexcept { return memo_; }

    void set_memoization(bool on) noexcept { memoize_ = on; }

private:
    SpechtVector straighten_sorted(const Tableau& t) {
        if (memoize_) {
            auto it = memo_.find(t);
            if (it != memo_.end()) return it->second;
        }
        SpechtVector result{basis_->shape(), {}};
        const std::size_t idx = basis_->index_of(t);
        if (idx != SpechtBasis::npos) {
            result.add(idx, 1);
        } else {
            result = garnir_step(t);
        }
        if (memoize_) memo_.emplace(t, result);
        return result;
    }

    // t has increasing columns but is not standard.
    SpechtVector garnir_step(const Tableau& t) {
        const auto& rows = t.rows();
        // left-most column pair with a row descent, top-most row within it
        std::size_t col = 0, row = 0;
        bool found = false;
        for (std::size_t c = 0; !found && c + 1 < rows[0].size(); ++c) {
            for (std::size_t r = 0; r < rows.size() && c + 1 < rows[r].size(); ++r) {
                if (rows[r][c] > rows[r][c + 1]) {
                    col = c;
                    row = r;
                    found = true;
                    break;
                }
            }
        }
        if (!found) throw std::logic_error("garnir_step called on a row-standard tableau");

        // A: column col from row down; B: column col+1 from top through row.
        std::vector<std::pair<std::size_t, std::size_t>> positions;
        const std::size_t height = static_cast<std::size_t>(t.shape().column_height(static_cast<int>(col)));
        for (std::size_t r = row; r < height; ++r) positions.emplace_back(r, col);
        const std::size_t a_size = positions.size();
        for (std::size_t r = 0; r <= row; ++r) positions.emplace_back(r, col + 1);

        std::vector<int> values;
        for (auto [r, c] : positions) values.push_back(rows[r][c]);
        std::vector<int> pool = values;
        std::sort(pool.begin(), pool.end());

        SpechtVector result{basis_->shape(), {}};
        // coset representatives: choose which values fill the A positions
        std::vector<bool> choose(pool.size(), false);
        std::fill(choose.begin(), choose.begin() + static_cast<long>(a_size), true);
        std::vector<int> a_values(values.begin(), values.begin() + static_cast<long>(a_size));
        std::sort(a_values.begin(), a_values.end());
        do {
            std::vector<int> new_a, new_b;
            for (std::size_t k = 0; k < pool.size(); ++k) (choose[k] ? new_a : new_b).push_back(pool[k]);
            if (new_a == a_values) continue;  // identity coset
            std::vector<int> new_values = new_a;
            new_values.insert(new_values.end(), new_b.begin(), new_b.end());
            auto new_rows = rows;
            for (std::size_t k = 0; k < positions.size(); ++k)
                new_rows[positions[k].first][positions[k].second] = new_values[k];
            const int pi_sign = arrangement_sign(values, new_values);
            Tableau u = Tableau::unchecked(std::move(new_rows), t.shape());
            const int sort_sign = u.sort_columns();
            // e(t) = - sum_{pi != id} sgn(pi) e(pi t)
            SpechtVector sub = straighten_sorted(u);
            result.add_scaled(sub, mpq_class(-pi_sign * sort_sign));
        } while (std::prev_permutation(choose.begin(), choose.end()));
        return result;
    }

    // Sign of the permutation of positions carrying `from` onto `to`.
    static int arrangement_sign(const std::vector<int>& from, const std::vector<int>& to) {
        std::vector<int> idx(to.size());
        for (std::size_t k = 0; k < to.size(); ++k)
            idx[k] = static_cast<int>(std::find(from.begin(), from.end(), to[k]) - from.begin());
        return sorting_sign(idx);
    }

    std::shared_ptr<const SpechtBasis> basis_;
    std::unordered_map<Tableau, SpechtVector, TableauHash> memo_;
    bool memoize_ = true;
};

/// Exact dense Gaussian elimination helpers over Q (small systems only).
namespace detail {

/// Returns the inverse of a square matrix, throwing if singular.
inline std::vector<std::vector<mpq_class>> invert(std::vector<std::vector<mpq_class>> a) {
    const std::size_t n = a.size();
    std::vector<std::vector<mpq_class>> inv(n, std::vector<mpq_class>(n, 0));
    for (std::size_t k = 0; k < n; ++k) inv[k][k] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) throw std::domain_error("singular matrix");
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        const mpq_class piv = a[c][c];
        for (std::size_t k = 0; k < n; ++k) {
            a[c][k] /= piv;
            inv[c][k] /= piv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            const mpq_class f = a[r][c];
            for (std::size_t k = 0; k < n; ++k) {
                a[r][k] -= f * a[c][k];
                inv[r][k] -= f * inv[c][k];
            }
        }
    }
    return inv;
}

}  // namespace detail

/// Straightening by exact linear solve in tabloid coordinates. Independent
/// of the Garnir recursion; used as its oracle.
class SolvingStraightener {
public:
    explicit SolvingStraightener(std::shared_ptr<const SpechtBasis> basis) : basis_(std::move(basis)) {
        const std::size_t dim = basis_->dim();
        for (const auto& s : basis_->tableaux()) standard_.push_back(polytabloid(s));

        // rows of the tabloid-by-basis matrix, in increasing key order
        std::map<std::uint64_t, std::vector<mpq_class>> rows;
        for (std::size_t k = 0; k < dim; ++k) {
            for (const auto& [key, c] : standard_[k].coeffs()) {
                auto& row = rows[key];
                if (row.empty()) row.assign(dim, 0);
                row[k] = c;
            }
        }
        // greedily keep rows that raise the rank until the system is square
        std::vector<std::vector<mpq_class>> echelon;
        std::vector<std::size_t> lead;
        std::vector<std::vector<mpq_class>> chosen;
        for (const auto& [key, row] : rows) {
            if (pivot_keys_.size() == dim) break;
            std::vector<mpq_class> v = row;
            for (std::size_t e = 0; e < echelon.size(); ++e) {
                if (v[lead[e]] == 0) continue;
                const mpq_class f = v[lead[e]];
                for (std::size_t k = 0; k < dim; ++k) v[k] -= f * echelon[e][k];
            }
            auto nz = std::find_if(v.begin(), v.end(), [](const mpq_class& x) { return x != 0; });
            if (nz == v.end()) continue;
            const std::size_t l = static_cast<std::size_t>(nz - v.begin());
            const mpq_class piv = v[l];
            for (auto& x : v) x /= piv;
            for (auto& e : echelon) {
                if (e[l] == 0) continue;
                const mpq_class f = e[l];
                for (std::size_t k = 0; k < dim; ++k) e[k] -= f * v[k];
            }
            echelon.push_back(std::move(v));
            lead.push_back(l);
            pivot_keys_.push_back(key);
            chosen.push_back(row);
        }
        if (pivot_keys_.size() != dim)
            throw std::logic_error("standard polytabloids are not independent");
        inverse_ = detail::invert(std::move(chosen));
    }

    explicit SolvingStraightener(const Partition& shape)
        : SolvingStraightener(std::make_shared<SpechtBasis>(shape)) {}

    const SpechtBasis& basis() const noexcept { return *basis_; }

    SpechtVector straighten(const Tableau& t) const {
        if (t.shape() != basis_->shape()) throw std::invalid_argument("straighten: shape mismatch");
        return solve(polytabloid(t));
    }

    /// Coordinates of a tabloid vector known to lie in V_shape.
    SpechtVector solve(const TabloidVector& target) const {
        const std::size_t dim = basis_->dim();
        std::vector<mpq_class> rhs(dim);
        for (std::size_t k = 0; k < dim; ++k) {
            auto it = target.coeffs().find(pivot_keys_[k]);
            rhs[k] = it == target.coeffs().end() ? mpq_class(0) : it->second;
        }
        SpechtVector out{basis_->shape(), {}};
        for (std::size_t r = 0; r < dim; ++r) {
            mpq_class s = 0;
            for (std::size_t k = 0; k < dim; ++k) s += inverse_[r][k] * rhs[k];
            out.add(r, s);
        }
        TabloidVector check(basis_->shape());
        for (const auto& [k, c] : out.coords) check.add_scaled(standard_[k], c);
        if (!(check == target)) throw std::logic_error("inconsistent system: vector not in the Specht module");
        return out;
    }

private:
    std::shared_ptr<const SpechtBasis> basis_;
    std::vector<TabloidVector> standard_;
    std::vector<std::uint64_t> pivot_keys_;
    std::vector<std::vector<mpq_class>> inverse_;
};

/// Product over columns of (x_upper - x_lower).
inline Polynomial specht_polynomial(const Tableau& t) {
    const int n = t.n();
    Polynomial f = Polynomial::constant(n, 1);
    for (const auto& col : t.columns())
        for (std::size_t a = 0; a < col.size(); ++a)
            for (std::size_t b = a + 1; b < col.size(); ++b) f = f * difference(n, col[a], col[b]);
    return f;
}

/// e(T) -> f_T extended linearly.
inline Polynomial specht_vector_to_polynomial(const SpechtVector& v, const SpechtBasis& basis) {
    Polynomial out(basis.shape().n());
    for (const auto& [k, c] : v.coords) out += specht_polynomial(basis[k]) * c;
    return out;
}

/// sigma . v: relabel each basis tableau and straighten.
inline SpechtVector act(const Permutation& sigma, const SpechtVector& v, Straightener& s) {
    SpechtVector out{v.shape, {}};
    for (const auto& [k, c] : v.coords) out.add_scaled(s.straighten(s.basis()[k].relabel(sigma)), c);
    return out;
}

/// Checks signs[0] e(t0) + signs[1] e(t1) + signs[2] e(t2) = 0 by straightening.
/// The three tableaux must share a shape, be pairwise distinct, and agree
/// outside at most three boxes.
inline bool garnir_relation_check(const std::array<Tableau, 3>& ts, const std::array<int, 3>& signs,
                                  Straightener& s) {
    const auto& shape = ts[0].shape();
    for (const auto& t : ts)
        if (t.shape() != shape) throw std::invalid_argument("garnir triple: shapes differ");
    if (ts[0] == ts[1] || ts[1] == ts[2] || ts[0] == ts[2])
        throw std::invalid_argument("garnir triple: tableaux must be distinct");
    std::size_t differing = 0;
    for (std::size_t r = 0; r < ts[0].rows().size(); ++r)
        for (std::size_t c = 0; c < ts[0].rows()[r].size(); ++c)
            if (ts[0].at(r, c) != ts[1].at(r, c) || ts[0].at(r, c) != ts[2].at(r, c)) ++differing;
    if (differing > 3) throw std::invalid_argument("garnir triple: tableaux differ in more than three boxes");
    SpechtVector sum{shape, {}};
    for (std::size_t k = 0; k < 3; ++k) sum.add_scaled(s.straighten(ts[k]), signs[k]);
    return sum.is_zero();
}

}  // namespace specht
