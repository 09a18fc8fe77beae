#pragma once

// The complex F_.^(n-d,d): free modules V_shape (x) R(twist) with standard
// polytabloid bases, the three differential families and the augmentation.

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "specht/combinatorics.hpp"
#include "specht/polynomial.hpp"
#include "specht/specht_module.hpp"

namespace specht {

inline void check_parameters(int n, int d) {
    if (d < 1 || n < 2 * d) throw std::invalid_argument("need n >= 2d >= 2");
    if (n > 16) throw std::invalid_argument("n > 16 is not supported");
}

/// Which construction produces the differential leaving F_i.
enum class Family { Low, Connect, High };

inline Family family_of(int n, int d, int i) {
    if (i <= n - 2 * d) return Family::Low;
    if (i == n - 2 * d + 1) return Family::Connect;
    return Family::High;
}

inline int complex_length(int n, int d) { return n - d - 1; }

/// Shape of F_i, nullopt outside 0..n-d-1.
inline std::optional<Partition> module_shape(int n, int d, int i) {
    if (i < 0 || i > complex_length(n, d)) return std::nullopt;
    if (i <= n - 2 * d) return hook_like_shape(n - d - i, d, i);
    return hook_like_shape(d - 1, n - d - i, i + 1);
}

/// Twist of F_i as the signed shift, e.g. -3 for R(-3).
inline int module_twist(int n, int d, int i) { return i <= n - 2 * d ? -(d + i) : -(d + i + 1); }

struct FreeModuleSpec {
    int index = 0;
    Partition shape;
    int twist = 0;
    std::size_t rank = 0;
    std::shared_ptr<const SpechtBasis> basis;
};

/// Element of a free module: basis index -> polynomial coefficient.
using FreeElement = std::map<std::size_t, Polynomial>;

inline void add_to(FreeElement& v, std::size_t k, const Polynomial& p) {
    if (p.is_zero()) return;
    auto [it, inserted] = v.try_emplace(k, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) v.erase(it);
    }
}

/// One summand e(tableau) (x) sign * monomial of a formal differential.
struct FormalTerm {
    Tableau tableau;
    int sign = 1;
    std::vector<int> variables;  // 1-based, product taken

    Polynomial coefficient(int n) const {
        Monomial m(static_cast<std::size_t>(n), 0);
        for (int v : variables) ++m[static_cast<std::size_t>(v - 1)];
        return Polynomial::monomial(m, sign);
    }
};

namespace detail {

inline void expect_shape(const Tableau& t, const std::optional<Partition>& shape, const char* what) {
    if (!shape || t.shape() != *shape) throw std::invalid_argument(std::string(what) + ": shape mismatch");
}

}  // namespace detail

/// Terms of the d-linear strand map for T of shape (n-d-i, d, 1^i).
/// T^j moves a_j from the first column to the end of the first row.
inline std::vector<FormalTerm> differential_low(const Tableau& t, int i, int d) {
    const int n = t.n();
    if (i < 1 || i > n - 2 * d) throw std::invalid_argument("differential_low: index out of range");
    detail::expect_shape(t, hook_like_shape(n - d - i, d, i), "differential_low");
    const std::vector<int> a = t.column(0);
    std::vector<FormalTerm> out;
    for (std::size_t j = 0; j < a.size(); ++j) {
        std::vector<int> col;
        for (std::size_t k = 0; k < a.size(); ++k)
            if (k != j) col.push_back(a[k]);
        auto rows = t.rows();
        rows[0].push_back(a[j]);
        rows.pop_back();
        for (std::size_t r = 0; r < col.size(); ++r) rows[r][0] = col[r];
        out.push_back({Tableau(std::move(rows)), j % 2 == 0 ? 1 : -1, {a[j]}});
    }
    return out;
}

/// Terms of the quadratic map for T of shape ((d-1)^2, 1^(n-2d+2)).
/// T_{j,k} moves a_j to the end of row 1 and a_k to the end of row 2.
inline std::vector<FormalTerm> differential_connect(const Tableau& t, int d) {
    const int n = t.n();
    detail::expect_shape(t, hook_like_shape(d - 1, d - 1, n - 2 * d + 2), "differential_connect");
    const std::vector<int> a = t.column(0);
    std::vector<FormalTerm> out;
    for (std::size_t j = 0; j < a.size(); ++j) {
        for (std::size_t k = j + 1; k < a.size(); ++k) {
            std::vector<int> col;
            for (std::size_t m = 0; m < a.size(); ++m)
                if (m != j && m != k) col.push_back(a[m]);
            auto rows = t.rows();
            rows[0].push_back(a[j]);
            rows[1].push_back(a[k]);
            rows.pop_back();
            rows.pop_back();
            for (std::size_t r = 0; r < col.size(); ++r) rows[r][0] = col[r];
            // (-1)^(j+k-1) with 1-based j, k
            const int sign = ((j + k) % 2 == 0) ? -1 : 1;
            out.push_back({Tableau(std::move(rows)), sign, {a[j], a[k]}});
        }
    }
    return out;
}

/// Terms of the (d+1)-linear strand map for T of shape (d-1, n-d-i, 1^(i+1)).
/// T_j moves a_j to the end of row 2; each T_j is summed over H, the
/// identity together with the swaps of the entry above the new box with
/// the first-row entries to its right.
inline std::vector<FormalTerm> differential_high(const Tableau& t, int i, int d) {
    const int n = t.n();
    if (i < n - 2 * d + 2 || i > n - d - 1) throw std::invalid_argument("differential_high: index out of range");
    detail::expect_shape(t, hook_like_shape(d - 1, n - d - i, i + 1), "differential_high");
    const std::vector<int> a = t.column(0);
    const std::size_t pos = static_cast<std::size_t>(n - d - i);  // 0-based column of the new box
    std::vector<FormalTerm> out;
    for (std::size_t j = 0; j < a.size(); ++j) {
        std::vector<int> col;
        for (std::size_t k = 0; k < a.size(); ++k)
            if (k != j) col.push_back(a[k]);
        auto rows = t.rows();
        rows[1].push_back(a[j]);
        rows.pop_back();
        for (std::size_t r = 0; r < col.size(); ++r) rows[r][0] = col[r];
        const int sign = j % 2 == 0 ? 1 : -1;
        out.push_back({Tableau(rows), sign, {a[j]}});
        for (std::size_t k = pos + 1; k < rows[0].size(); ++k) {
            auto swapped = rows;
            std::swap(swapped[0][pos], swapped[0][k]);
            out.push_back({Tableau(std::move(swapped)), sign, {a[j]}});
        }
    }
    return out;
}

/// e(T) -> f_T on F_0.
inline Polynomial augmentation(const Tableau& t, int d) {
    detail::expect_shape(t, hook_like_shape(t.n() - d, d, 0), "augmentation");
    return specht_polynomial(t);
}

/// Formal differential of an arbitrary tableau of the shape of F_i.
inline std::vector<FormalTerm> formal_differential(int n, int d, int i, const Tableau& t) {
    if (t.n() != n) throw std::invalid_argument("formal_differential: wrong n");
    switch (family_of(n, d, i)) {
        case Family::Low: return differential_low(t, i, d);
        case Family::Connect: return differential_connect(t, d);
        case Family::High: return differential_high(t, i, d);
    }
    return {};
}

/// Straightens formal terms into target standard coordinates.
inline FreeElement straighten_terms(const std::vector<FormalTerm>& terms, Straightener& target) {
    FreeElement out;
    const int n = target.basis().shape().n();
    for (const auto& term : terms) {
        const Polynomial coeff = term.coefficient(n);
        for (const auto& [k, c] : target.straighten(term.tableau).coords) add_to(out, k, coeff * c);
    }
    return out;
}

/// Sparse matrix with polynomial entries; columns index the source basis,
/// rows the target basis.
struct DifferentialMatrix {
    int index = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    int source_twist = 0;
    int target_twist = 0;
    std::map<std::pair<std::size_t, std::size_t>, Polynomial> entries;  // (row, col)

    /// Degree every entry should have.
    int entry_degree() const { return target_twist - source_twist; }

    FreeElement column(std::size_t c) const {
        FreeElement out;
        for (const auto& [rc, p] : entries)
            if (rc.second == c) out.emplace(rc.first, p);
        return out;
    }

    /// Columns as row -> entry maps, built in one pass.
    std::vector<FreeElement> columns() const {
        std::vector<FreeElement> out(cols);
        for (const auto& [rc, p] : entries) out[rc.second].emplace(rc.first, p);
        return out;
    }
};

struct ChainComplex {
    int n = 0;
    int d = 0;
    std::vector<FreeModuleSpec> modules;            // F_0 .. F_{n-d-1}
    std::vector<DifferentialMatrix> differentials;  // differentials[k] is the map leaving F_{k+1}
    std::vector<Polynomial> generators;             // f_T for the basis of F_0

    const DifferentialMatrix& differential(int i) const {
        if (i < 1 || i > static_cast<int>(differentials.size()))
            throw std::out_of_range("differential index out of range");
        return differentials[static_cast<std::size_t>(i - 1)];
    }

    int max_twist_magnitude() const {
        int m = 0;
        for (const auto& f : modules) m = std::max(m, -f.twist);
        return m;
    }
};

inline std::vector<FreeModuleSpec> module_specs(int n, int d) {
    check_parameters(n, d);
    std::vector<FreeModuleSpec> out;
    for (int i = 0; i <= complex_length(n, d); ++i) {
        const auto shape = module_shape(n, d, i);
        if (!shape) throw std::logic_error("empty module inside the complex range");
        auto basis = std::make_shared<SpechtBasis>(*shape);
        out.push_back({i, *shape, module_twist(n, d, i), basis->dim(), basis});
    }
    return out;
}

/// Matrix of the differential leaving F_i, columns split across `jobs`
/// workers, each with its own straightener.
inline DifferentialMatrix build_differential(int n, int d, int i, const FreeModuleSpec& source,
                                             const FreeModuleSpec& target, unsigned jobs = 1) {
    DifferentialMatrix m;
    m.index = i;
    m.rows = target.rank;
    m.cols = source.rank;
    m.source_twist = source.twist;
    m.target_twist = target.twist;
    std::vector<FreeElement> cols(source.rank);
    auto work = [&](std::size_t begin, std::size_t step) {
        Straightener s(target.basis);
        for (std::size_t c = begin; c < source.rank; c += step)
            cols[c] = straighten_terms(formal_differential(n, d, i, (*source.basis)[c]), s);
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, source.rank))));
    if (jobs == 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w, jobs);
        for (auto& th : pool) th.join();
    }
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (auto& [r, p] : cols[c]) m.entries.emplace(std::make_pair(r, c), std::move(p));
    return m;
}

inline ChainComplex build_complex(int n, int d, unsigned jobs = 1) {
    ChainComplex cx;
    cx.n = n;
    cx.d = d;
    cx.modules = module_specs(n, d);
    for (int i = 1; i <= complex_length(n, d); ++i)
        cx.differentials.push_back(build_differential(n, d, i, cx.modules[static_cast<std::size_t>(i)],
                                                      cx.modules[static_cast<std::size_t>(i - 1)], jobs));
    for (const auto& t : cx.modules[0].basis->tableaux()) cx.generators.push_back(augmentation(t, d));
    return cx;
}

/// Image of a standard-coordinate vector of F_i under the built matrix.
inline FreeElement apply_differential(const ChainComplex& cx, int i, const SpechtVector& v) {
    const auto& m = cx.differential(i);
    if (v.shape != cx.modules[static_cast<std::size_t>(i)].shape)
        throw std::invalid_argument("apply_differential: vector shape mismatch");
    FreeElement out;
    for (const auto& [rc, p] : m.entries) {
        auto it = v.coords.find(rc.second);
        if (it != v.coords.end()) add_to(out, rc.first, p * it->second);
    }
    return out;
}

/// Image of a free-module element (polynomial coefficients) under the matrix.
inline FreeElement apply_matrix(const DifferentialMatrix& m, const FreeElement& v) {
    FreeElement out;
    for (const auto& [rc, p] : m.entries) {
        auto it = v.find(rc.second);
        if (it != v.end()) add_to(out, rc.first, p * it->second);
    }
    return out;
}

/// Flips the sign of the first stored entry of the differential leaving F_i.
inline void inject_sign_fault(ChainComplex& cx, int i) {
    auto& m = cx.differentials.at(static_cast<std::size_t>(i - 1));
    if (m.entries.empty()) throw std::logic_error("no entry to corrupt");
    auto& p = m.entries.begin()->second;
    p = -p;
}

}  // namespace specht
