#pragma once

// Degree-j slices of the differentials as sparse coefficient matrices, over
// F_p (optionally after sending x to generic linear forms in fewer
// variables) or over Z.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "specht/linalg.hpp"
#include "specht/polynomial.hpp"
#include "specht/resolution.hpp"

namespace specht {

/// Polynomial over F_p in `vars` variables.
struct ModPoly {
    std::vector<std::pair<Monomial, std::uint32_t>> terms;
};

/// Surjective ring map x_r -> sum_s A[r][s] y_s onto `vars` variables.
class LinearSubstitution {
public:
    static LinearSubstitution identity(int n) {
        LinearSubstitution s;
        s.n_ = n;
        s.vars_ = n;
        s.a_.assign(static_cast<std::size_t>(n), std::vector<std::uint32_t>(static_cast<std::size_t>(n), 0));
        for (int r = 0; r < n; ++r) s.a_[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)] = 1;
        s.identity_ = true;
        return s;
    }

    /// x_r -> y_r for r <= vars; every other x_r goes to a random integer
    /// form with coefficients in [1, p-1]. The kernel is spanned by
    /// n - vars independent linear forms, and a generic subspace of that
    /// dimension can always be written this way.
    static LinearSubstitution random(int n, int vars, std::uint64_t seed) {
        if (vars < 1 || vars > n) throw std::invalid_argument("substitution target size");
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::uint32_t> dist(1, kPrime - 1);
        LinearSubstitution s;
        s.n_ = n;
        s.vars_ = vars;
        s.a_.assign(static_cast<std::size_t>(n), std::vector<std::uint32_t>(static_cast<std::size_t>(vars), 0));
        for (std::size_t r = 0; r < s.a_.size(); ++r) {
            for (std::size_t c = 0; c < s.a_[r].size(); ++c) {
                if (r < static_cast<std::size_t>(vars)) s.a_[r][c] = r == c ? 1 : 0;
                else s.a_[r][c] = dist(rng);
            }
        }
        return s;
    }

    int source_vars() const noexcept { return n_; }
    int vars() const noexcept { return vars_; }
    bool is_identity() const noexcept { return identity_; }

    ModPoly apply(const Polynomial& p) const {
        if (p.ambient() != n_) throw std::invalid_argument("substitution ambient mismatch");
        std::map<Monomial, std::uint32_t> acc;
        if (identity_) {
            for (const auto& [m, c] : p.terms()) acc[m] = mod_from_mpq(c);
        } else {
            for (const auto& [m, c] : p.terms()) {
                std::map<Monomial, std::uint32_t> prod{{Monomial(static_cast<std::size_t>(vars_), 0), mod_from_mpq(c)}};
                for (std::size_t r = 0; r < m.size(); ++r) {
                    for (int e = 0; e < m[r]; ++e) {
                        std::map<Monomial, std::uint32_t> next;
                        for (const auto& [mm, cc] : prod) {
                            for (int s = 0; s < vars_; ++s) {
                                Monomial k = mm;
                                ++k[static_cast<std::size_t>(s)];
                                auto& slot = next[k];
                                slot = mod_add(slot, mod_mul(cc, a_[r][static_cast<std::size_t>(s)]));
                            }
                        }
                        prod = std::move(next);
                    }
                }
                for (const auto& [mm, cc] : prod) {
                    auto& slot = acc[mm];
                    slot = mod_add(slot, cc);
                }
            }
        }
        ModPoly out;
        for (auto& [m, c] : acc)
            if (c != 0) out.terms.emplace_back(m, c);
        return out;
    }

private:
    int n_ = 0;
    int vars_ = 0;
    bool identity_ = false;
    std::vector<std::vector<std::uint32_t>> a_;
};

/// A differential with entries pushed through a substitution, stored by column.
struct ModDifferential {
    std::size_t rows = 0;
    std::size_t cols = 0;
    int source_twist = 0;
    int target_twist = 0;
    int vars = 0;
    std::vector<std::vector<std::pair<std::size_t, ModPoly>>> columns;
};

inline ModDifferential reduce_differential(const DifferentialMatrix& m, const LinearSubstitution& s) {
    ModDifferential out;
    out.rows = m.rows;
    out.cols = m.cols;
    out.source_twist = m.source_twist;
    out.target_twist = m.target_twist;
    out.vars = s.vars();
    out.columns.resize(m.cols);
    for (const auto& [rc, p] : m.entries) {
        ModPoly q = s.apply(p);
        if (!q.terms.empty()) out.columns[rc.second].emplace_back(rc.first, std::move(q));
    }
    return out;
}

/// dim_K of (K^rank (x) R(twist))_j in a ring with `vars` variables.
inline std::uint64_t graded_free_dim(std::size_t rank, int twist, int vars, int j) {
    const int s = j + twist;
    if (s < 0 || rank == 0) return 0;
    if (vars == 0) return s == 0 ? rank : 0;
    return rank * binomial_size(s + vars - 1, vars - 1);
}

/// Rank over F_p of the degree-j slice. Source coordinates become rows,
/// target coordinates are ordered monomial-major (largest monomial first).
/// Rows are fed smallest source monomial first, which keeps fill-in low.
/// Stops early once the rank reaches `cap`.
inline std::size_t slice_rank_mod_p(const ModDifferential& m, int j, std::size_t cap = SIZE_MAX) {
    const int s_src = j + m.source_twist;
    const int s_tgt = j + m.target_twist;
    if (s_src < 0 || s_tgt < 0 || m.rows == 0 || m.cols == 0) return 0;
    const std::size_t ncols = graded_free_dim(m.rows, m.target_twist, m.vars, j);
    if (ncols > UINT32_MAX) throw std::overflow_error("slice too large");
    const MonomialRanker ranker(m.vars, s_tgt);
    auto monos = graded_piece_basis(m.vars, s_src);
    std::reverse(monos.begin(), monos.end());
    ModularEchelon e(ncols);
    ModRow row;
    Monomial prod(static_cast<std::size_t>(m.vars));
    for (const auto& mono : monos) {
        for (std::size_t c = 0; c < m.cols; ++c) {
            row.clear();
            for (const auto& [r, poly] : m.columns[c]) {
                for (const auto& [mu, coeff] : poly.terms) {
                    for (std::size_t k = 0; k < prod.size(); ++k) prod[k] = mono[k] + mu[k];
                    const std::size_t idx = ranker.rank(prod) * m.rows + r;
                    row.emplace_back(static_cast<std::uint32_t>(idx), coeff);
                }
            }
            std::sort(row.begin(), row.end());
            e.add_row(row);
            if (e.rank() == ncols || e.rank() >= cap) return e.rank();
        }
    }
    return e.rank();
}

/// Exact rank over Q of the degree-j slice in the full ring.
inline std::size_t slice_rank_exact(const DifferentialMatrix& m, int n, int j) {
    const int s_src = j + m.source_twist;
    const int s_tgt = j + m.target_twist;
    if (s_src < 0 || s_tgt < 0 || m.rows == 0 || m.cols == 0) return 0;
    const std::size_t ncols = graded_free_dim(m.rows, m.target_twist, n, j);
    const MonomialRanker ranker(n, s_tgt);
    auto monos = graded_piece_basis(n, s_src);
    std::reverse(monos.begin(), monos.end());
    const auto cols = m.columns();
    ExactEchelon e(ncols);
    Monomial prod(static_cast<std::size_t>(n));
    for (const auto& mono : monos) {
        for (std::size_t c = 0; c < m.cols; ++c) {
            std::vector<std::pair<std::uint32_t, mpq_class>> row;
            for (const auto& [r, poly] : cols[c]) {
                for (const auto& [mu, coeff] : poly.terms()) {
                    for (std::size_t k = 0; k < prod.size(); ++k) prod[k] = mono[k] + mu[k];
                    row.emplace_back(static_cast<std::uint32_t>(ranker.rank(prod) * m.rows + r), coeff);
                }
            }
            e.add_row(integral_row(row));
            if (e.rank() == ncols) return ncols;
        }
    }
    return e.rank();
}

/// Macaulay matrix rows {m * g : deg m = j - deg g} over F_p after a substitution.
inline std::size_t macaulay_rank_mod_p(const std::vector<Polynomial>& gens, const LinearSubstitution& s, int j) {
    const int vars = s.vars();
    std::vector<ModPoly> reduced;
    int deg = -1;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!g.is_homogeneous()) throw std::invalid_argument("generators must be homogeneous");
        if (deg >= 0 && g.degree() != deg) throw std::invalid_argument("generators must share a degree");
        deg = g.degree();
        reduced.push_back(s.apply(g));
    }
    if (deg < 0 || j < deg) return 0;
    const std::size_t ncols = binomial_size(j + vars - 1, vars - 1);
    const MonomialRanker ranker(vars, j);
    ModularEchelon e(ncols);
    Monomial prod(static_cast<std::size_t>(vars));
    ModRow row;
    auto monos = graded_piece_basis(vars, j - deg);
    std::reverse(monos.begin(), monos.end());
    for (const auto& mono : monos) {
        for (const auto& g : reduced) {
            row.clear();
            for (const auto& [mu, c] : g.terms) {
                for (std::size_t k = 0; k < prod.size(); ++k) prod[k] = mono[k] + mu[k];
                row.emplace_back(static_cast<std::uint32_t>(ranker.rank(prod)), c);
            }
            std::sort(row.begin(), row.end());
            e.add_row(row);
            if (e.rank() == ncols) return ncols;
        }
    }
    return e.rank();
}

/// Exact rank over Q of the Macaulay matrix in the full ring.
inline std::size_t macaulay_rank_exact(const std::vector<Polynomial>& gens, int n, int j) {
    int deg = -1;
    for (const auto& g : gens)
        if (!g.is_zero()) deg = g.degree();
    if (deg < 0 || j < deg) return 0;
    const std::size_t ncols = binomial_size(j + n - 1, n - 1);
    const MonomialRanker ranker(n, j);
    ExactEchelon e(ncols);
    Monomial prod(static_cast<std::size_t>(n));
    auto monos = graded_piece_basis(n, j - deg);
    std::reverse(monos.begin(), monos.end());
    for (const auto& mono : monos) {
        for (const auto& g : gens) {
            std::vector<std::pair<std::uint32_t, mpq_class>> row;
            for (const auto& [mu, c] : g.terms()) {
                for (std::size_t k = 0; k < prod.size(); ++k) prod[k] = mono[k] + mu[k];
                row.emplace_back(static_cast<std::uint32_t>(ranker.rank(prod)), c);
            }
            e.add_row(integral_row(row));
            if (e.rank() == ncols) return ncols;
        }
    }
    return e.rank();
}

}  // namespace specht
