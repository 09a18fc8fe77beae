#pragma once

// Independent checks on F_.^(n-d,d): closed forms for Betti numbers and the
// Hilbert series, the chain and minimality conditions, certified degreewise
// exactness, and the branching filtration.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <gmpxx.h>

#include "specht/combinatorics.hpp"
#include "specht/graded.hpp"
#include "specht/linalg.hpp"
#include "specht/polynomial.hpp"
#include "specht/resolution.hpp"
#include "specht/specht_module.hpp"

namespace specht {

// ---------------------------------------------------------------------------
// Betti numbers and Hilbert series

struct BettiTable {
    int n = 0;
    int d = 0;
    std::map<std::pair<int, int>, std::uint64_t> entries;  // (i, j) -> beta

    std::uint64_t at(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }
};

/// rank F_i from the hook formula, without building bases.
inline std::vector<std::uint64_t> module_ranks(int n, int d) {
    check_parameters(n, d);
    std::vector<std::uint64_t> out;
    for (int i = 0; i <= complex_length(n, d); ++i) out.push_back(dim_specht(module_shape(n, d, i)));
    return out;
}

/// Betti table read off the complex: F_i contributes rank F_i at j = -twist.
inline BettiTable betti_table(int n, int d) {
    BettiTable t{n, d, {}};
    const auto ranks = module_ranks(n, d);
    for (int i = 0; i < static_cast<int>(ranks.size()); ++i)
        t.entries[{i, -module_twist(n, d, i)}] = ranks[static_cast<std::size_t>(i)];
    return t;
}

inline BettiTable betti_table(const ChainComplex& cx) {
    BettiTable t{cx.n, cx.d, {}};
    for (const auto& f : cx.modules) t.entries[{f.index, -f.twist}] = f.rank;
    return t;
}

/// (h_0 + h_1 t + ... + h_d t^d) / (1 - t)^e
struct HilbertSeries {
    std::vector<mpz_class> numerator;
    int denominator_exponent = 0;

    /// Coefficient of t^j in the expansion.
    mpz_class coefficient(int j) const {
        mpz_class s = 0;
        const int e = denominator_exponent;
        for (int k = 0; k < static_cast<int>(numerator.size()) && k <= j; ++k) {
            const mpz_class c = e == 0 ? mpz_class(j == k ? 1 : 0) : binomial(j - k + e - 1, e - 1);
            s += numerator[static_cast<std::size_t>(k)] * c;
        }
        return s;
    }

    /// Largest k with h_k != 0; the regularity of R/I when R/I is Cohen-Macaulay.
    int top_degree() const {
        for (int k = static_cast<int>(numerator.size()) - 1; k >= 0; --k)
            if (numerator[static_cast<std::size_t>(k)] != 0) return k;
        return -1;
    }
};

inline HilbertSeries hilbert_series(int n, int d) {
    check_parameters(n, d);
    HilbertSeries h;
    h.denominator_exponent = d;
    h.numerator.push_back(1);
    for (int i = 1; i <= d - 1; ++i) h.numerator.push_back(binomial(n - d + i - 1, i));
    h.numerator.push_back(binomial(n - 1, d - 2));
    return h;
}

inline void check_betti_index(int n, int d, int i) {
    check_parameters(n, d);
    if (i < 0 || i > n - d) throw std::out_of_range("betti index out of range");
}

/// n!(n-2d-i+1) / ((n-d-i)! (d-1)! i! (n-d+1)(d+i))
inline mpz_class betti_closed_form(int n, int d, int i) {
    check_betti_index(n, d, i);
    const mpz_class num = factorial(n) * (n - 2 * d - i + 1);
    const mpz_class den = factorial(n - d - i) * factorial(d - 1) * factorial(i) * (n - d + 1) * (d + i);
    if (num % den != 0) throw std::logic_error("closed form is not integral");
    return num / den;
}

/// The three-case table: rank F_i, 0, or -rank F_{i-1}.
inline mpz_class betti_case_value(int n, int d, int i) {
    check_betti_index(n, d, i);
    if (i <= n - 2 * d) return static_cast<unsigned long>(dim_specht(hook_like_shape(n - d - i, d, i)));
    if (i == n - 2 * d + 1) return 0;
    return -mpz_class(static_cast<unsigned long>(dim_specht(hook_like_shape(d - 1, n - d - i + 1, i))));
}

/// Degree-(d+i) coefficient of 1 - (1-t)^(n-d) h(t), times (-1)^i.
inline mpz_class betti_alternating_sum(int n, int d, int i) {
    check_betti_index(n, d, i);
    const auto h = hilbert_series(n, d).numerator;
    mpz_class s = 0;
    for (int k = 0; k <= d - 1; ++k) {
        const int e = d + i - k - 1;
        const mpz_class term = binomial(n - d, d + i - k) * h[static_cast<std::size_t>(k)];
        s += (e % 2 == 0) ? term : mpz_class(-term);
    }
    const mpz_class last = binomial(n - d, i) * h[static_cast<std::size_t>(d)];
    s += ((i - 1) % 2 == 0) ? last : mpz_class(-last);
    return (i % 2 == 0) ? s : mpz_class(-s);
}

/// C(n-1, d+i) C(d+i-1, i) - C(n-d, i) C(n-1, d-2)
inline mpz_class betti_binomial_form(int n, int d, int i) {
    check_betti_index(n, d, i);
    return binomial(n - 1, d + i) * binomial(d + i - 1, i) - binomial(n - d, i) * binomial(n - 1, d - 2);
}

struct ClosedFormRow {
    int i = 0;
    mpz_class alternating, binomial_form, closed, cases;
    bool agree() const { return alternating == binomial_form && binomial_form == closed && closed == cases; }
};

inline std::vector<ClosedFormRow> closed_form_table(int n, int d) {
    std::vector<ClosedFormRow> rows;
    for (int i = 0; i <= n - d; ++i)
        rows.push_back({i, betti_alternating_sum(n, d, i), betti_binomial_form(n, d, i), betti_closed_form(n, d, i),
                        betti_case_value(n, d, i)});
    return rows;
}

/// Every expression for beta_{i,d+i} - beta_{i-1,d+i} agrees for 0 <= i <= n-d,
/// and the cases match the module ranks.
inline bool betti_alternating_sum_check(int n, int d) {
    const auto ranks = module_ranks(n, d);
    for (const auto& row : closed_form_table(n, d)) {
        if (!row.agree()) return false;
        const int i = row.i;
        mpz_class expected;
        if (i <= n - 2 * d) expected = static_cast<unsigned long>(ranks[static_cast<std::size_t>(i)]);
        else if (i == n - 2 * d + 1) expected = 0;
        else expected = -mpz_class(static_cast<unsigned long>(ranks[static_cast<std::size_t>(i - 1)]));
        if (row.cases != expected) return false;
    }
    return true;
}

/// Integer polynomial in t, index = exponent.
using TPoly = std::vector<mpz_class>;

inline TPoly tpoly_mul(const TPoly& a, const TPoly& b) {
    if (a.empty() || b.empty()) return {};
    TPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t x = 0; x < a.size(); ++x)
        for (std::size_t y = 0; y < b.size(); ++y) r[x + y] += a[x] * b[y];
    return r;
}

inline void tpoly_trim(TPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

/// 1 - (1-t)^(n-d) h(t): the alternating Betti polynomial predicted by the
/// Hilbert series.
inline TPoly euler_rhs(int n, int d) {
    TPoly one_minus_t{1, -1};
    TPoly p{1};
    for (int k = 0; k < n - d; ++k) p = tpoly_mul(p, one_minus_t);
    p = tpoly_mul(p, hilbert_series(n, d).numerator);
    for (auto& c : p) c = -c;
    p[0] += 1;
    tpoly_trim(p);
    return p;
}

inline TPoly euler_lhs(const std::vector<std::uint64_t>& ranks, const std::vector<int>& twists) {
    TPoly p;
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        const std::size_t e = static_cast<std::size_t>(-twists[i]);
        if (p.size() <= e) p.resize(e + 1, 0);
        const mpz_class r = static_cast<unsigned long>(ranks[i]);
        p[e] += (i % 2 == 0) ? r : mpz_class(-r);
    }
    tpoly_trim(p);
    return p;
}

inline bool euler_characteristic_check(int n, int d) {
    std::vector<int> twists;
    for (int i = 0; i <= complex_length(n, d); ++i) twists.push_back(module_twist(n, d, i));
    return euler_lhs(module_ranks(n, d), twists) == euler_rhs(n, d);
}

inline bool euler_characteristic_check(const ChainComplex& cx) {
    std::vector<std::uint64_t> ranks;
    std::vector<int> twists;
    for (const auto& f : cx.modules) {
        ranks.push_back(f.rank);
        twists.push_back(f.twist);
    }
    return euler_lhs(ranks, twists) == euler_rhs(cx.n, cx.d);
}

// ---------------------------------------------------------------------------
// Structure of the matrices

struct EntryLocation {
    int index = 0;  // differential index, or composite index
    std::size_t row = 0;
    std::size_t col = 0;
    std::string detail;
};

struct CheckResult {
    bool passed = true;
    std::vector<EntryLocation> failures;  // first few only

    void fail(EntryLocation loc) {
        passed = false;
        if (failures.size() < 8) failures.push_back(std::move(loc));
    }
};

/// Zero constant terms, homogeneity and the expected degree of every entry.
inline CheckResult minimality_check(const ChainComplex& cx) {
    CheckResult r;
    for (const auto& m : cx.differentials) {
        for (const auto& [rc, p] : m.entries) {
            if (p.constant_term() != 0)
                r.fail({m.index, rc.first, rc.second, "nonzero constant term"});
            else if (!p.is_homogeneous() || p.degree() != m.entry_degree())
                r.fail({m.index, rc.first, rc.second, "entry has the wrong degree"});
        }
    }
    return r;
}

/// d_i o d_{i+1} = 0 for all i >= 1 and augmentation o d_1 = 0.
/// Failures report (composite index i, row, col) of a nonzero product entry;
/// index 0 is the augmentation composite.
inline CheckResult chain_complex_check(const ChainComplex& cx) {
    CheckResult r;
    if (!cx.differentials.empty()) {
        const auto cols = cx.differential(1).columns();
        for (std::size_t c = 0; c < cols.size(); ++c) {
            Polynomial s(cx.n);
            for (const auto& [row, p] : cols[c]) s += cx.generators[row] * p;
            if (!s.is_zero()) r.fail({0, 0, c, s.to_string()});
        }
    }
    for (int i = 1; i < static_cast<int>(cx.differentials.size()); ++i) {
        const auto cols = cx.differential(i + 1).columns();
        for (std::size_t c = 0; c < cols.size(); ++c) {
            for (const auto& [row, p] : apply_matrix(cx.differential(i), cols[c]))
                r.fail({i, row, c, p.to_string()});
        }
    }
    return r;
}

/// The degree-|twist| piece of each d_i is injective on F_i (x) 1.
inline bool lowest_degree_injectivity(const ChainComplex& cx, int i) {
    const auto& m = cx.differential(i);
    return slice_rank_exact(m, cx.n, -m.source_twist) == m.cols;
}

/// sigma d(e_T) = d(sigma e_T) for every basis tableau of F_i.
inline bool equivariance_check(const ChainComplex& cx, int i, const Permutation& sigma) {
    const auto& src = cx.modules.at(static_cast<std::size_t>(i));
    const auto& tgt = cx.modules.at(static_cast<std::size_t>(i - 1));
    Straightener ss(src.basis), ts(tgt.basis);
    const auto cols = cx.differential(i).columns();
    for (std::size_t c = 0; c < src.rank; ++c) {
        const FreeElement lhs = apply_differential(cx, i, act(sigma, SpechtVector::unit(src.shape, c), ss));
        FreeElement rhs;
        for (const auto& [row, p] : cols[c]) {
            const Polynomial q = act_permutation(sigma, p);
            for (const auto& [k, coeff] : ts.straighten((*tgt.basis)[row].relabel(sigma)).coords)
                add_to(rhs, k, q * coeff);
        }
        if (lhs != rhs) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Relations among polytabloids

/// For every relation e(t) = sum c_S e(S) recorded by the straightener:
/// f_t = sum c_S f_S, and (when i >= 1) the formal differential of t,
/// straightened, equals sum c_S d(e_S).
struct RelationReport {
    std::size_t relations = 0;
    std::size_t polynomial_failures = 0;
    std::size_t differential_failures = 0;
    bool passed() const { return polynomial_failures == 0 && differential_failures == 0; }
};

inline RelationReport check_relations(const ChainComplex& cx, int i, const std::vector<Tableau>& tableaux) {
    RelationReport rep;
    const auto& src = cx.modules.at(static_cast<std::size_t>(i));
    Straightener s(src.basis);
    for (const auto& t : tableaux) s.straighten(t);
    std::optional<Straightener> target;
    if (i >= 1) target.emplace(cx.modules.at(static_cast<std::size_t>(i - 1)).basis);
    for (const auto& [t, v] : s.discovered()) {
        ++rep.relations;
        if (specht_vector_to_polynomial(v, *src.basis) != specht_polynomial(t)) ++rep.polynomial_failures;
        if (i >= 1) {
            const FreeElement formal = straighten_terms(formal_differential(cx.n, cx.d, i, t), *target);
            if (formal != apply_differential(cx, i, v)) ++rep.differential_failures;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Degreewise exactness

enum class ExactnessMethod { Auto, Direct, Reduced };

struct ExactnessOptions {
    int j_max = -1;  // default: max twist magnitude + 3
    ExactnessMethod method = ExactnessMethod::Auto;
    std::uint64_t direct_limit = 12000;  // largest full-ring slice handled directly
    std::uint64_t exact_limit = 2500;    // largest slice for the exact rational fallback
    int attempts = 3;
    unsigned jobs = 1;
    std::uint64_t seed = 0x5bd1e995u;
};

struct PositionReport {
    int position = 0;
    std::uint64_t dim = 0;         // dim [F_i]_j over R
    int variables = 0;             // ring used for the certificate
    std::uint64_t slice_dim = 0;   // dim [F_i]_j in that ring
    std::uint64_t rank_out = 0;    // rank of [d_i]_j found
    std::uint64_t rank_in = 0;     // rank of [d_{i+1}]_j found
    std::int64_t homology = 0;     // slice_dim - rank_out - rank_in
    bool homology_exact = false;   // ranks are exact (not lower bounds)
    bool certified = false;        // homology at this position proven zero
    std::string method;
};

struct GradedPieceReport {
    int j = 0;
    std::vector<std::uint64_t> dims;  // dim [F_i]_j
    std::vector<PositionReport> positions;
    std::int64_t euler = 0;           // alternating sum of dims: dim coker [d_1]_j once exact
    std::uint64_t ideal_lower_bound = 0;
    std::string ideal_method;
    bool position0_ok = false;

    bool ok() const {
        if (!position0_ok) return false;
        return std::all_of(positions.begin(), positions.end(), [](const PositionReport& p) { return p.certified; });
    }
};

inline std::uint64_t ring_dim(int vars, int j) {
    if (j < 0) return 0;
    return binomial_size(j + vars - 1, vars - 1);
}

inline std::uint64_t mix_seed(std::uint64_t seed, int n, int d, int pos, int attempt) {
    std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ull;
    for (int v : {n, d, pos, attempt}) {
        h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

/// Lower bounds for dim I_j, I generated by `gens` of degree d:
/// HF(R/I) <= HF(R/(I + l_1..l_d)) / (1-t)^d coefficientwise for any
/// linear forms, and ranks mod p never exceed ranks over Q.
class IdealDimensionBound {
public:
    IdealDimensionBound(const std::vector<Polynomial>& gens, int n, int d, int j_max, std::uint64_t seed)
        : gens_(gens), n_(n), d_(d) {
        const int vars = n - d;
        const auto sub = LinearSubstitution::random(n, vars, seed);
        for (int t = 0; t <= j_max; ++t) {
            const std::uint64_t total = ring_dim(vars, t);
            const std::uint64_t hf = (!artinian_.empty() && artinian_.back() == 0)
                                         ? 0
                                         : total - macaulay_rank_mod_p(gens_, sub, t);
            artinian_.push_back(hf);
        }
    }

    /// Upper bound for dim (R/I)_j from the Artinian reduction.
    std::uint64_t quotient_upper_bound(int j) const {
        std::uint64_t s = 0;
        for (int t = 0; t <= j && t < static_cast<int>(artinian_.size()); ++t)
            s += artinian_[static_cast<std::size_t>(t)] * ring_dim(d_, j - t);
        return s;
    }

    std::uint64_t artinian_lower_bound(int j) const {
        const std::uint64_t total = ring_dim(n_, j);
        const std::uint64_t q = quotient_upper_bound(j);
        return q >= total ? 0 : total - q;
    }

    /// Rank mod p of the full Macaulay matrix.
    std::uint64_t macaulay_lower_bound(int j) const {
        return macaulay_rank_mod_p(gens_, LinearSubstitution::identity(n_), j);
    }

    const std::vector<std::uint64_t>& artinian_values() const noexcept { return artinian_; }

private:
    const std::vector<Polynomial>& gens_;
    int n_, d_;
    std::vector<std::uint64_t> artinian_;
};

namespace detail {

struct ExactnessContext {
    const ChainComplex& cx;
    const ExactnessOptions& opt;
    int length = 0;  // number of differentials
    // reduced differentials per (position, attempt): index [pos][attempt][k] for k in {pos, pos+1}
    std::map<std::pair<int, int>, std::vector<ModDifferential>> reduced;
    std::mutex mutex;

    const std::vector<ModDifferential>& reduced_pair(int pos, int attempt) {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = reduced.find({pos, attempt});
        if (it != reduced.end()) return it->second;
        const int vars = cx.n - cx.d - pos;
        const auto sub = LinearSubstitution::random(cx.n, vars, mix_seed(opt.seed, cx.n, cx.d, pos, attempt));
        std::vector<ModDifferential> pair;
        for (int k = pos; k <= std::min(pos + 1, length); ++k) pair.push_back(reduce_differential(cx.differential(k), sub));
        return reduced.emplace(std::make_pair(pos, attempt), std::move(pair)).first->second;
    }
};

inline std::uint64_t full_dim(const ChainComplex& cx, int i, int j) {
    if (i < 0 || i >= static_cast<int>(cx.modules.size())) return 0;
    const auto& f = cx.modules[static_cast<std::size_t>(i)];
    return graded_free_dim(f.rank, f.twist, cx.n, j);
}

inline PositionReport direct_position(ExactnessContext& ctx, int pos, int j,
                                      std::map<int, std::uint64_t>& mod_cache) {
    const auto& cx = ctx.cx;
    PositionReport rep;
    rep.position = pos;
    rep.dim = full_dim(cx, pos, j);
    rep.variables = cx.n;
    rep.slice_dim = rep.dim;
    rep.method = "direct-mod-p";
    auto rank_of = [&](int k) -> std::uint64_t {
        if (k > ctx.length) return 0;
        auto it = mod_cache.find(k);
        if (it != mod_cache.end()) return it->second;
        const auto red = reduce_differential(cx.differential(k), LinearSubstitution::identity(cx.n));
        const std::uint64_t r = slice_rank_mod_p(red, j);
        mod_cache.emplace(k, r);
        return r;
    };
    rep.rank_out = rank_of(pos);
    rep.rank_in = rank_of(pos + 1);
    rep.homology = static_cast<std::int64_t>(rep.slice_dim) - static_cast<std::int64_t>(rep.rank_out + rep.rank_in);
    rep.certified = rep.homology == 0;
    rep.homology_exact = rep.certified;
    if (!rep.certified && rep.dim <= ctx.opt.exact_limit && full_dim(cx, pos - 1, j) <= ctx.opt.exact_limit) {
        rep.method = "direct-exact";
        rep.rank_out = slice_rank_exact(cx.differential(pos), cx.n, j);
        rep.rank_in = pos + 1 <= ctx.length ? slice_rank_exact(cx.differential(pos + 1), cx.n, j) : 0;
        rep.homology = static_cast<std::int64_t>(rep.slice_dim) - static_cast<std::int64_t>(rep.rank_out + rep.rank_in);
        rep.homology_exact = true;
        rep.certified = rep.homology == 0;
    }
    return rep;
}

inline PositionReport reduced_position(ExactnessContext& ctx, int pos, int j) {
    const auto& cx = ctx.cx;
    const int vars = cx.n - cx.d - pos;
    PositionReport rep;
    rep.position = pos;
    rep.dim = full_dim(cx, pos, j);
    rep.variables = vars;
    rep.method = "reduced-mod-p";
    // targets from the alternating sums of slice dims above pos
    std::vector<std::int64_t> dims;
    for (int k = 0; k <= ctx.length; ++k) {
        const auto& f = cx.modules[static_cast<std::size_t>(k)];
        dims.push_back(static_cast<std::int64_t>(graded_free_dim(f.rank, f.twist, vars, j)));
    }
    std::int64_t above = 0;
    for (int k = ctx.length; k > pos; --k) above = dims[static_cast<std::size_t>(k)] - above;
    const std::int64_t target_in = above;
    const std::int64_t target_out = dims[static_cast<std::size_t>(pos)] - above;
    rep.slice_dim = static_cast<std::uint64_t>(dims[static_cast<std::size_t>(pos)]);
    for (int attempt = 0; attempt < ctx.opt.attempts; ++attempt) {
        const auto& pair = ctx.reduced_pair(pos, attempt);
        const std::size_t cap_out = target_out < 0 ? 0 : static_cast<std::size_t>(target_out);
        const std::size_t cap_in = target_in < 0 ? 0 : static_cast<std::size_t>(target_in);
        rep.rank_out = slice_rank_mod_p(pair[0], j, std::max<std::size_t>(cap_out, 1));
        rep.rank_in = pair.size() > 1 ? slice_rank_mod_p(pair[1], j, std::max<std::size_t>(cap_in, 1)) : 0;
        rep.homology = static_cast<std::int64_t>(rep.slice_dim) - static_cast<std::int64_t>(rep.rank_out + rep.rank_in);
        rep.certified = rep.homology == 0;
        if (rep.certified) break;
    }
    return rep;
}

}  // namespace detail

/// Degreewise exactness of F_. at every position i >= 1 and comparison of
/// coker [d_1]_j with the ideal, for j = 0..j_max.
///
/// A position is certified when rank_p [d_i]_j + rank_p [d_{i+1}]_j equals
/// the slice dimension: integral matrices have rank over Q at least their
/// rank mod p, and d d = 0 bounds the sum from above. The reduced method
/// first maps R onto a polynomial ring in n-d-i variables through d+i
/// independent linear forms; exactness there in all degrees <= j_max lifts
/// to R through the long exact sequences of multiplication by each form.
inline std::vector<GradedPieceReport> graded_exactness(const ChainComplex& cx, ExactnessOptions opt = {}) {
    if (opt.j_max < 0) opt.j_max = cx.max_twist_magnitude() + 3;
    detail::ExactnessContext ctx{cx, opt, static_cast<int>(cx.differentials.size()), {}, {}};
    IdealDimensionBound ideal(cx.generators, cx.n, cx.d, opt.j_max, mix_seed(opt.seed, cx.n, cx.d, -1, 0));

    std::vector<GradedPieceReport> reports(static_cast<std::size_t>(opt.j_max) + 1);
    auto run = [&](int j) {
        GradedPieceReport rep;
        rep.j = j;
        for (int i = 0; i <= ctx.length; ++i) rep.dims.push_back(detail::full_dim(cx, i, j));
        std::map<int, std::uint64_t> cache;
        for (int pos = 1; pos <= ctx.length; ++pos) {
            std::uint64_t largest = 0;
            for (int k = pos - 1; k <= std::min(pos + 1, ctx.length); ++k)
                largest = std::max(largest, detail::full_dim(cx, k, j));
            bool direct = opt.method == ExactnessMethod::Direct ||
                          (opt.method == ExactnessMethod::Auto && largest <= opt.direct_limit);
            PositionReport p;
            if (rep.dims[static_cast<std::size_t>(pos)] == 0) {
                p.position = pos;
                p.variables = cx.n;
                p.certified = true;
                p.homology_exact = true;
                p.method = "empty";
            } else if (direct) {
                p = detail::direct_position(ctx, pos, j, cache);
            } else {
                p = detail::reduced_position(ctx, pos, j);
            }
            rep.positions.push_back(p);
        }
        std::int64_t e = 0;
        for (int i = 0; i <= ctx.length; ++i)
            e += (i % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(rep.dims[static_cast<std::size_t>(i)]);
        rep.euler = e;
        const bool upper_ok = std::all_of(rep.positions.begin(), rep.positions.end(),
                                          [](const PositionReport& p) { return p.certified; });
        rep.ideal_lower_bound = ideal.artinian_lower_bound(j);
        rep.ideal_method = "artinian-mod-p";
        if (static_cast<std::int64_t>(rep.ideal_lower_bound) != e && ring_dim(cx.n, j) <= opt.direct_limit) {
            const std::uint64_t m = ideal.macaulay_lower_bound(j);
            if (m > rep.ideal_lower_bound) {
                rep.ideal_lower_bound = m;
                rep.ideal_method = "macaulay-mod-p";
            }
        }
        rep.position0_ok = upper_ok && static_cast<std::int64_t>(rep.ideal_lower_bound) == e;
        reports[static_cast<std::size_t>(j)] = std::move(rep);
    };

    const unsigned jobs = std::max(1u, opt.jobs);
    if (jobs == 1) {
        for (int j = 0; j <= opt.j_max; ++j) run(j);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < jobs; ++w)
            pool.emplace_back([&, w] {
                for (int j = opt.j_max - static_cast<int>(w); j >= 0; j -= static_cast<int>(jobs)) run(j);
            });
        for (auto& t : pool) t.join();
    }
    return reports;
}

/// dim_Q [I]_j as the exact rank of the Macaulay matrix {m f_T}.
inline std::uint64_t ideal_degree_dim(int n, int d, int j) {
    check_parameters(n, d);
    if (j < d) return 0;
    std::vector<Polynomial> gens;
    for (const auto& t : enumerate_syt(*hook_like_shape(n - d, d, 0))) gens.push_back(specht_polynomial(t));
    return macaulay_rank_exact(gens, n, j);
}

/// Hilbert function of R/I from the series against dim R_j - dim I_j, where
/// dim I_j is either the exact Macaulay rank or the certified value from an
/// exactness report (lower bound met by the complex's upper bound).
struct HilbertRow {
    int j = 0;
    mpz_class series;
    std::optional<std::uint64_t> measured;
    std::string method;
    bool agree() const { return measured && series == mpz_class(static_cast<unsigned long>(*measured)); }
};

inline std::vector<HilbertRow> hilbert_crosscheck(int n, int d, int j_max, const std::vector<GradedPieceReport>* reports,
                                                  std::uint64_t exact_limit = 1500) {
    const auto series = hilbert_series(n, d);
    std::vector<HilbertRow> rows;
    for (int j = 0; j <= j_max; ++j) {
        HilbertRow row;
        row.j = j;
        row.series = series.coefficient(j);
        const std::uint64_t total = ring_dim(n, j);
        if (total <= exact_limit) {
            row.measured = total - ideal_degree_dim(n, d, j);
            row.method = "macaulay-exact";
        } else if (reports && j < static_cast<int>(reports->size()) && (*reports)[static_cast<std::size_t>(j)].position0_ok) {
            row.measured = total - static_cast<std::uint64_t>((*reports)[static_cast<std::size_t>(j)].euler);
            row.method = "certified-bounds";
        }
        rows.push_back(row);
    }
    return rows;
}

/// Nonzero Betti numbers sit at j = d+i for i <= n-2d and j = d+i+1 beyond.
inline bool statement_star_check(const BettiTable& t) {
    for (const auto& [ij, beta] : t.entries) {
        if (beta == 0) continue;
        const auto [i, j] = ij;
        const int expected = i <= t.n - 2 * t.d ? t.d + i : t.d + i + 1;
        if (j != expected) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Branching filtration of the d-linear strand

enum class BoxClass { EndOfFirstRow, EndOfSecondRow, BottomOfFirstColumn };

inline BoxClass classify_box_n(const Tableau& t) {
    const int n = t.n();
    const auto& rows = t.rows();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].back() != n) continue;
        if (r == 0) return BoxClass::EndOfFirstRow;
        if (r == 1) return BoxClass::EndOfSecondRow;
        return BoxClass::BottomOfFirstColumn;
    }
    throw std::invalid_argument("n is not at the end of a row");
}

/// Removes the box holding n.
inline Tableau remove_largest(const Tableau& t) {
    auto rows = t.rows();
    for (auto& r : rows) {
        if (r.back() == t.n()) {
            r.pop_back();
            break;
        }
    }
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    return Tableau(std::move(rows));
}

/// Polynomial in x_1..x_{n-1} viewed in n variables.
inline Polynomial embed(const Polynomial& p, int n) {
    Polynomial out(n);
    for (const auto& [m, c] : p.terms()) {
        Monomial e = m;
        e.resize(static_cast<std::size_t>(n), 0);
        out.add_term(e, c);
    }
    return out;
}

struct FiltrationLevel {
    int i = 0;
    std::array<std::size_t, 3> class_sizes{};
    std::array<std::uint64_t, 3> branching_dims{};
    bool sizes_ok = false;
    bool u_closed = false;
    bool w_closed = false;
    bool u_closed_tabloids = false;
    bool w_closed_tabloids = false;
    std::optional<bool> u_block_matches;      // against (n-1, d), d_i
    std::optional<bool> quotient_matches;     // against (n-1, d), d_{i-1}
    std::optional<bool> middle_block_matches; // against (n-1, d-1), d_i

    bool ok() const {
        return sizes_ok && u_closed && w_closed && u_closed_tabloids && w_closed_tabloids &&
               u_block_matches.value_or(true) && quotient_matches.value_or(true) &&
               middle_block_matches.value_or(true);
    }
};

struct FiltrationReport {
    int n = 0, d = 0;
    std::vector<FiltrationLevel> levels;
    int truncation_index = 0;  // the (n-1, d-1) strand term with no counterpart
    bool ok() const {
        return std::all_of(levels.begin(), levels.end(), [](const FiltrationLevel& l) { return l.ok(); });
    }
};

namespace detail {

inline int class_index(BoxClass c) { return static_cast<int>(c); }

/// Largest row index that n may occupy in tabloids of U (0) or W (1).
inline bool tabloid_rows_bounded(const FreeElement& image, const SpechtBasis& target, int max_row) {
    const int n = target.shape().n();
    // collect the coefficient vector of each monomial separately
    std::map<Monomial, SpechtVector, GrlexGreater> by_monomial;
    for (const auto& [k, p] : image) {
        for (const auto& [m, c] : p.terms()) {
            auto it = by_monomial.try_emplace(m, SpechtVector{target.shape(), {}}).first;
            it->second.add(k, c);
        }
    }
    for (const auto& [m, v] : by_monomial) {
        const TabloidVector tv = to_tabloids(v, target);
        for (const auto& [key, c] : tv.coeffs()) {
            const int row = static_cast<int>((key >> (4 * (n - 1))) & 0xfu);
            if (row > max_row) return false;
        }
    }
    return true;
}

/// Compares a block of a differential with another differential through
/// T -> T minus n on both bases.
inline bool block_matches(const DifferentialMatrix& big, const SpechtBasis& big_src, const SpechtBasis& big_tgt,
                          BoxClass src_class, BoxClass tgt_class, const DifferentialMatrix& small,
                          const SpechtBasis& small_src, const SpechtBasis& small_tgt, int n) {
    std::map<std::pair<std::size_t, std::size_t>, Polynomial> expected;
    for (const auto& [rc, p] : small.entries) expected.emplace(rc, embed(p, n));
    std::map<std::pair<std::size_t, std::size_t>, Polynomial> found;
    for (const auto& [rc, p] : big.entries) {
        const Tableau& s = big_tgt[rc.first];
        const Tableau& t = big_src[rc.second];
        if (classify_box_n(s) != tgt_class || classify_box_n(t) != src_class) continue;
        const std::size_t r = small_tgt.index_of(remove_largest(s));
        const std::size_t c = small_src.index_of(remove_largest(t));
        if (r == SpechtBasis::npos || c == SpechtBasis::npos) return false;
        found.emplace(std::make_pair(r, c), p);
    }
    return found == expected;
}

}  // namespace detail

/// Position-of-n decomposition of the d-linear strand for n > 2d.
inline FiltrationReport filtration_check(const ChainComplex& cx) {
    const int n = cx.n, d = cx.d;
    if (n <= 2 * d) throw std::invalid_argument("filtration_check needs n > 2d");
    FiltrationReport rep;
    rep.n = n;
    rep.d = d;
    rep.truncation_index = n - 2 * d + 1;
    const ChainComplex smaller = build_complex(n - 1, d);
    std::optional<ChainComplex> lower_d;
    if (d >= 2) lower_d = build_complex(n - 1, d - 1);
    for (int i = 0; i <= n - 2 * d; ++i) {
        FiltrationLevel lvl;
        lvl.i = i;
        const auto& f = cx.modules[static_cast<std::size_t>(i)];
        for (const auto& t : f.basis->tableaux()) ++lvl.class_sizes[static_cast<std::size_t>(detail::class_index(classify_box_n(t)))];
        lvl.branching_dims = {dim_specht(hook_like_shape(n - d - i - 1, d, i)), dim_specht(hook_like_shape(n - d - i, d - 1, i)),
                              i >= 1 ? dim_specht(hook_like_shape(n - d - i, d, i - 1)) : 0};
        lvl.sizes_ok = true;
        for (std::size_t k = 0; k < 3; ++k)
            if (lvl.class_sizes[k] != lvl.branching_dims[k]) lvl.sizes_ok = false;
        lvl.u_closed = lvl.w_closed = lvl.u_closed_tabloids = lvl.w_closed_tabloids = true;
        if (i >= 1) {
            const auto& m = cx.differential(i);
            const auto& tgt = cx.modules[static_cast<std::size_t>(i - 1)];
            const auto cols = m.columns();
            for (std::size_t c = 0; c < cols.size(); ++c) {
                const BoxClass sc = classify_box_n((*f.basis)[c]);
                if (sc == BoxClass::BottomOfFirstColumn) continue;
                for (const auto& [r, p] : cols[c]) {
                    const BoxClass tc = classify_box_n((*tgt.basis)[r]);
                    if (sc == BoxClass::EndOfFirstRow && tc != BoxClass::EndOfFirstRow) lvl.u_closed = false;
                    if (tc == BoxClass::BottomOfFirstColumn) lvl.w_closed = false;
                }
                const int max_row = sc == BoxClass::EndOfFirstRow ? 0 : 1;
                if (!detail::tabloid_rows_bounded(cols[c], *tgt.basis, max_row)) {
                    if (sc == BoxClass::EndOfFirstRow) lvl.u_closed_tabloids = false;
                    else lvl.w_closed_tabloids = false;
                }
            }
            if (i <= n - 1 - 2 * d && lvl.class_sizes[0] > 0) {
                lvl.u_block_matches = detail::block_matches(
                    m, *f.basis, *tgt.basis, BoxClass::EndOfFirstRow, BoxClass::EndOfFirstRow, smaller.differential(i),
                    *smaller.modules[static_cast<std::size_t>(i)].basis,
                    *smaller.modules[static_cast<std::size_t>(i - 1)].basis, n);
            }
            if (i >= 2) {
                lvl.quotient_matches = detail::block_matches(
                    m, *f.basis, *tgt.basis, BoxClass::BottomOfFirstColumn, BoxClass::BottomOfFirstColumn,
                    smaller.differential(i - 1), *smaller.modules[static_cast<std::size_t>(i - 1)].basis,
                    *smaller.modules[static_cast<std::size_t>(i - 2)].basis, n);
            }
            if (lower_d) {
                lvl.middle_block_matches = detail::block_matches(
                    m, *f.basis, *tgt.basis, BoxClass::EndOfSecondRow, BoxClass::EndOfSecondRow, lower_d->differential(i),
                    *lower_d->modules[static_cast<std::size_t>(i)].basis,
                    *lower_d->modules[static_cast<std::size_t>(i - 1)].basis, n);
            }
        }
        rep.levels.push_back(lvl);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Vanishing on collapsed coordinates

struct PrimeIntersectionReport {
    int collapse_size = 0;
    std::size_t subsets_checked = 0;
    bool all_vanish = false;      // every generator vanishes on every collapse of collapse_size
    bool sharp = false;           // some collapse of collapse_size - 1 leaves a generator nonzero
};

/// p with x_f replaced by x_{min F} for every f in F, as a polynomial.
inline Polynomial collapse(const Polynomial& p, const std::vector<int>& subset) {
    Polynomial out(p.ambient());
    const std::size_t to = static_cast<std::size_t>(subset.front() - 1);
    for (const auto& [m, c] : p.terms()) {
        Monomial e = m;
        for (std::size_t k = 1; k < subset.size(); ++k) {
            const std::size_t f = static_cast<std::size_t>(subset[k] - 1);
            e[to] += e[f];
            e[f] = 0;
        }
        out.add_term(e, c);
    }
    return out;
}

/// Generators of shape lambda lie in every P_F with #F = lambda_1 + 1:
/// collapsing the variables of F to one variable kills each of them.
inline PrimeIntersectionReport prime_intersection_check(const Partition& shape) {
    const int n = shape.n();
    const int size = shape[0] + 1;
    std::vector<Polynomial> gens;
    for (const auto& t : enumerate_syt(shape)) gens.push_back(specht_polynomial(t));
    PrimeIntersectionReport rep;
    rep.collapse_size = size;
    // true when every generator vanishes for every subset of size k
    auto vanishes_on_all = [&](int k, std::size_t* count) {
        std::vector<bool> pick(static_cast<std::size_t>(n), false);
        std::fill(pick.begin(), pick.begin() + k, true);
        do {
            if (count) ++*count;
            std::vector<int> subset;
            for (int v = 0; v < n; ++v)
                if (pick[static_cast<std::size_t>(v)]) subset.push_back(v + 1);
            for (const auto& g : gens)
                if (!collapse(g, subset).is_zero()) return false;
        } while (std::prev_permutation(pick.begin(), pick.end()));
        return true;
    };
    rep.all_vanish = size <= n && vanishes_on_all(size, &rep.subsets_checked);
    rep.sharp = size - 1 >= 1 && !vanishes_on_all(size - 1, nullptr);
    return rep;
}

inline PrimeIntersectionReport prime_intersection_check(int n, int d) {
    check_parameters(n, d);
    return prime_intersection_check(*hook_like_shape(n - d, d, 0));
}

}  // namespace specht
