#pragma once

// Sparse polynomials over Q in x_1..x_n.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "specht/combinatorics.hpp"

namespace specht {

/// Exponent vector of length n.
using Monomial = std::vector<int>;

inline int total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

/// Graded lex with x_1 > x_2 > ... > x_n; comparator sorts greatest first.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const int da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        return a > b;
    }
};

inline Monomial monomial_product(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size()) throw std::invalid_argument("ambient mismatch");
    Monomial m(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) m[k] = a[k] + b[k];
    return m;
}

/// One serialized term: numerator, denominator, exponents.
struct Term {
    mpz_class num;
    mpz_class den;
    Monomial exps;
};

class Polynomial {
public:
    using TermMap = std::map<Monomial, mpq_class, GrlexGreater>;

    Polynomial() = default;
    explicit Polynomial(int n) : n_(n) {}

    static Polynomial constant(int n, const mpq_class& c) {
        Polynomial p(n);
        if (c != 0) p.terms_.emplace(Monomial(static_cast<std::size_t>(n), 0), c);
        return p;
    }

    /// x_i, 1-based.
    static Polynomial variable(int n, int i) {
        if (i < 1 || i > n) throw std::out_of_range("variable index");
        Monomial m(static_cast<std::size_t>(n), 0);
        m[static_cast<std::size_t>(i - 1)] = 1;
        return monomial(m);
    }

    static Polynomial monomial(const Monomial& m, const mpq_class& c = 1) {
        Polynomial p(static_cast<int>(m.size()));
        if (c != 0) p.terms_.emplace(m, c);
        return p;
    }

    int ambient() const noexcept { return n_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Degree of the leading term; -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : total_degree(terms_.begin()->first); }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        const int d = degree();
        return std::all_of(terms_.begin(), terms_.end(),
                           [d](const auto& t) { return total_degree(t.first) == d; });
    }

    mpq_class constant_term() const {
        auto it = terms_.find(Monomial(static_cast<std::size_t>(n_), 0));
        return it == terms_.end() ? mpq_class(0) : it->second;
    }

    mpq_class coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? mpq_class(0) : it->second;
    }

    void add_term(const Monomial& m, const mpq_class& c) {
        if (static_cast<int>(m.size()) != n_) throw std::invalid_argument("ambient mismatch");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_ambient(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        check_ambient(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    Polynomial& operator*=(const mpq_class& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& t : terms_) t.second *= s;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const mpq_class& s) { return a *= s; }
    friend Polynomial operator-(Polynomial a) { return a *= mpq_class(-1); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_ambient(b);
        Polynomial r(a.n_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(monomial_product(ma, mb), ca * cb);
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    /// Exact evaluation; values[k] is the value of x_{k+1}.
    mpq_class substitute(const std::vector<mpq_class>& values) const {
        if (static_cast<int>(values.size()) != n_) throw std::invalid_argument("assignment size");
        mpq_class total = 0;
        for (const auto& [m, c] : terms_) {
            mpq_class v = c;
            for (std::size_t k = 0; k < m.size(); ++k)
                for (int e = 0; e < m[k]; ++e) v *= values[k];
            total += v;
        }
        return total;
    }

    /// Canonical term list (graded lex, greatest first).
    std::vector<Term> serialize() const {
        std::vector<Term> out;
        for (const auto& [m, c] : terms_) out.push_back({c.get_num(), c.get_den(), m});
        return out;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            std::string cs = c.get_str();
            if (!first) s += (c < 0) ? " - " : " + ";
            else if (c < 0) s += "-";
            if (c < 0) cs = mpq_class(-c).get_str();
            std::string mono;
            for (std::size_t k = 0; k < m.size(); ++k) {
                if (m[k] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += "x" + std::to_string(k + 1);
                if (m[k] > 1) mono += "^" + std::to_string(m[k]);
            }
            if (mono.empty()) s += cs;
            else if (cs == "1") s += mono;
            else s += cs + "*" + mono;
            first = false;
        }
        return s;
    }

private:
    void check_ambient(const Polynomial& o) const {
        if (o.n_ != n_) throw std::invalid_argument("ambient mismatch");
    }

    int n_ = 0;
    TermMap terms_;
};

/// x_i - x_j
inline Polynomial difference(int n, int i, int j) {
    return Polynomial::variable(n, i) - Polynomial::variable(n, j);
}

/// All monomials of total degree j in n variables, graded lex order.
inline std::vector<Monomial> graded_piece_basis(int n, int j) {
    if (j < 0) return {};
    std::vector<Monomial> out;
    Monomial cur(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int var, int remaining) {
        if (var == n - 1) {
            cur[static_cast<std::size_t>(var)] = remaining;
            out.push_back(cur);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            cur[static_cast<std::size_t>(var)] = e;
            rec(var + 1, remaining - e);
        }
        cur[static_cast<std::size_t>(var)] = 0;
    };
    if (n == 0) {
        if (j == 0) out.push_back({});
        return out;
    }
    rec(0, j);
    return out;
}

/// Index of a monomial inside graded_piece_basis(n, deg m), without building it.
class MonomialRanker {
public:
    MonomialRanker(int n, int max_degree) : n_(n), count_(static_cast<std::size_t>(n) + 1) {
        for (int vars = 0; vars <= n; ++vars) {
            auto& row = count_[static_cast<std::size_t>(vars)];
            row.resize(static_cast<std::size_t>(max_degree) + 1);
            for (int s = 0; s <= max_degree; ++s)
                row[static_cast<std::size_t>(s)] =
                    vars == 0 ? (s == 0 ? 1 : 0) : binomial_size(s + vars - 1, vars - 1);
        }
    }

    /// Number of monomials of degree s in `vars` variables.
    std::size_t count(int vars, int s) const {
        if (s < 0) return 0;
        return count_[static_cast<std::size_t>(vars)].at(static_cast<std::size_t>(s));
    }

    std::size_t rank(const int* exps) const {
        int remaining = 0;
        for (int k = 0; k < n_; ++k) remaining += exps[k];
        std::size_t idx = 0;
        for (int k = 0; k < n_ - 1; ++k) {
            // monomials sharing the prefix with a larger exponent at position k
            for (int t = exps[k] + 1; t <= remaining; ++t) idx += count(n_ - k - 1, remaining - t);
            remaining -= exps[k];
        }
        return idx;
    }

    std::size_t rank(const Monomial& m) const { return rank(m.data()); }

private:
    int n_;
    std::vector<std::vector<std::size_t>> count_;
};

/// x_i -> x_{sigma(i)}
inline Polynomial act_permutation(const Permutation& sigma, const Polynomial& p) {
    if (sigma.n() != p.ambient()) throw std::invalid_argument("permutation size mismatch");
    Polynomial r(p.ambient());
    for (const auto& [m, c] : p.terms()) {
        Monomial img(m.size(), 0);
        for (std::size_t k = 0; k < m.size(); ++k)
            img[static_cast<std::size_t>(sigma(static_cast<int>(k) + 1) - 1)] = m[k];
        r.add_term(img, c);
    }
    return r;
}

}  // namespace specht
