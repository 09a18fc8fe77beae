#pragma once

// JSON, CSV and plain-text renderings of complexes, Betti tables and
// Hilbert series.

#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"
#include "specht/resolution.hpp"
#include "specht/verify.hpp"

namespace specht::io {

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv, Text };

inline Format parse_format(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    if (s == "text") return Format::Text;
    throw std::invalid_argument("unknown format: " + s);
}

/// Integers that fit in a long become JSON numbers; larger ones become strings.
inline Json integer_json(const mpz_class& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

inline Json polynomial_json(const Polynomial& p) {
    Json terms = Json::array();
    for (const auto& t : p.serialize())
        terms.push_back(Json{{"num", integer_json(t.num)}, {"den", integer_json(t.den)}, {"exps", t.exps}});
    return terms;
}

inline Json tableau_json(const Tableau& t) { return t.rows(); }

inline Json complex_json(const ChainComplex& cx) {
    Json j;
    j["n"] = cx.n;
    j["d"] = cx.d;
    Json mods = Json::array();
    for (const auto& f : cx.modules) {
        Json basis = Json::array();
        for (const auto& t : f.basis->tableaux()) basis.push_back(tableau_json(t));
        mods.push_back(Json{{"index", f.index}, {"shape", f.shape.parts()}, {"twist", f.twist}, {"rank", f.rank},
                            {"basis", std::move(basis)}});
    }
    j["modules"] = std::move(mods);
    Json diffs = Json::array();
    for (const auto& m : cx.differentials) {
        Json entries = Json::array();
        for (const auto& [rc, p] : m.entries)
            entries.push_back(Json{{"row", rc.first}, {"col", rc.second}, {"poly", polynomial_json(p)}});
        diffs.push_back(Json{{"index", m.index}, {"entries", std::move(entries)}});
    }
    j["differentials"] = std::move(diffs);
    Json gens = Json::array();
    for (const auto& g : cx.generators) gens.push_back(polynomial_json(g));
    j["generators"] = std::move(gens);
    return j;
}

inline std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string complex_csv(const ChainComplex& cx) {
    std::ostringstream os;
    os << "index,row,col,poly\n";
    for (const auto& m : cx.differentials)
        for (const auto& [rc, p] : m.entries) os << m.index << ',' << rc.first << ',' << rc.second << ',' << csv_quote(p.to_string()) << '\n';
    return os.str();
}

inline std::string complex_text(const ChainComplex& cx) {
    std::ostringstream os;
    os << "F^(" << cx.n - cx.d << ',' << cx.d << "), length " << cx.differentials.size() << '\n';
    for (const auto& f : cx.modules)
        os << "F_" << f.index << " = V" << f.shape.to_string() << " (x) R(" << f.twist << "), rank " << f.rank << '\n';
    for (const auto& m : cx.differentials) {
        os << "\nd_" << m.index << ": " << m.cols << " -> " << m.rows << ", " << m.entries.size() << " nonzero entries\n";
        const auto& src = *cx.modules[static_cast<std::size_t>(m.index)].basis;
        const auto& tgt = *cx.modules[static_cast<std::size_t>(m.index - 1)].basis;
        const auto cols = m.columns();
        for (std::size_t c = 0; c < cols.size(); ++c) {
            os << "  e" << src[c].to_string() << " ->";
            bool first = true;
            for (const auto& [r, p] : cols[c]) {
                os << (first ? " " : " + ") << '(' << p.to_string() << ") e" << tgt[r].to_string();
                first = false;
            }
            if (first) os << " 0";
            os << '\n';
        }
    }
    os << "\nd_0:\n";
    for (std::size_t k = 0; k < cx.generators.size(); ++k)
        os << "  e" << (*cx.modules[0].basis)[k].to_string() << " -> " << cx.generators[k].to_string() << '\n';
    return os.str();
}

inline Json betti_json(const BettiTable& t) {
    Json rows = Json::array();
    for (const auto& [ij, beta] : t.entries) rows.push_back(Json{{"i", ij.first}, {"j", ij.second}, {"beta", beta}});
    return Json{{"n", t.n}, {"d", t.d}, {"betti", std::move(rows)}};
}

inline std::string betti_csv(const BettiTable& t) {
    std::ostringstream os;
    os << "i,j,beta\n";
    for (const auto& [ij, beta] : t.entries) os << ij.first << ',' << ij.second << ',' << beta << '\n';
    return os.str();
}

/// Strand layout: column i, row j - i.
inline std::string betti_text(const BettiTable& t) {
    int max_i = 0, min_s = 1 << 30, max_s = -1;
    for (const auto& [ij, beta] : t.entries) {
        max_i = std::max(max_i, ij.first);
        min_s = std::min(min_s, ij.second - ij.first);
        max_s = std::max(max_s, ij.second - ij.first);
    }
    std::size_t w = 5;
    for (const auto& [ij, beta] : t.entries) w = std::max(w, std::to_string(beta).size() + 1);
    std::ostringstream os;
    os << "Betti table of the Specht ideal of shape (" << t.n - t.d << ',' << t.d << ")\n";
    os << std::setw(6) << "i:";
    for (int i = 0; i <= max_i; ++i) os << std::setw(static_cast<int>(w)) << i;
    os << '\n';
    for (int s = min_s; s <= max_s; ++s) {
        os << std::setw(5) << s << ':';
        for (int i = 0; i <= max_i; ++i) {
            const auto b = t.at(i, i + s);
            os << std::setw(static_cast<int>(w)) << (b == 0 ? std::string("-") : std::to_string(b));
        }
        os << '\n';
    }
    return os.str();
}

struct HilbertListing {
    int n = 0, d = 0;
    HilbertSeries series;
    std::vector<HilbertRow> rows;
    bool agree() const {
        for (const auto& r : rows)
            if (r.measured && !r.agree()) return false;
        return true;
    }
};

inline Json hilbert_json(const HilbertListing& h) {
    Json num = Json::array();
    for (const auto& c : h.series.numerator) num.push_back(integer_json(c));
    Json coeffs = Json::array();
    for (const auto& r : h.rows) {
        Json row{{"j", r.j}, {"coefficient", integer_json(r.series)}};
        if (r.measured) {
            row["oracle"] = *r.measured;
            row["oracle_method"] = r.method;
        }
        coeffs.push_back(std::move(row));
    }
    return Json{{"n", h.n}, {"d", h.d}, {"numerator", std::move(num)},
                {"denominator_exponent", h.series.denominator_exponent}, {"regularity", h.series.top_degree()},
                {"coefficients", std::move(coeffs)}, {"oracle_agrees", h.agree()}};
}

inline std::string hilbert_csv(const HilbertListing& h) {
    std::ostringstream os;
    os << "j,coefficient,oracle\n";
    for (const auto& r : h.rows) {
        os << r.j << ',' << r.series.get_str() << ',';
        if (r.measured) os << *r.measured;
        os << '\n';
    }
    return os.str();
}

inline std::string hilbert_text(const HilbertListing& h) {
    std::ostringstream os;
    os << "H(R/I, t) = (";
    bool first = true;
    for (std::size_t k = 0; k < h.series.numerator.size(); ++k) {
        const auto& c = h.series.numerator[k];
        if (c == 0) continue;
        os << (first ? "" : " + ");
        if (k == 0 || c != 1) os << c.get_str() << (k >= 1 ? " " : "");
        if (k >= 1) os << 't';
        if (k >= 2) os << '^' << k;
        first = false;
    }
    os << ") / (1 - t)^" << h.series.denominator_exponent << '\n';
    os << "numerator: ";
    for (std::size_t k = 0; k < h.series.numerator.size(); ++k) os << (k ? "," : "") << h.series.numerator[k].get_str();
    os << "\ndenominator exponent: " << h.series.denominator_exponent << '\n';
    os << "regularity of R/I: " << h.series.top_degree() << '\n';
    for (const auto& r : h.rows) {
        os << "  j=" << r.j << "  " << r.series.get_str();
        if (r.measured) os << "  oracle " << *r.measured << " (" << r.method << ")" << (r.agree() ? "" : "  MISMATCH");
        os << '\n';
    }
    return os.str();
}

}  // namespace specht::io
