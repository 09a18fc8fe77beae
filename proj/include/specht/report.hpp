#pragma once

// Runs the verification suite on a built complex and collects a
// machine-readable report.

#include <string>
#include <vector>

#include "specht/io.hpp"
#include "specht/resolution.hpp"
#include "specht/verify.hpp"

namespace specht {

struct CheckOutcome {
    std::string name;
    bool passed = false;
    bool skipped = false;
    io::Json detail;
};

struct VerificationReport {
    int n = 0, d = 0, j_max = 0;
    std::vector<CheckOutcome> checks;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

namespace detail {

inline io::Json locations_json(const CheckResult& r) {
    io::Json out = io::Json::array();
    for (const auto& f : r.failures)
        out.push_back(io::Json{{"i", f.index}, {"row", f.row}, {"col", f.col}, {"detail", f.detail}});
    return out;
}

inline io::Json position_json(const PositionReport& p) {
    return io::Json{{"position", p.position},      {"method", p.method},       {"variables", p.variables},
                    {"dim", p.dim},                {"slice_dim", p.slice_dim}, {"rank_out", p.rank_out},
                    {"rank_in", p.rank_in},        {"homology", p.homology},   {"certified", p.certified}};
}

}  // namespace detail

inline VerificationReport verify_complex(const ChainComplex& cx, ExactnessOptions opt = {}) {
    using io::Json;
    VerificationReport rep;
    rep.n = cx.n;
    rep.d = cx.d;
    if (opt.j_max < 0) opt.j_max = cx.max_twist_magnitude() + 3;
    rep.j_max = opt.j_max;

    {
        const auto r = chain_complex_check(cx);
        rep.checks.push_back({"chain_complex", r.passed, false, Json{{"failures", detail::locations_json(r)}}});
    }
    {
        const auto r = minimality_check(cx);
        rep.checks.push_back({"minimality", r.passed, false, Json{{"failures", detail::locations_json(r)}}});
    }
    std::vector<GradedPieceReport> pieces;
    {
        pieces = graded_exactness(cx, opt);
        bool ok = true;
        Json failures = Json::array();
        Json degrees = Json::array();
        for (const auto& g : pieces) {
            Json positions = Json::array();
            for (const auto& p : g.positions) {
                positions.push_back(detail::position_json(p));
                if (!p.certified) failures.push_back(Json{{"i", p.position}, {"j", g.j}, {"position", p.position}, {"homology", p.homology}});
            }
            if (!g.position0_ok)
                failures.push_back(Json{{"i", 0}, {"j", g.j}, {"position", 0}, {"cokernel_dim", g.euler},
                                        {"ideal_lower_bound", g.ideal_lower_bound}});
            ok = ok && g.ok();
            degrees.push_back(Json{{"j", g.j},
                                   {"dims", g.dims},
                                   {"cokernel_dim", g.euler},
                                   {"ideal_lower_bound", g.ideal_lower_bound},
                                   {"ideal_method", g.ideal_method},
                                   {"position0_ok", g.position0_ok},
                                   {"positions", std::move(positions)}});
        }
        rep.checks.push_back({"graded_exactness", ok, false, Json{{"j_max", opt.j_max}, {"failures", failures}, {"degrees", degrees}}});
    }
    {
        const auto rows = hilbert_crosscheck(cx.n, cx.d, opt.j_max, &pieces);
        bool ok = true;
        Json out = Json::array();
        for (const auto& r : rows) {
            Json row{{"j", r.j}, {"series", io::integer_json(r.series)}};
            if (r.measured) {
                row["measured"] = *r.measured;
                row["method"] = r.method;
            }
            ok = ok && r.agree();
            out.push_back(std::move(row));
        }
        rep.checks.push_back({"hilbert", ok, false, Json{{"rows", out}}});
    }
    {
        const bool ok = euler_characteristic_check(cx) && euler_characteristic_check(cx.n, cx.d);
        Json rhs = Json::array();
        for (const auto& c : euler_rhs(cx.n, cx.d)) rhs.push_back(io::integer_json(c));
        rep.checks.push_back({"euler_characteristic", ok, false, Json{{"alternating_betti_polynomial", rhs}}});
    }
    {
        const bool ok = betti_alternating_sum_check(cx.n, cx.d);
        Json rows = Json::array();
        for (const auto& r : closed_form_table(cx.n, cx.d))
            rows.push_back(Json{{"i", r.i}, {"closed_form", io::integer_json(r.closed)}, {"agree", r.agree()}});
        rep.checks.push_back({"betti_closed_forms", ok, false, Json{{"rows", rows}}});
    }
    {
        const auto table = betti_table(cx);
        rep.checks.push_back({"betti_placement", statement_star_check(table), false, io::betti_json(table)});
    }
    if (cx.n > 2 * cx.d) {
        const auto f = filtration_check(cx);
        Json levels = Json::array();
        for (const auto& l : f.levels) {
            Json lv{{"i", l.i},
                    {"class_sizes", l.class_sizes},
                    {"branching_dims", l.branching_dims},
                    {"sizes_ok", l.sizes_ok},
                    {"u_closed", l.u_closed && l.u_closed_tabloids},
                    {"w_closed", l.w_closed && l.w_closed_tabloids}};
            if (l.u_block_matches) lv["u_block_matches"] = *l.u_block_matches;
            if (l.quotient_matches) lv["quotient_matches"] = *l.quotient_matches;
            if (l.middle_block_matches) lv["middle_block_matches"] = *l.middle_block_matches;
            levels.push_back(std::move(lv));
        }
        rep.checks.push_back({"filtration", f.ok(), false, Json{{"levels", levels}, {"truncation_index", f.truncation_index}}});
    } else {
        rep.checks.push_back({"filtration", true, true, Json{{"reason", "requires n > 2d"}}});
    }
    {
        const auto p = prime_intersection_check(cx.n, cx.d);
        rep.checks.push_back({"prime_intersection", p.all_vanish && p.sharp, false,
                              Json{{"collapse_size", p.collapse_size}, {"subsets", p.subsets_checked}, {"sharp", p.sharp}}});
    }
    return rep;
}

inline io::Json report_json(const VerificationReport& r) {
    io::Json checks = io::Json::array();
    for (const auto& c : r.checks)
        checks.push_back(io::Json{{"name", c.name}, {"passed", c.passed}, {"skipped", c.skipped}, {"detail", c.detail}});
    return io::Json{{"n", r.n}, {"d", r.d}, {"j_max", r.j_max}, {"passed", r.passed()}, {"checks", std::move(checks)}};
}

inline std::string report_csv(const VerificationReport& r) {
    std::string out = "check,status\n";
    for (const auto& c : r.checks) out += c.name + "," + (c.skipped ? "skipped" : c.passed ? "pass" : "fail") + "\n";
    return out;
}

inline std::string report_text(const VerificationReport& r) {
    std::ostringstream os;
    os << "verify (n,d) = (" << r.n << ',' << r.d << "), degrees j <= " << r.j_max << '\n';
    for (const auto& c : r.checks) {
        os << (c.skipped ? "SKIP " : c.passed ? "PASS " : "FAIL ") << c.name;
        if (c.detail.contains("failures") && !c.detail["failures"].empty()) {
            os << "  first failure:";
            for (const auto& [k, v] : c.detail["failures"][0].items())
                if (k != "detail") os << ' ' << k << '=' << v.dump();
        }
        if (c.skipped) os << "  (" << c.detail["reason"].get<std::string>() << ')';
        os << '\n';
    }
    os << (r.passed() ? "all checks passed" : "verification FAILED") << '\n';
    return os.str();
}

}  // namespace specht
