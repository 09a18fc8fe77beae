// specht_res: build, export and verify the resolution F^(n-d,d).

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "specht/io.hpp"
#include "specht/report.hpp"
#include "specht/resolution.hpp"
#include "specht/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;

struct RunConfig {
    int n = 0;
    int d = 0;
    std::optional<int> j_max;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    std::string format;
    std::string out;
    std::string method = "auto";
    std::optional<int> inject_fault;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void add_common(CLI::App* cmd, RunConfig& cfg, const std::string& default_format) {
    cfg.format = default_format;
    cmd->add_option("--n", cfg.n, "number of variables")->required();
    cmd->add_option("--d", cfg.d, "length of the second row")->required();
    cmd->add_option("--j-max", cfg.j_max, "largest internal degree examined");
    cmd->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    cmd->add_option("--out", cfg.out, "write output to this file instead of stdout");
}

void validate(const RunConfig& cfg) {
    try {
        specht::check_parameters(cfg.n, cfg.d);
    } catch (const std::invalid_argument& e) {
        throw UsageError("invalid (n,d) = (" + std::to_string(cfg.n) + "," + std::to_string(cfg.d) + "): " + e.what());
    }
    if (cfg.j_max && *cfg.j_max < cfg.d) throw UsageError("--j-max must be at least d");
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + cfg.out);
    f << text;
    if (!f) throw std::runtime_error("write failed: " + cfg.out);
}

std::string dump(const specht::io::Json& j) { return j.dump(2) + "\n"; }

int default_j_max(int n, int d) {
    int m = 0;
    for (int i = 0; i <= specht::complex_length(n, d); ++i) m = std::max(m, -specht::module_twist(n, d, i));
    return m + 3;
}

int cmd_betti(const RunConfig& cfg) {
    const auto t = specht::betti_table(cfg.n, cfg.d);
    switch (specht::io::parse_format(cfg.format)) {
        case specht::io::Format::Json: emit(cfg, dump(specht::io::betti_json(t))); break;
        case specht::io::Format::Csv: emit(cfg, specht::io::betti_csv(t)); break;
        case specht::io::Format::Text: emit(cfg, specht::io::betti_text(t)); break;
    }
    return kOk;
}

int cmd_build(const RunConfig& cfg) {
    const auto cx = specht::build_complex(cfg.n, cfg.d, cfg.jobs);
    switch (specht::io::parse_format(cfg.format)) {
        case specht::io::Format::Json: emit(cfg, dump(specht::io::complex_json(cx))); break;
        case specht::io::Format::Csv: emit(cfg, specht::io::complex_csv(cx)); break;
        case specht::io::Format::Text: emit(cfg, specht::io::complex_text(cx)); break;
    }
    return kOk;
}

int cmd_verify(const RunConfig& cfg) {
    auto cx = specht::build_complex(cfg.n, cfg.d, cfg.jobs);
    if (cfg.inject_fault) {
        if (*cfg.inject_fault < 1 || *cfg.inject_fault > static_cast<int>(cx.differentials.size()))
            throw UsageError("--inject-fault index out of range");
        specht::inject_sign_fault(cx, *cfg.inject_fault);
    }
    specht::ExactnessOptions opt;
    opt.j_max = cfg.j_max.value_or(-1);
    opt.jobs = cfg.jobs;
    if (cfg.method == "direct") opt.method = specht::ExactnessMethod::Direct;
    else if (cfg.method == "reduced") opt.method = specht::ExactnessMethod::Reduced;
    const auto rep = specht::verify_complex(cx, opt);
    switch (specht::io::parse_format(cfg.format)) {
        case specht::io::Format::Json: emit(cfg, dump(specht::report_json(rep))); break;
        case specht::io::Format::Csv: emit(cfg, specht::report_csv(rep)); break;
        case specht::io::Format::Text: emit(cfg, specht::report_text(rep)); break;
    }
    return rep.passed() ? kOk : kVerificationFailed;
}

int cmd_hilbert(const RunConfig& cfg) {
    specht::io::HilbertListing h;
    h.n = cfg.n;
    h.d = cfg.d;
    h.series = specht::hilbert_series(cfg.n, cfg.d);
    h.rows = specht::hilbert_crosscheck(cfg.n, cfg.d, cfg.j_max.value_or(default_j_max(cfg.n, cfg.d)), nullptr);
    switch (specht::io::parse_format(cfg.format)) {
        case specht::io::Format::Json: emit(cfg, dump(specht::io::hilbert_json(h))); break;
        case specht::io::Format::Csv: emit(cfg, specht::io::hilbert_csv(h)); break;
        case specht::io::Format::Text: emit(cfg, specht::io::hilbert_text(h)); break;
    }
    return h.agree() ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimal free resolutions of Specht ideals of shape (n-d,d)"};
    app.require_subcommand(1);
    RunConfig betti, build, verify, hilbert;
    auto* c_betti = app.add_subcommand("betti", "print the graded Betti table");
    add_common(c_betti, betti, "text");
    auto* c_build = app.add_subcommand("build", "build the complex and export its differentials");
    add_common(c_build, build, "json");
    auto* c_verify = app.add_subcommand("verify", "run the verification suite");
    add_common(c_verify, verify, "text");
    c_verify->add_option("--method", verify.method, "rank certificate for exactness")
        ->check(CLI::IsMember({"auto", "direct", "reduced"}))
        ->capture_default_str();
    c_verify->add_option("--inject-fault", verify.inject_fault, "negate one entry of d_I before verifying")
        ->group("");
    auto* c_hilbert = app.add_subcommand("hilbert", "print the Hilbert series of R/I");
    add_common(c_hilbert, hilbert, "text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (c_betti->parsed()) return validate(betti), cmd_betti(betti);
        if (c_build->parsed()) return validate(build), cmd_build(build);
        if (c_verify->parsed()) return validate(verify), cmd_verify(verify);
        if (c_hilbert->parsed()) return validate(hilbert), cmd_hilbert(hilbert);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kVerificationFailed;
    }
    return kUsage;
}
