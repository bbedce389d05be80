// golden-pascal: exact verification and spectral analysis of the binomial
// matrix R = (C(i-1, n-j)) over Q(√5).

#include <cstddef>
#include <exception>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "golden/golden.hpp"
#include "golden/render.hpp"

namespace {

struct CliConfig {
    std::size_t n_min = 1;
    std::size_t n_max = 1;
    unsigned long m = 0;
    golden::Format format = golden::Format::pretty;
    std::optional<std::string> out_path;
    std::string corrupt;  // test hook: "phi" or "psi"
};

// "--n A" or "--n A..B", both ends >= 1, A <= B.
bool parse_range(const std::string& text, std::size_t& lo, std::size_t& hi) {
    const auto dots = text.find("..");
    const std::string lo_s = dots == std::string::npos ? text : text.substr(0, dots);
    const std::string hi_s = dots == std::string::npos ? text : text.substr(dots + 2);
    if (lo_s.empty() || hi_s.empty()) return false;
    for (char c : lo_s + hi_s) {
        if (c < '0' || c > '9') return false;
    }
    try {
        lo = std::stoull(lo_s);
        hi = std::stoull(hi_s);
    } catch (const std::exception&) {
        return false;
    }
    return lo >= 1 && lo <= hi;
}

bool parse_format(const std::string& text, golden::Format& f) {
    if (text == "pretty") {
        f = golden::Format::pretty;
    } else if (text == "json") {
        f = golden::Format::json;
    } else if (text == "csv") {
        f = golden::Format::csv;
    } else {
        return false;
    }
    return true;
}

golden::Constants constants_for(const CliConfig& cfg) {
    golden::Constants k;
    if (cfg.corrupt == "phi") {
        k.phi += golden::GoldenNumber(1);
    } else if (cfg.corrupt == "psi") {
        k.psi += golden::GoldenNumber(1);
    }
    return k;
}

int run_verify(const CliConfig& cfg, std::ostream& out) {
    const golden::Constants k = constants_for(cfg);

    // Orders are independent; verify them concurrently and emit the buffered
    // reports in ascending n regardless of completion order.
    std::vector<std::future<std::pair<bool, std::string>>> futures;
    for (std::size_t n = cfg.n_min; n <= cfg.n_max; ++n) {
        futures.push_back(std::async(std::launch::async, [n, &cfg, &k] {
            const golden::CheckReport rep = golden::verify_order(n, k);
            return std::make_pair(rep.pass, golden::render_verify(rep, cfg.format));
        }));
    }
    if (cfg.format == golden::Format::csv) out << golden::verify_csv_header();
    bool all_pass = true;
    for (auto& f : futures) {
        auto [pass, text] = f.get();
        all_pass = all_pass && pass;
        out << text;
    }
    return all_pass ? 0 : 1;
}

int run_identities(const CliConfig& cfg, std::ostream& out) {
    const golden::CheckReport rep = golden::verify_ring_identities(constants_for(cfg));
    if (cfg.format == golden::Format::csv) out << golden::identities_csv_header();
    out << golden::render_identities(rep, cfg.format);
    return rep.pass ? 0 : 1;
}

int run_spectrum(const CliConfig& cfg, std::ostream& out) {
    if (cfg.format == golden::Format::csv) out << golden::spectrum_csv_header(cfg.n_min);
    out << golden::render_spectrum(cfg.n_min, cfg.format);
    return 0;
}

int run_power(const CliConfig& cfg, std::ostream& out) {
    out << golden::render_power(cfg.n_min, cfg.m, cfg.format);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact golden-ratio spectral toolkit for the binomial matrix R"};
    app.require_subcommand(1);

    std::string n_arg, format_arg = "pretty", out_arg, corrupt_arg;
    unsigned long m_arg = 0;
    bool have_m = false;

    auto add_common = [&](CLI::App* cmd, bool needs_n) {
        if (needs_n) cmd->add_option("--n", n_arg, "matrix order, A or A..B")->required();
        cmd->add_option("--format", format_arg, "output format: pretty|json|csv");
        cmd->add_option("--out", out_arg, "write the report stream to this file");
    };

    CLI::App* verify = app.add_subcommand(
        "verify", "check the eigenstructure identities for a range of orders");
    add_common(verify, true);
    verify->add_option("--corrupt", corrupt_arg, "corrupt a constant (testing only)")
        ->check(CLI::IsMember({"phi", "psi"}))
        ->group("");

    CLI::App* spectrum =
        app.add_subcommand("spectrum", "print exact eigenvalues and eigenvectors");
    add_common(spectrum, true);

    CLI::App* power = app.add_subcommand("power", "compute R^m via the decomposition");
    add_common(power, true);
    power->add_option("--m", m_arg, "exponent (nonnegative)")->required();

    CLI::App* identities =
        app.add_subcommand("identities", "check the defining identities of the golden ring");
    add_common(identities, false);
    identities->add_option("--corrupt", corrupt_arg, "corrupt a constant (testing only)")
        ->check(CLI::IsMember({"phi", "psi"}))
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    have_m = power->parsed();

    CliConfig cfg;
    cfg.corrupt = corrupt_arg;
    cfg.m = m_arg;
    if (!parse_format(format_arg, cfg.format)) {
        std::cerr << "error: --format must be pretty, json or csv\n";
        return 2;
    }
    if (!out_arg.empty()) cfg.out_path = out_arg;

    const bool needs_n = !identities->parsed();
    if (needs_n) {
        if (!parse_range(n_arg, cfg.n_min, cfg.n_max)) {
            std::cerr << "error: --n expects A or A..B with 1 <= A <= B\n";
            return 2;
        }
        if ((spectrum->parsed() || power->parsed()) && cfg.n_min != cfg.n_max) {
            std::cerr << "error: this command expects a single order, not a range\n";
            return 2;
        }
    }
    (void)have_m;

    std::ofstream file;
    if (cfg.out_path) {
        file.open(*cfg.out_path);
        if (!file) {
            std::cerr << "error: cannot open output file '" << *cfg.out_path << "'\n";
            return 2;
        }
    }
    std::ostream& out = cfg.out_path ? static_cast<std::ostream&>(file) : std::cout;

    try {
        if (verify->parsed()) return run_verify(cfg, out);
        if (spectrum->parsed()) return run_spectrum(cfg, out);
        if (power->parsed()) return run_power(cfg, out);
        return run_identities(cfg, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
