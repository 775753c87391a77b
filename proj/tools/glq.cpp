// glq: character degree tables, self-checks and divisibility sweeps for GL(n, q).
//
// Exit codes: 0 success, 1 verification failure, 2 usage, 3 I/O, 4 internal assertion.

#include "glq/all.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitInternal = 4;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

unsigned thread_budget() {
    const char* env = std::getenv("GLQ_THREADS");
    if (env == nullptr || *env == '\0') return std::max(1U, std::thread::hardware_concurrency());
    try {
        std::size_t used = 0;
        const long v = std::stol(env, &used);
        if (used != std::string(env).size() || v < 1) throw std::invalid_argument(env);
        return static_cast<unsigned>(v);
    } catch (const std::exception&) {
        throw UsageError(std::string("GLQ_THREADS must be a positive integer, got '") + env + "'");
    }
}

int cmd_degrees(int n, std::int64_t q, bool factored) {
    if (n < 1) throw UsageError("--n must be at least 1");
    if (!glq::is_prime_power(q)) throw UsageError("--q must be a prime power");
    const glq::LabelSpace space(n, q);
    std::cout << (factored ? "profile\tmultiplicity\ta_mu\tb_mu\td_mu\n" : "profile\tmultiplicity\td_mu\n");
    glq::BigInt sum_sq = 0;
    for (std::size_t i = 0; i < space.profiles.size(); ++i) {
        const auto f = glq::degree(space.profiles[i], q);
        sum_sq += space.multiplicity[i] * f.d_mu * f.d_mu;
        std::cout << space.profiles[i].descriptor() << '\t' << space.multiplicity[i];
        if (factored) std::cout << '\t' << f.a_mu << '\t' << f.b_mu;
        std::cout << '\t' << f.d_mu << '\n';
    }
    std::cout << "# profiles=" << space.profiles.size() << " characters=" << space.total
              << " sum_mult_d2=" << sum_sq << '\n';
    return kExitOk;
}

int cmd_verify(const std::string& suite) {
    const auto& names = glq::verify_suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end())
        throw UsageError("unknown suite '" + suite + "' (expected partitions, valuations, degrees, voltas or all)");
    const glq::VerifyOutcome o = glq::run_verify_suite(suite);
    if (!o.ok) {
        std::cerr << "FAIL " << suite << ": " << o.first_failure << '\n';
        return kExitVerifyFailed;
    }
    std::cout << "ok " << suite << " (" << o.checks << " checks)\n";
    return kExitOk;
}

struct SweepFlags {
    std::optional<std::string> config;
    std::vector<std::string> q, d, n, n0, kind;
    std::optional<std::string> format;
    std::optional<std::string> out;
};

int cmd_sweep(const SweepFlags& flags) {
    glq::SweepConfig cfg;
    try {
        if (flags.config) {
            std::ifstream in(*flags.config);
            if (!in) throw IoError("cannot read config '" + *flags.config + "'");
            std::stringstream buf;
            buf << in.rdbuf();
            cfg = glq::parse_config_text(buf.str());
        }
        for (const auto& v : flags.q) glq::apply_config_entry(cfg, "q", v);
        for (const auto& v : flags.d) glq::apply_config_entry(cfg, "d", v);
        for (const auto& v : flags.n) glq::apply_config_entry(cfg, "n", v);
        for (const auto& v : flags.n0) glq::apply_config_entry(cfg, "n0", v);
        for (const auto& v : flags.kind) glq::apply_config_entry(cfg, "kind", v);
        if (flags.format) glq::apply_config_entry(cfg, "format", *flags.format);
        if (flags.out) glq::apply_config_entry(cfg, "out", *flags.out);
        glq::validate_config(cfg);
    } catch (const glq::ConfigError& e) {
        throw UsageError(e.what());
    }

    const glq::SweepTable table = glq::sweep(cfg.grid, thread_budget());
    for (const auto& e : table.errors)
        std::cerr << "cell " << glq::to_string(e.kind) << " n=" << e.n << " q=" << e.q << " d=" << e.d
                  << " n0=" << e.n0 << ": " << e.message << '\n';
    const std::string text =
        cfg.format == glq::OutputFormat::Csv ? glq::emit_csv(table.rows) : glq::emit_json(table);

    if (cfg.output_path) {
        std::ofstream out(*cfg.output_path, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write '" + *cfg.output_path + "'");
        out << text;
        if (!out.flush()) throw IoError("write to '" + *cfg.output_path + "' failed");
    } else {
        std::cout << text;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Character degree statistics for GL(n, q)"};
    app.require_subcommand(1);

    int deg_n = 0;
    std::int64_t deg_q = 0;
    bool factored = false;
    auto* degrees = app.add_subcommand("degrees", "Tabulate character degrees by degree profile");
    degrees->add_option("--n", deg_n, "Matrix size n")->required();
    degrees->add_option("--q", deg_q, "Field size q (prime power)")->required();
    degrees->add_flag("--factored", factored, "Also print the index factor a_mu and unipotent factor b_mu");

    std::string suite;
    auto* verify = app.add_subcommand("verify", "Run self-check suites");
    verify->add_option("suite", suite, "partitions | valuations | degrees | voltas | all")->required();

    SweepFlags flags;
    auto* sweep = app.add_subcommand("sweep", "Exact divisibility proportions over an (n, q, d, n0) grid");
    sweep->add_option("--config", flags.config, "key=value config file");
    sweep->add_option("--q", flags.q, "q values, e.g. 3 or 2,3,5");
    sweep->add_option("--d", flags.d, "d values");
    sweep->add_option("--n", flags.n, "n values or range, e.g. 1..8");
    sweep->add_option("--n0", flags.n0, "n0 values (helmet-certified rows)");
    sweep->add_option("--kind", flags.kind, "degree-divisible | helmet-certified | p-divisible");
    sweep->add_option("--format", flags.format, "csv | json");
    sweep->add_option("--out", flags.out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*degrees) return cmd_degrees(deg_n, deg_q, factored);
        if (*verify) return cmd_verify(suite);
        if (*sweep) return cmd_sweep(flags);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return kExitIo;
    } catch (const glq::InternalError& e) {
        std::cerr << "internal assertion failed: " << e.what() << '\n';
        return kExitInternal;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitUsage;
}
