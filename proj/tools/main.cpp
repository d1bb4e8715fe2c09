// toricgen: minimal quadratic generating systems for the toric ideal of a
// lattice polygon, with the LDP polar/dilation route and list checking.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "toricgen/pipeline.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitGateFailed = 3;

struct CommonOptions {
    std::string input;  // path, or "-" for stdin
    std::vector<std::string> inline_points;
    std::string route = "direct";
    std::string format = "plain";
    bool oracle = false;
    bool force = false;
    std::optional<toricgen::Int> dilate;
    std::string out_path;
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_pipeline_flags) {
    cmd->add_option("input", opt.input, "vertex file (JSON or plain text), or '-' for stdin");
    cmd->add_option("-p,--point", opt.inline_points,
                    "inline vertex 'x,y' (repeatable, instead of a file)");
    cmd->add_option("--route", opt.route, "direct | ldp")
        ->check(CLI::IsMember({"direct", "ldp"}));
    cmd->add_option("--format", opt.format, "plain | latex | json")
        ->check(CLI::IsMember({"plain", "latex", "json"}));
    cmd->add_option("--out", opt.out_path, "write the report to this file (atomically)");
    if (with_pipeline_flags) {
        cmd->add_flag("--oracle", opt.oracle,
                      "also run the all-pairs enumeration + exact elimination cross-check");
        cmd->add_flag("--force", opt.force, "downgrade a failed Koelman gate to a warning");
        cmd->add_option("--dilate", opt.dilate,
                        "dilation factor (direct route: of the input polygon; ldp route: of the "
                        "polar, must be a multiple of the index)");
    }
}

std::string read_input(const CommonOptions& opt) {
    if (!opt.inline_points.empty()) {
        if (!opt.input.empty())
            throw toricgen::ParseError("give either an input file or --point, not both");
        std::string text;
        for (const auto& p : opt.inline_points) {
            std::string line = p;
            std::replace(line.begin(), line.end(), ',', ' ');
            text += line + "\n";
        }
        return text;
    }
    if (opt.input.empty())
        throw toricgen::ParseError("no input given (pass a vertex file, '-', or --point)");
    if (opt.input == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(opt.input, std::ios::binary);
    if (!in) throw toricgen::ParseError("cannot open input file: " + opt.input);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

toricgen::JobSpec make_job(const CommonOptions& opt) {
    toricgen::JobSpec job;
    job.vertices = toricgen::parse_vertices(read_input(opt));
    job.route = opt.route == "ldp" ? toricgen::Route::ldp : toricgen::Route::direct;
    job.format = opt.format == "latex"  ? toricgen::OutputFormat::latex
                 : opt.format == "json" ? toricgen::OutputFormat::json
                                        : toricgen::OutputFormat::plain;
    job.oracle = opt.oracle;
    job.force = opt.force;
    job.dilate_factor = opt.dilate;
    return job;
}

void emit(const CommonOptions& opt, const std::string& payload) {
    if (!opt.out_path.empty())
        toricgen::write_file_atomic(opt.out_path, payload);
    else
        std::cout << payload;
}

int finish_report(const CommonOptions& opt, const toricgen::ResultReport& report,
                  toricgen::OutputFormat format) {
    emit(opt, toricgen::render(report, format));
    std::cerr << "elapsed: " << report.elapsed_seconds * 1000.0 << " ms\n";
    return report.passed() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimal quadratic generating systems of toric ideals of lattice polygons"};
    app.require_subcommand(1);

    CommonOptions gens_opt, count_opt, polar_opt, check_opt;
    std::string check_generators_path;

    CLI::App* gens = app.add_subcommand("gens", "compute a minimal generating system");
    add_common(gens, gens_opt, true);

    CLI::App* count = app.add_subcommand("count", "counts only (delta, beta, generator count)");
    add_common(count, count_opt, true);

    CLI::App* polar = app.add_subcommand("polar", "polar dual, index and dilation of an LDP polygon");
    add_common(polar, polar_opt, false);

    CLI::App* check = app.add_subcommand("check", "validate a generator list against the polygon");
    add_common(check, check_opt, true);
    check->add_option("generators", check_generators_path, "file with one binomial per line")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (gens->parsed()) {
            const auto job = make_job(gens_opt);
            return finish_report(gens_opt, toricgen::run(job), job.format);
        }
        if (count->parsed()) {
            auto job = make_job(count_opt);
            job.count_only = true;
            return finish_report(count_opt, toricgen::run(job), job.format);
        }
        if (polar->parsed()) {
            const auto job = make_job(polar_opt);
            emit(polar_opt, toricgen::render(toricgen::run_polar(job), job.format));
            return kExitOk;
        }
        if (check->parsed()) {
            const auto job = make_job(check_opt);
            std::ifstream in(check_generators_path, std::ios::binary);
            if (!in)
                throw toricgen::ParseError("cannot open generator file: " + check_generators_path);
            std::ostringstream buf;
            buf << in.rdbuf();
            return finish_report(check_opt, toricgen::check_external(job, buf.str()), job.format);
        }
    } catch (const toricgen::GateFailed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGateFailed;
    } catch (const toricgen::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
