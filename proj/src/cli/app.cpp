// Copyright 2026 The lbo Authors
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "commands.hpp"
#include "lbo/cli.hpp"
#include "lbo/verify.hpp"

namespace lbo::cli {
namespace {

constexpr std::size_t kChunk = 256;

enum class Format
{
    ndjson,
    json,
    table,
};

struct Settings
{
    double tol = 1e-9;
    std::uint64_t seed = 0;
    int samples = 0;
    std::optional<double> r;
    int threads = 1;
    std::string format;
    std::string in;
    std::string suite = "all";
};

Format parse_format(std::string const& s, Format fallback)
{
    if (s.empty())
        return fallback;
    if (s == "json")
        return Format::json;
    if (s == "table")
        return Format::table;
    return Format::ndjson;
}

class Emitter
{
  public:
    Emitter(std::ostream& out, Format format, Command command)
        : out_(out), format_(format), command_(command)
    {
        if (format_ == Format::json)
            out_ << '[';
        else if (format_ == Format::table)
            out_ << table_header(command_) << '\n';
    }

    void emit(Json const& report)
    {
        switch (format_)
        {
            case Format::ndjson:
                write_json(out_, report);
                out_ << '\n';
                break;
            case Format::json:
                out_ << (first_ ? "\n" : ",\n");
                write_json(out_, report);
                break;
            case Format::table:
                out_ << table_row(report, command_) << '\n';
                break;
        }
        first_ = false;
    }

    void finish()
    {
        if (format_ == Format::json)
            out_ << (first_ ? "]\n" : "\n]\n");
        out_.flush();
    }

  private:
    std::ostream& out_;
    Format format_;
    Command command_;
    bool first_ = true;
};

int process_stream(std::istream& in, std::ostream& out, Options const& options,
                   Format format, int threads)
{
    RecordReader reader(in);
    Emitter emitter(out, format, options.command);
    int status = exit_success;
    std::vector<InputRecord> chunk;
    std::vector<Outcome> results;
    bool more = true;
    while (more)
    {
        chunk.clear();
        InputRecord record;
        while (chunk.size() < kChunk && (more = reader.next(record)))
            chunk.push_back(std::move(record));
        if (chunk.empty())
            break;

        results.assign(chunk.size(), {});
        int const workers
            = std::clamp(threads, 1, static_cast<int>(chunk.size()));
        auto work = [&](int w) {
            for (std::size_t i = w; i < chunk.size(); i += workers)
                results[i] = process(chunk[i], options);
        };
        if (workers == 1)
        {
            work(0);
        }
        else
        {
            std::vector<std::jthread> pool;
            for (int w = 0; w < workers; ++w)
                pool.emplace_back(work, w);
        }
        for (auto const& r : results)
        {
            emitter.emit(r.report);
            status = std::max(status, r.status);
        }
    }
    emitter.finish();
    return status;
}

int run_verify(Settings const& s, ToleranceConfig const& tol,
               std::ostream& out, std::ostream& err)
{
    std::vector<std::string> suites;
    if (s.suite == "all")
    {
        suites = suite_names();
    }
    else
    {
        auto const& names = suite_names();
        if (std::find(names.begin(), names.end(), s.suite) == names.end())
        {
            err << "lbo: unknown suite '" << s.suite << "'\n";
            return exit_usage_error;
        }
        suites.push_back(s.suite);
    }

    Format const format = parse_format(s.format, Format::table);
    bool all = true;
    Json reports = Json::array();
    if (format == Format::table)
        out << "suite       check                                          "
               "value                  threshold  result\n";
    for (auto const& name : suites)
    {
        SuiteReport const report = run_suite(name, s.seed, tol);
        all = all && report.passed();
        Json checks = Json::array();
        for (auto const& c : report.checks)
        {
            if (format == Format::table)
            {
                char line[256];
                std::snprintf(line, sizeof line, "%-11s %-46s %-22.15g %-10.3g %s\n",
                              name.c_str(), c.name.c_str(), c.value,
                              c.threshold, c.passed ? "PASS" : "FAIL");
                out << line;
            }
            checks.push_back({{"check", c.name},
                              {"value", c.value},
                              {"threshold", c.threshold},
                              {"passed", c.passed}});
        }
        Json const j{{"suite", name},
                     {"seed", s.seed},
                     {"passed", report.passed()},
                     {"checks", checks}};
        if (format == Format::ndjson)
        {
            write_json(out, j);
            out << '\n';
        }
        reports.push_back(j);
    }
    if (format == Format::json)
    {
        write_json(out, reports);
        out << '\n';
    }
    else if (format == Format::table)
    {
        out << (all ? "all checks passed" : "some checks FAILED") << '\n';
    }
    return all ? exit_success : exit_invariant_violation;
}

// CLI11 silently drops environment values that fail validation.
void check_environment(CLI::App const& app)
{
    if (!app.parsed())
        return;
    for (CLI::Option const* opt : app.get_options())
    {
        std::string const name = opt->get_envname();
        if (name.empty() || opt->count() > 0)
            continue;
        char const* value = std::getenv(name.c_str());
        if (value != nullptr && *value != '\0')
            throw CLI::ValidationError(name, std::string("invalid value '")
                                                 + value + "'");
    }
    for (CLI::App const* sub : app.get_subcommands({}))
        check_environment(*sub);
}

}  // namespace

int run(std::vector<std::string> const& args, std::istream& in,
        std::ostream& out, std::ostream& err)
{
    CLI::App app{"Lorentz-group orbits of light-cone bivectors in the "
                 "exterior square of Minkowski 4-space",
                 "lbo"};
    app.require_subcommand(1);
    app.fallthrough();

    Settings s;
    app.add_option("--tol", s.tol, "absolute and relative tolerance")
        ->envname("LBO_TOL")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", s.seed, "random seed")->envname("LBO_SEED");
    app.add_option("--samples", s.samples,
                   "slice: random words for the empirical minimal radius")
        ->envname("LBO_SAMPLES")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--threads", s.threads, "worker threads")
        ->envname("LBO_THREADS")
        ->check(CLI::Range(1, 256));
    app.add_option("--format", s.format, "output format")
        ->envname("LBO_FORMAT")
        ->check(CLI::IsMember({"json", "ndjson", "table"}));
    app.add_option("--in", s.in, "input file (default: stdin)");

    auto* classify = app.add_subcommand("classify", "orbit class of each record");
    auto* canonical = app.add_subcommand(
        "canonical", "canonical form, witness and representative");
    auto* slice = app.add_subcommand("slice", "topology of the r-slice");
    auto* stabilizer = app.add_subcommand(
        "stabilizer", "stabilizer generators and fixing residuals");
    auto* verify = app.add_subcommand("verify", "run an invariant suite");
    slice->add_option("--r", s.r, "slice radius")->envname("LBO_R")->required();
    verify->add_option("--suite", s.suite,
                       "isometry, pfaffian, frames, stabilizer, slice or all");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try
    {
        app.parse(reversed);
        check_environment(app);
    }
    catch (CLI::CallForHelp const&)
    {
        out << app.help();
        return exit_success;
    }
    catch (CLI::CallForAllHelp const&)
    {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_success;
    }
    catch (CLI::ParseError const& e)
    {
        err << "lbo: " << e.what() << '\n';
        return exit_usage_error;
    }

    ToleranceConfig tol;
    tol.abs_tol = s.tol;
    tol.rel_tol = s.tol;
    tol.rng_seed = s.seed;

    if (verify->parsed())
        return run_verify(s, tol, out, err);

    Options options;
    options.tol = tol;
    options.seed = s.seed;
    options.samples = s.samples;
    if (classify->parsed())
        options.command = Command::classify;
    else if (canonical->parsed())
        options.command = Command::canonical;
    else if (stabilizer->parsed())
        options.command = Command::stabilizer;
    else
        options.command = Command::slice;
    if (slice->parsed())
    {
        if (!(*s.r > 0))
        {
            err << "lbo: --r must be positive\n";
            return exit_input_error;
        }
        options.r = s.r;
    }

    Format const format = parse_format(s.format, Format::ndjson);
    if (s.in.empty())
        return process_stream(in, out, options, format, s.threads);
    std::ifstream file(s.in);
    if (!file)
    {
        err << "lbo: cannot open " << s.in << '\n';
        return exit_input_error;
    }
    return process_stream(file, out, options, format, s.threads);
}

}  // namespace lbo::cli
