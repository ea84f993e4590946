#pragma once

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "segscan/core.hpp"
#include "segscan/density.hpp"
#include "segscan/io.hpp"
#include "segscan/matrix.hpp"
#include "segscan/oracle.hpp"
#include "segscan/sum.hpp"
#include "segscan/threshold.hpp"
#include "segscan/topk.hpp"

namespace segscan {

namespace detail_cli {

struct Options {
    double lower = 0.0;
    double upper = 0.0;
    std::size_t k = 1;
    double threshold = 0.0;
    bool strict = false;
    std::string format = "numbers";
    std::string scoring;
    std::string output = "json";
    bool stream = false;
    std::string file = "-";
};

inline InputFormat input_format(const std::string& s) {
    if (s == "numbers") return InputFormat::numbers;
    if (s == "numbers-with-widths") return InputFormat::numbers_with_widths;
    if (s == "fasta") return InputFormat::fasta;
    throw std::invalid_argument("unknown input format '" + s + "'");
}

inline OutputMode output_mode(const std::string& s) {
    if (s == "json") return OutputMode::json;
    if (s == "tsv") return OutputMode::tsv;
    throw std::invalid_argument("unknown output mode '" + s + "'");
}

inline void sort_by_segment(std::vector<ScoredSegment>& v) {
    std::sort(v.begin(), v.end(),
              [](const ScoredSegment& a, const ScoredSegment& b) { return a.seg < b.seg; });
}

}  // namespace detail_cli

/// Parses and executes one command line. Returns the process exit code:
/// 0 on success, 2 when no feasible segment exists, 1 on usage/parse errors.
inline int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                       std::ostream& err) {
    using detail_cli::Options;
    CLI::App app{"length-constrained heaviest segment queries"};
    app.require_subcommand(1);
    Options o;

    const auto add_common = [&o](CLI::App* cmd) {
        cmd->add_option("--L", o.lower, "minimum total width")->required();
        cmd->add_option("--U", o.upper, "maximum total width")->required();
        cmd->add_option("--output", o.output, "json or tsv");
        cmd->add_option("file", o.file, "input path, - for stdin");
        return cmd;
    };
    const auto add_sequence = [&o, &add_common](CLI::App* cmd) {
        add_common(cmd);
        cmd->add_option("--format", o.format, "numbers, numbers-with-widths or fasta");
        cmd->add_option("--scoring", o.scoring, "symbol scores, e.g. C=1,G=1,A=0,T=0");
        cmd->add_flag("--stream", o.stream, "consume input incrementally");
        return cmd;
    };

    CLI::App* c_max_sum = add_sequence(app.add_subcommand("max-sum", "maximum-sum segment"));
    CLI::App* c_max_den =
        add_sequence(app.add_subcommand("max-density", "maximum-density segment"));
    CLI::App* c_topk_sum = add_sequence(app.add_subcommand("topk-sum", "k largest sums"));
    c_topk_sum->add_option("--k", o.k, "how many segments");
    CLI::App* c_topk_den = add_sequence(app.add_subcommand("topk-density", "k largest densities"));
    c_topk_den->add_option("--k", o.k, "how many segments");
    CLI::App* c_above_sum =
        add_sequence(app.add_subcommand("above-sum", "all segments with sum above a threshold"));
    c_above_sum->add_option("--threshold", o.threshold, "required sum")->required();
    c_above_sum->add_flag("--strict", o.strict, "strictly above instead of at least");
    CLI::App* c_above_den = add_sequence(
        app.add_subcommand("above-density", "all segments with density above a threshold"));
    c_above_den->add_option("--threshold", o.threshold, "required density")->required();
    c_above_den->add_flag("--strict", o.strict, "strictly above instead of at least");
    CLI::App* c_mat_sum =
        add_common(app.add_subcommand("matrix2d-sum", "maximum-sum subarray of a matrix"));
    CLI::App* c_mat_den =
        add_common(app.add_subcommand("matrix2d-density", "maximum-density subarray of a matrix"));
    CLI::App* c_count =
        add_sequence(app.add_subcommand("count", "number of feasible segments (unit widths)"));

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("segscan");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 1;
    }

    try {
        const OutputMode mode = detail_cli::output_mode(o.output);
        std::ifstream file_in;
        std::istream* src = &in;
        if (o.file != "-") {
            file_in.open(o.file);
            if (!file_in) throw std::invalid_argument("cannot open input file '" + o.file + "'");
            src = &file_in;
        }

        if (app.got_subcommand(c_mat_sum) || app.got_subcommand(c_mat_den)) {
            const LengthBounds bounds(o.lower, o.upper);
            const Matrix2D mat = parse_matrix(*src);
            const ScoreMode sm =
                app.got_subcommand(c_mat_sum) ? ScoreMode::sum : ScoreMode::density;
            out << format_output(max_subarray_2d(mat, bounds, sm), mode);
            return 0;
        }

        ScoringTable table = ScoringTable::dna_default();
        if (!o.scoring.empty()) table.apply_overrides(o.scoring);
        const InputFormat fmt = detail_cli::input_format(o.format);

        if (app.got_subcommand(c_count)) {
            index_t n = 0;
            const InputMeta meta = feed_input(*src, fmt, table, [&](Element) { ++n; });
            if (o.lower != std::floor(o.lower) || o.upper != std::floor(o.upper))
                throw BoundsOutOfRange("count needs integer bounds");
            out << format_count(
                count_feasible(n, static_cast<index_t>(o.lower), static_cast<index_t>(o.upper)),
                mode, &meta);
            return 0;
        }

        const LengthBounds bounds(o.lower, o.upper);
        if (app.got_subcommand(c_max_sum) || app.got_subcommand(c_max_den)) {
            const bool want_sum = app.got_subcommand(c_max_sum);
            SumScanner sum_scan(bounds);
            DensityScanner den_scan(bounds);
            const InputMeta meta = feed_input(*src, fmt, table, [&](Element e) {
                if (want_sum)
                    sum_scan.push(e);
                else
                    den_scan.push(e);
            });
            const ScoredSegment res = want_sum ? sum_scan.result() : den_scan.result();
            out << format_output(res, mode, &meta);
            return 0;
        }
        if (app.got_subcommand(c_topk_sum) || app.got_subcommand(c_topk_den)) {
            const bool want_sum = app.got_subcommand(c_topk_sum);
            TopKSumScanner sum_scan(bounds, o.k);
            TopKDensityScanner den_scan(bounds, o.k);
            const InputMeta meta = feed_input(*src, fmt, table, [&](Element e) {
                if (want_sum)
                    sum_scan.push(e);
                else
                    den_scan.push(e);
            });
            const auto res = want_sum ? sum_scan.result() : den_scan.result();
            if (res.empty()) throw NoFeasibleSegment();
            if (res.size() < o.k)
                err << "warning: only " << res.size() << " feasible segments, k clamped\n";
            out << format_output(res, mode, &meta);
            return 0;
        }
        if (app.got_subcommand(c_above_sum) || app.got_subcommand(c_above_den)) {
            const ScoreMode sm =
                app.got_subcommand(c_above_sum) ? ScoreMode::sum : ScoreMode::density;
            ThresholdScanner scan(bounds, o.threshold, sm, !o.strict);
            const InputMeta meta = feed_input(*src, fmt, table, [&](Element e) { scan.push(e); });
            auto res = scan.result();
            detail_cli::sort_by_segment(res);
            out << format_output(res, mode, &meta);
            return 0;
        }
        err << "error: no command dispatched\n";
        return 1;
    } catch (const NoFeasibleSegment& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace segscan
