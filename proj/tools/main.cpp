// SPDX-License-Identifier: Apache-2.0
//
// podsum: podcast corpus preprocessing and summary scoring.
//
// Subcommands: filter, split, baseline, score, stats. Every command is
// deterministic given its inputs, flags and seed; outputs are staged through
// temp files so a failed run leaves nothing behind.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "podsum/baselines.hpp"
#include "podsum/config.hpp"
#include "podsum/corpus.hpp"
#include "podsum/errors.hpp"
#include "podsum/filters.hpp"
#include "podsum/fsio.hpp"
#include "podsum/harness.hpp"

namespace {

using namespace podsum;

constexpr int kExitConfig = 1;
constexpr int kExitIo = 2;
constexpr int kExitData = 3;

struct FilterArgs {
    std::string input, output, ledger, config;
    unsigned jobs = 1;
};

struct SplitArgs {
    std::string input, output, config;
    std::uint64_t seed = 0;
    bool seed_given = false;
};

struct BaselineArgs {
    std::string input, output, kind;
    long k = 0;
};

struct ScoreArgs {
    std::string input, split, subset = "all", format = "markdown", output;
    std::vector<std::string> candidates;
    unsigned jobs = 1;
};

struct StatsArgs {
    std::string input;
};

int cmd_filter(const FilterArgs& args) {
    RunConfig run;
    if (!args.config.empty()) run = load_run_config(args.config);
    if (run.filters.profanity_list_path.empty()) {
        throw config_error("profanity_list_path is not set (provide a config file)");
    }
    if (run.filters.ad_marker_list_path.empty()) {
        throw config_error("ad_marker_list_path is not set (provide a config file)");
    }

    Corpus corpus = read_corpus(args.input);
    std::cerr << "filter: " << corpus.episodes.size() << " episodes in\n";
    PipelineResult result = run_pipeline(corpus, run.filters, args.jobs);
    std::cerr << "filter: " << result.corpus.episodes.size() << " episodes out\n";

    if (!args.ledger.empty()) {
        write_file_atomic(args.ledger, ledger_to_json(result.ledger));
    }
    write_corpus(result.corpus, args.output);
    std::cout << render_ledger_table(result.ledger, run.filters);
    return 0;
}

int cmd_split(const SplitArgs& args) {
    std::uint64_t seed = 0;
    if (args.seed_given) {
        seed = args.seed;
    } else if (!args.config.empty()) {
        RunConfig run = load_run_config(args.config);
        if (run.seed_set) seed = run.seed;
    }

    Corpus corpus = read_corpus(args.input);
    SplitAssignment split = make_split(corpus, seed);
    write_split(split, args.output);
    std::cout << "train/validation/test = " << split.train.size() << '/'
              << split.validation.size() << '/' << split.test.size() << '\n';
    return 0;
}

int cmd_baseline(const BaselineArgs& args) {
    if (args.k < 1) throw config_error("--k must be >= 1");
    BaselineSpec spec;
    spec.k = static_cast<int>(args.k);
    if (args.kind == "first") {
        spec.kind = BaselineKind::FirstK;
    } else if (args.kind == "last") {
        spec.kind = BaselineKind::LastK;
    } else {
        throw config_error("--kind must be 'first' or 'last'");
    }

    Corpus corpus = read_corpus(args.input);
    CandidateSummarySet set = generate_baseline(corpus, spec);
    write_candidates(set, args.output);
    std::cerr << "baseline: wrote " << set.entries.size() << " summaries ("
              << set.system_name << ")\n";
    return 0;
}

std::string system_name_from_path(const std::filesystem::path& p) {
    return p.stem().string();
}

int cmd_score(const ScoreArgs& args) {
    Subset subset = subset_from_string(args.subset);
    if (subset != Subset::all && args.split.empty()) {
        throw config_error("--subset " + args.subset + " requires --split");
    }
    ReportFormat format = report_format_from_string(args.format);

    Corpus corpus = read_corpus(args.input);
    std::optional<std::vector<std::string>> ids;
    if (subset != Subset::all) {
        SplitAssignment split = read_split(args.split);
        switch (subset) {
            case Subset::train: ids = split.train; break;
            case Subset::validation: ids = split.validation; break;
            case Subset::test: ids = split.test; break;
            default: break;
        }
    }

    std::vector<CandidateSummarySet> sets;
    sets.reserve(args.candidates.size());
    for (const auto& path : args.candidates) {
        sets.push_back(read_candidates(path, system_name_from_path(path)));
    }

    std::cerr << "score: " << sets.size() << " system(s) over "
              << (ids ? ids->size() : corpus.episodes.size()) << " episodes\n";
    EvaluationReport report = evaluate_many(corpus, sets, ids, subset, args.jobs);
    std::string rendered = render_report(report, format);

    if (args.output.empty()) {
        std::cout << rendered;
    } else {
        write_file_atomic(args.output, rendered);
    }
    return 0;
}

int cmd_stats(const StatsArgs& args) {
    Corpus corpus = read_corpus(args.input);
    if (corpus.episodes.empty()) throw data_error("corpus is empty");

    auto print = [](const char* label, const SummaryStats& s) {
        char mean[32];
        std::snprintf(mean, sizeof(mean), "%.2f", s.mean_len);
        std::cout << label << ": mean=" << mean << " max=" << s.max_len
                  << " min=" << s.min_len << " (tokens)\n";
    };
    std::cout << "episodes: " << corpus.episodes.size() << '\n';
    print("descriptions", summary_stats(corpus, TextField::description));
    print("transcripts", summary_stats(corpus, TextField::transcript));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"podcast corpus preprocessing and summary scoring"};
    app.require_subcommand(1);

    FilterArgs filter_args;
    auto* filter = app.add_subcommand("filter", "run the cleaning cascade and emit a removal ledger");
    filter->add_option("--input", filter_args.input, "corpus JSONL")->required();
    filter->add_option("--output", filter_args.output, "cleaned corpus JSONL")->required();
    filter->add_option("--ledger", filter_args.ledger, "ledger JSON output");
    filter->add_option("--config", filter_args.config, "key = value config file");
    filter->add_option("--jobs", filter_args.jobs, "worker threads (0 = auto)");

    SplitArgs split_args;
    auto* split = app.add_subcommand("split", "deterministic 60/20/20 split of episode ids");
    split->add_option("--input", split_args.input, "corpus JSONL")->required();
    split->add_option("--output", split_args.output, "split JSON output")->required();
    auto* seed_opt = split->add_option("--seed", split_args.seed, "shuffle seed (default 0)");
    split->add_option("--config", split_args.config, "key = value config file");

    BaselineArgs baseline_args;
    auto* baseline = app.add_subcommand("baseline", "first-k / last-k extractive summaries");
    baseline->add_option("--input", baseline_args.input, "corpus JSONL")->required();
    baseline->add_option("--kind", baseline_args.kind, "first|last")->required();
    baseline->add_option("--k", baseline_args.k, "token budget")->required();
    baseline->add_option("--output", baseline_args.output, "candidate JSONL output")->required();

    ScoreArgs score_args;
    auto* score = app.add_subcommand("score", "ROUGE-score candidate files against creator descriptions");
    score->add_option("--input", score_args.input, "corpus JSONL")->required();
    score->add_option("candidates", score_args.candidates, "candidate JSONL files")
        ->required()
        ->expected(-1);
    score->add_option("--split", score_args.split, "split JSON (for --subset)");
    score->add_option("--subset", score_args.subset, "all|train|validation|test");
    score->add_option("--format", score_args.format, "markdown|csv|json");
    score->add_option("--output", score_args.output, "report file (default: stdout)");
    score->add_option("--jobs", score_args.jobs, "worker threads (0 = auto)");

    StatsArgs stats_args;
    auto* stats = app.add_subcommand("stats", "token-length statistics of descriptions and transcripts");
    stats->add_option("--input", stats_args.input, "corpus JSONL")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    split_args.seed_given = seed_opt->count() > 0;

    try {
        if (*filter) return cmd_filter(filter_args);
        if (*split) return cmd_split(split_args);
        if (*baseline) return cmd_baseline(baseline_args);
        if (*score) return cmd_score(score_args);
        if (*stats) return cmd_stats(stats_args);
    } catch (const config_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const data_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return 0;
}
