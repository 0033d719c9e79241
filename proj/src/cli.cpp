#include "tcms/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tcms/classifier.hpp"
#include "tcms/corpus_io.hpp"
#include "tcms/errors.hpp"
#include "tcms/evaluation.hpp"
#include "tcms/model.hpp"
#include "tcms/model_io.hpp"
#include "tcms/numfmt.hpp"

namespace fs = std::filesystem;

namespace tcms {
namespace {

struct TrainFlags {
    std::string corpus;
    bool jsonl = false;
    int order = 64;
    std::int64_t min_df = 1;
    std::int64_t min_class_docs = 0;
    bool no_stem = false;
    std::string stopword_file;
};

void add_train_flags(CLI::App* cmd, TrainFlags& f) {
    cmd->add_option("--corpus", f.corpus, "corpus directory or JSONL file")
        ->required();
    cmd->add_flag("--jsonl", f.jsonl, "treat --corpus as a JSONL file");
    cmd->add_option("--order", f.order, "B-tree order r (>= 3)")
        ->check(CLI::Range(3, 100000))
        ->capture_default_str();
    cmd->add_option("--min-df", f.min_df,
                    "drop terms seen in fewer than N documents")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--min-class-docs", f.min_class_docs,
                    "drop classes with fewer than N documents")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    cmd->add_flag("--no-stem", f.no_stem, "disable stemming");
    cmd->add_option("--stopwords", f.stopword_file,
                    "stopword file overriding the bundled list");
}

PipelineConfig pipeline_from_flags(const TrainFlags& f) {
    PipelineConfig p;
    p.stemming_enabled = !f.no_stem;
    p.min_doc_frequency = f.min_df;
    if (f.stopword_file.empty())
        p.stopwords = default_stopwords();
    else
        p.stopwords = load_stopword_file(f.stopword_file);
    return p;
}

Corpus load_flagged_corpus(const TrainFlags& f, const PipelineConfig& pipeline,
                           std::ostream& err) {
    CorpusLoadResult loaded =
        f.jsonl ? load_corpus_jsonl(f.corpus, pipeline)
                : load_corpus_dir(f.corpus, pipeline);
    for (const std::string& warning : loaded.warnings)
        err << "warning: " << warning << '\n';
    return filter_small_classes(loaded.corpus, f.min_class_docs);
}

// "0.1..0.8" expands on the 0.1 grid; otherwise a comma-separated list.
std::vector<double> parse_fractions(const std::string& text) {
    std::vector<double> fractions;
    auto parse_one = [](const std::string& s) {
        double v = 0;
        if (!parse_double(s, v) || !(v > 0.0 && v < 1.0))
            throw CLI::ValidationError("--fractions",
                                       "'" + s + "' is not in (0, 1)");
        return v;
    };
    std::size_t dots = text.find("..");
    if (dots != std::string::npos) {
        double lo = parse_one(text.substr(0, dots));
        double hi = parse_one(text.substr(dots + 2));
        long lo10 = std::lround(lo * 10.0);
        long hi10 = std::lround(hi * 10.0);
        if (std::abs(lo * 10.0 - static_cast<double>(lo10)) > 1e-9 ||
            std::abs(hi * 10.0 - static_cast<double>(hi10)) > 1e-9 ||
            lo10 > hi10)
            throw CLI::ValidationError(
                "--fractions", "range endpoints must be on the 0.1 grid");
        for (long k = lo10; k <= hi10; ++k)
            fractions.push_back(static_cast<double>(k) / 10.0);
        return fractions;
    }
    std::stringstream parts(text);
    std::string part;
    while (std::getline(parts, part, ','))
        if (!part.empty()) fractions.push_back(parse_one(part));
    if (fractions.empty())
        throw CLI::ValidationError("--fractions", "no fractions given");
    return fractions;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read document: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int run_train(const TrainFlags& flags, const std::string& out_path,
              std::ostream& out, std::ostream& err) {
    PipelineConfig pipeline = pipeline_from_flags(flags);
    Corpus corpus = load_flagged_corpus(flags, pipeline, err);
    TrainedModel model = train_model(corpus, pipeline, IndexConfig{flags.order});
    save_model(model, out_path);
    out << "model written to " << out_path << " (classes="
        << model.class_count() << " terms=" << model.term_count()
        << " order=" << flags.order << ")\n";
    return 0;
}

int run_classify(const std::string& model_path,
                 const std::vector<std::string>& docs, std::ostream& out) {
    TrainedModel model = load_model(model_path);
    for (const std::string& doc : docs) {
        Prediction pred = model.classify_text(read_file(doc));
        out << doc << '\t' << pred.class_name << "\tconfident="
            << (pred.confident ? 1 : 0);
        for (double s : pred.supports.supports)
            out << '\t' << format_double(s);
        out << '\n';
    }
    return 0;
}

int run_rank(const std::string& model_path, const std::string& doc,
             int top, std::ostream& out) {
    TrainedModel model = load_model(model_path);
    QueryTerms query{preprocess_document(read_file(doc), model.pipeline)};
    for (const auto& [class_id, support] :
         rank_classes(model.kb, query, top))
        out << model.class_names()[class_id] << '\t' << format_double(support)
            << '\n';
    return 0;
}

int run_eval(const TrainFlags& flags, const std::string& fractions_text,
             int trials, std::uint64_t seed, const std::string& csv_path,
             std::ostream& out, std::ostream& err) {
    PipelineConfig pipeline = pipeline_from_flags(flags);
    CorpusLoadResult loaded =
        flags.jsonl ? load_corpus_jsonl(flags.corpus, pipeline)
                    : load_corpus_dir(flags.corpus, pipeline);
    for (const std::string& warning : loaded.warnings)
        err << "warning: " << warning << '\n';

    ProtocolConfig protocol;
    protocol.fractions = parse_fractions(fractions_text);
    protocol.trials = trials;
    protocol.base_seed = seed;
    protocol.min_class_docs = flags.min_class_docs;
    EvalReport report = run_protocol(loaded.corpus, protocol, pipeline,
                                     IndexConfig{flags.order});
    out << report.to_text();
    if (!csv_path.empty()) {
        std::ofstream csv(csv_path, std::ios::binary);
        if (!csv) throw Error("cannot write CSV report: " + csv_path);
        csv << report.to_csv();
    }
    return 0;
}

int run_inspect(const std::string& model_path, const std::string& term,
                std::ostream& out) {
    TrainedModel model = load_model(model_path);
    const WeightRecord* rec = model.kb.search(term);
    if (!rec) {
        out << "not found\n";
        return 0;
    }
    out << rec->term;
    for (double w : rec->weights) out << '\t' << format_double(w);
    out << '\n';
    return 0;
}

} // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"term-class relevance text categorizer"};
    app.name("tcms");
    app.require_subcommand(1);

    TrainFlags train_flags;
    std::string model_out;
    CLI::App* train = app.add_subcommand("train", "train a model");
    add_train_flags(train, train_flags);
    train->add_option("--out", model_out, "model file to write")->required();

    std::string model_path;
    std::vector<std::string> doc_paths;
    CLI::App* classify = app.add_subcommand("classify", "classify documents");
    classify->add_option("--model", model_path, "trained model file")
        ->required();
    classify->add_option("docs", doc_paths, "document files")
        ->required()
        ->expected(-1);

    std::string rank_model, rank_doc;
    int rank_top = 1;
    CLI::App* rank = app.add_subcommand("rank", "rank classes for a document");
    rank->add_option("--model", rank_model, "trained model file")->required();
    rank->add_option("--top", rank_top, "number of classes to report")
        ->required()
        ->check(CLI::PositiveNumber);
    rank->add_option("doc", rank_doc, "document file")->required();

    TrainFlags eval_flags;
    std::string fractions_text = "0.1..0.8";
    int trials = 10;
    std::uint64_t seed = 42;
    std::string csv_path;
    CLI::App* eval = app.add_subcommand("eval", "run the split protocol");
    add_train_flags(eval, eval_flags);
    eval->add_option("--fractions", fractions_text,
                     "training fractions, e.g. 0.1..0.8 or 0.2,0.5")
        ->capture_default_str();
    eval->add_option("--trials", trials, "random trials per fraction")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    eval->add_option("--seed", seed, "base seed; trial i uses seed+i")
        ->capture_default_str();
    eval->add_option("--csv", csv_path, "write the CSV report to this file");

    std::string inspect_model, inspect_term;
    CLI::App* inspect = app.add_subcommand("inspect", "look up a term");
    inspect->add_option("--model", inspect_model, "trained model file")
        ->required();
    inspect->add_option("--term", inspect_term, "term to look up")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    try {
        if (train->parsed()) return run_train(train_flags, model_out, out, err);
        if (classify->parsed())
            return run_classify(model_path, doc_paths, out);
        if (rank->parsed()) return run_rank(rank_model, rank_doc, rank_top, out);
        if (eval->parsed())
            return run_eval(eval_flags, fractions_text, trials, seed, csv_path,
                            out, err);
        if (inspect->parsed())
            return run_inspect(inspect_model, inspect_term, out);
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}

int cli_main(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return cli_run(args, std::cout, std::cerr);
}

} // namespace tcms
