// Acceptance suite: each criterion prints one PASS/FAIL line and the
// binary exits nonzero if any selected criterion fails. Run with no
// arguments for all criteria or with a list of criterion numbers.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tcms/classifier.hpp"
#include "tcms/cli.hpp"
#include "tcms/errors.hpp"
#include "tcms/evaluation.hpp"
#include "tcms/model.hpp"
#include "tcms/model_io.hpp"
#include "tcms/synthetic.hpp"
#include "tcms/tcr_weighting.hpp"
#include "tcms/text_pipeline.hpp"

#include "../support/fixtures.hpp"
#include "../support/rational_oracle.hpp"
#include "../support/tempdir.hpp"

using namespace tcms;
using namespace tcms::testing;

namespace {

struct Checker {
    bool ok = true;
    std::string first_failure;

    void expect(bool condition, const std::string& what) {
        if (!condition && ok) {
            ok = false;
            first_failure = what;
        }
    }
};

bool close(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

Corpus synthetic_corpus(const PipelineConfig& pipeline) {
    return build_corpus(make_synthetic_docs(SyntheticSpec{}), pipeline);
}

PipelineConfig fixture_pipeline() {
    PipelineConfig p; // library defaults: lowercase, stem, min length 2
    return p;
}

// ---------------------------------------------------------------------
// 1. TINY4 exactness: oracle first, then the implementation at 1e-9.
bool criterion_tiny4(Checker& c) {
    OracleCorpus tiny = tiny4_oracle();

    struct Expected {
        const char* term;
        Rational a;
        Rational b;
    };
    const Expected tcr_expected[] = {
        {"alpha", Rational(1, 2), Rational(0, 1)},
        {"beta", Rational(1, 24), Rational(1, 4)},
        {"gamma", Rational(1, 30), Rational(4, 15)},
    };

    c.expect(oracle_class_weight(tiny, "A") == Rational(1, 2),
             "oracle class weight A");
    c.expect(oracle_class_term_weight(tiny, "beta", "A") == Rational(1, 3),
             "oracle df ratio beta/A");
    c.expect(oracle_class_term_density(tiny, "beta", "B") == Rational(3, 4),
             "oracle occurrence ratio beta/B");
    for (const Expected& e : tcr_expected) {
        c.expect(oracle_tcr(tiny, e.term, "A") == e.a,
                 std::string("oracle tcr A ") + e.term);
        c.expect(oracle_tcr(tiny, e.term, "B") == e.b,
                 std::string("oracle tcr B ") + e.term);
    }

    Corpus corpus = tiny4_corpus();
    CorpusStats stats = CorpusStats::from_corpus(corpus);
    c.expect(close(class_weight(stats, 0), 0.5, 1e-9), "class weight A");
    c.expect(close(class_term_weight(stats, "beta", 0), 1.0 / 3.0, 1e-9),
             "df ratio beta/A");
    c.expect(close(class_term_weight(stats, "beta", 1), 2.0 / 3.0, 1e-9),
             "df ratio beta/B");
    c.expect(close(class_term_density(stats, "beta", 0), 0.25, 1e-9),
             "occurrence ratio beta/A");
    c.expect(close(class_term_density(stats, "gamma", 1), 0.8, 1e-9),
             "occurrence ratio gamma/B");

    WeightMatrix matrix =
        compute_weight_matrix(corpus, {"alpha", "beta", "gamma"});
    KnowledgeBase kb =
        KnowledgeBase::build(matrix, IndexConfig{3}, corpus.class_names);
    for (const Expected& e : tcr_expected) {
        const WeightRecord* rec = kb.search(e.term);
        c.expect(rec != nullptr, std::string("kb lookup ") + e.term);
        if (!rec) continue;
        c.expect(close(rec->weights[0], e.a.to_double(), 1e-9),
                 std::string("tcr A ") + e.term);
        c.expect(close(rec->weights[1], e.b.to_double(), 1e-9),
                 std::string("tcr B ") + e.term);
    }

    QueryTerms q1;
    q1.term_counts.add("alpha");
    q1.term_counts.add("beta");
    SupportVector ts1 = total_support(kb, q1);
    c.expect(close(ts1.supports[0], Rational(13, 24).to_double(), 1e-9),
             "TS(alpha beta) A");
    c.expect(close(ts1.supports[1], 0.25, 1e-9), "TS(alpha beta) B");
    c.expect(classify(kb, q1).class_name == "A", "predicted class A");

    QueryTerms q2;
    q2.term_counts.add("beta");
    q2.term_counts.add("gamma", 2);
    SupportVector ts2 = total_support(kb, q2);
    c.expect(close(ts2.supports[0], Rational(13, 120).to_double(), 1e-9),
             "TS(beta gamma gamma) A");
    c.expect(close(ts2.supports[1], Rational(47, 60).to_double(), 1e-9),
             "TS(beta gamma gamma) B");
    c.expect(classify(kb, q2).class_name == "B", "predicted class B");

    auto oracle_ts1 = oracle_total_support(tiny, {"alpha", "beta"});
    c.expect(oracle_ts1[0] == Rational(13, 24) && oracle_ts1[1] == Rational(1, 4),
             "oracle TS(alpha beta)");
    auto oracle_ts2 = oracle_total_support(tiny, {"beta", "gamma", "gamma"});
    c.expect(oracle_ts2[0] == Rational(13, 120) &&
                 oracle_ts2[1] == Rational(47, 60),
             "oracle TS(beta gamma gamma)");
    return c.ok;
}

// ---------------------------------------------------------------------
// 2. Normalization sums over 100 random corpora at 1e-12.
bool criterion_normalization(Checker& c) {
    std::mt19937_64 rng(20240601);
    for (int round = 0; round < 100 && c.ok; ++round) {
        Corpus corpus =
            corpus_from_tokens(random_corpus(rng, 2, 10, 10, 200, 20, 500));
        CorpusStats stats = CorpusStats::from_corpus(corpus);
        const int k = stats.class_count();

        double cw = 0;
        for (int j = 0; j < k; ++j) cw += class_weight(stats, j);
        c.expect(close(cw, 1.0, 1e-12), "class weights sum to 1");

        PipelineConfig config;
        std::vector<std::string> vocabulary = build_vocabulary(corpus, config);
        for (const std::string& term : vocabulary) {
            double ctw = 0, ctd = 0;
            for (int j = 0; j < k; ++j) {
                ctw += class_term_weight(stats, term, j);
                ctd += class_term_density(stats, term, j);
            }
            if (!close(ctw, 1.0, 1e-12) || !close(ctd, 1.0, 1e-12)) {
                c.expect(false, "per-term sums at term " + term);
                break;
            }
        }
    }
    return c.ok;
}

// ---------------------------------------------------------------------
// 3. B-tree vs sorted-array oracle, with periodic validation.
bool criterion_btree_oracle(Checker& c) {
    for (int order : {3, 4, 64}) {
        std::mt19937_64 rng(555 + order);
        BTree tree((IndexConfig{order}));
        std::map<std::string, double> oracle;
        int mutations = 0;
        for (int i = 0; i < 10000 && c.ok; ++i) {
            std::string term;
            for (int ch = 0; ch < 6; ++ch)
                term.push_back(static_cast<char>('a' + rng() % 26));
            if (rng() % 2 == 0) {
                double w = static_cast<double>(rng() % 10000) / 10000.0;
                tree.insert(WeightRecord{term, {w}});
                oracle[term] = w;
                if (++mutations % 100 == 0)
                    c.expect(tree.validate(1).empty(),
                             "validate after mutation batch");
            } else {
                const WeightRecord* found = tree.search(term);
                auto it = oracle.find(term);
                if (it == oracle.end())
                    c.expect(found == nullptr, "spurious hit for " + term);
                else
                    c.expect(found && found->weights[0] == it->second,
                             "lookup mismatch for " + term);
            }
        }
        c.expect(tree.size() == static_cast<std::int64_t>(oracle.size()),
                 "size mismatch at order " + std::to_string(order));
        c.expect(tree.validate(1).empty(),
                 "final validation at order " + std::to_string(order));
    }
    return c.ok;
}

// ---------------------------------------------------------------------
// 4. Height bound at r=64 for d up to 1e5.
bool criterion_height_bound(Checker& c) {
    for (std::int64_t d : {100LL, 1000LL, 10000LL, 100000LL}) {
        std::vector<WeightRecord> records;
        records.reserve(d);
        for (std::int64_t i = 0; i < d; ++i) {
            char buf[24];
            std::snprintf(buf, sizeof(buf), "t%08lld", static_cast<long long>(i));
            records.push_back(WeightRecord{buf, {0.5}});
        }
        WeightMatrix matrix;
        matrix.records = std::move(records);
        matrix.class_count = 1;
        BTree tree = BTree::bulk_load(matrix, IndexConfig{64});
        const int bound = 1 + static_cast<int>(std::floor(
                                  std::log((static_cast<double>(d) + 1) / 2.0) /
                                  std::log(32.0)));
        c.expect(tree.size() == d, "bulk size at d=" + std::to_string(d));
        c.expect(tree.height() <= bound,
                 "height " + std::to_string(tree.height()) + " exceeds bound " +
                     std::to_string(bound) + " at d=" + std::to_string(d));
        c.expect(tree.validate(1).empty(), "validate at d=" + std::to_string(d));
    }
    return c.ok;
}

// ---------------------------------------------------------------------
// 5. Classifier equals a dense weight-matrix scan on all 800 fixture docs.
bool criterion_dense_oracle(Checker& c) {
    PipelineConfig pipeline = fixture_pipeline();
    Corpus corpus = synthetic_corpus(pipeline);
    c.expect(corpus.doc_count() == 800, "fixture has 800 documents");

    std::vector<std::string> vocabulary = build_vocabulary(corpus, pipeline);
    WeightMatrix matrix = compute_weight_matrix(corpus, vocabulary);
    KnowledgeBase kb =
        KnowledgeBase::build(matrix, IndexConfig{64}, corpus.class_names);

    for (const Document& doc : corpus.documents) {
        QueryTerms query{doc.terms};
        Prediction via_tree = classify(kb, query);

        std::vector<double> supports(matrix.class_count, 0.0);
        for (const auto& [term, freq] : query.term_counts.counts) {
            const WeightRecord* rec = matrix.find(term);
            if (!rec) continue;
            for (int j = 0; j < matrix.class_count; ++j)
                supports[j] += static_cast<double>(freq) * rec->weights[j];
        }
        int dense = 0;
        for (int j = 1; j < matrix.class_count; ++j)
            if (supports[j] > supports[dense]) dense = j;

        if (via_tree.class_id != dense) {
            c.expect(false, "prediction mismatch on " + doc.doc_id);
            break;
        }
    }
    return c.ok;
}

// ---------------------------------------------------------------------
// 6. Quality floor: 80/20 split, 10 trials, micro-F >= 0.60.
bool criterion_quality_floor(Checker& c) {
    PipelineConfig pipeline = fixture_pipeline();
    Corpus corpus = synthetic_corpus(pipeline);
    ProtocolConfig protocol;
    protocol.fractions = {0.8};
    protocol.trials = 10;
    protocol.base_seed = 42;
    EvalReport report =
        run_protocol(corpus, protocol, pipeline, IndexConfig{64});
    double avg_micro_f = -1;
    for (const EvalRow& row : report.rows)
        if (row.trial == EvalRow::kAverage) avg_micro_f = row.metrics.micro_f;
    c.expect(avg_micro_f >= 0.60, "trial-averaged micro-F " +
                                      std::to_string(avg_micro_f) +
                                      " below floor 0.60");
    return c.ok;
}

// ---------------------------------------------------------------------
// 7. Trend: averaged micro-F at 0.8 at least that at 0.1.
bool criterion_trend(Checker& c) {
    PipelineConfig pipeline = fixture_pipeline();
    Corpus corpus = synthetic_corpus(pipeline);
    ProtocolConfig protocol;
    protocol.fractions = {0.1, 0.8};
    protocol.trials = 10;
    protocol.base_seed = 42;
    EvalReport report =
        run_protocol(corpus, protocol, pipeline, IndexConfig{64});
    double low = -1, high = -1;
    for (const EvalRow& row : report.rows) {
        if (row.trial != EvalRow::kAverage) continue;
        if (row.fraction == 0.1) low = row.metrics.micro_f;
        if (row.fraction == 0.8) high = row.metrics.micro_f;
    }
    c.expect(low >= 0 && high >= 0, "average rows present");
    c.expect(high >= low, "micro-F at 0.8 (" + std::to_string(high) +
                              ") below micro-F at 0.1 (" + std::to_string(low) +
                              ")");
    return c.ok;
}

// ---------------------------------------------------------------------
// 8. Determinism: identical eval CSV bytes; save/load/save byte-identical.
bool criterion_determinism(Checker& c) {
    TempDir dir("tcms_acc8");
    write_corpus_dir(make_synthetic_docs(SyntheticSpec{}), dir.file("corpus"));

    auto eval_once = [&](const std::string& csv) {
        std::ostringstream out, err;
        std::vector<std::string> args{
            "eval",     "--corpus", dir.file("corpus").string(),
            "--fractions", "0.2,0.5", "--trials", "3",
            "--seed",   "42",       "--csv",    csv};
        int code = cli_run(args, out, err);
        c.expect(code == 0, "eval exited " + std::to_string(code) +
                                (err.str().empty() ? "" : ": " + err.str()));
        return out.str();
    };
    std::string out1 = eval_once(dir.file("r1.csv").string());
    std::string out2 = eval_once(dir.file("r2.csv").string());
    c.expect(out1 == out2, "eval stdout differs between runs");
    std::string csv1 = slurp(dir.file("r1.csv"));
    c.expect(!csv1.empty() && csv1 == slurp(dir.file("r2.csv")),
             "eval CSV differs between runs");

    PipelineConfig pipeline = fixture_pipeline();
    Corpus corpus = synthetic_corpus(pipeline);
    TrainedModel model = train_model(corpus, pipeline, IndexConfig{64});
    save_model(model, dir.file("m1.tcms"));
    TrainedModel loaded = load_model(dir.file("m1.tcms"));
    save_model(loaded, dir.file("m2.tcms"));
    std::string m1 = slurp(dir.file("m1.tcms"));
    c.expect(!m1.empty() && m1 == slurp(dir.file("m2.tcms")),
             "save/load/save not byte-identical");

    TrainedModel tiny = train_model(tiny4_corpus(), tiny4_pipeline(),
                                    IndexConfig{3});
    save_model(tiny, dir.file("t1.tcms"));
    save_model(load_model(dir.file("t1.tcms")), dir.file("t2.tcms"));
    c.expect(slurp(dir.file("t1.tcms")) == slurp(dir.file("t2.tcms")),
             "TINY4 save/load/save not byte-identical");
    return c.ok;
}

// ---------------------------------------------------------------------
// 9. Metric correctness: hand confusion examples; micro-F == accuracy.
bool criterion_metrics(Checker& c) {
    Metrics m = score({{0, 0}, {0, 1}, {1, 1}, {1, 1}}, 2);
    c.expect(m.accuracy == 0.75, "accuracy 0.75");
    c.expect(m.micro_f == 0.75, "micro-F 0.75");
    c.expect(m.per_class[0].tp == 1 && m.per_class[0].fp == 0 &&
                 m.per_class[0].fn == 1,
             "confusion counts class A");
    c.expect(m.per_class[1].tp == 2 && m.per_class[1].fp == 1 &&
                 m.per_class[1].fn == 0,
             "confusion counts class B");
    c.expect(close(m.macro_f, 11.0 / 15.0, 1e-12), "macro-F 11/15");

    std::vector<std::pair<int, int>> constant;
    for (int i = 0; i < 7; ++i) constant.emplace_back(0, 0);
    for (int i = 0; i < 7; ++i) constant.emplace_back(1, 0);
    Metrics mc = score(constant, 2);
    c.expect(mc.micro_f == 0.5, "constant prediction micro-F 0.5");
    c.expect(close(mc.macro_f, 1.0 / 3.0, 1e-12),
             "constant prediction macro-F 1/3");

    Metrics perfect = score({{0, 0}, {1, 1}}, 2);
    c.expect(perfect.macro_f == 1.0 && perfect.micro_f == 1.0,
             "perfect prediction");

    // micro-F == accuracy on every row of a real protocol report.
    PipelineConfig pipeline = fixture_pipeline();
    SyntheticSpec spec;
    spec.classes = 4;
    spec.docs_per_class = 40;
    Corpus corpus = build_corpus(make_synthetic_docs(spec), pipeline);
    ProtocolConfig protocol;
    protocol.fractions = {0.2, 0.5, 0.8};
    protocol.trials = 4;
    protocol.base_seed = 7;
    EvalReport report =
        run_protocol(corpus, protocol, pipeline, IndexConfig{16});
    for (const EvalRow& row : report.rows)
        if (row.trial != EvalRow::kAverage)
            c.expect(row.metrics.micro_f == row.metrics.accuracy,
                     "micro-F != accuracy in a report row");
    return c.ok;
}

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<bool(Checker&)> fn;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> list = {
        {1, "TINY4 exactness (oracle-confirmed, 1e-9)", 1.0, criterion_tiny4},
        {2, "normalization sums on 100 random corpora (1e-12)", 30.0,
         criterion_normalization},
        {3, "B-tree agrees with sorted-map oracle (r=3,4,64)", 30.0,
         criterion_btree_oracle},
        {4, "height bound at r=64 up to d=1e5", 30.0, criterion_height_bound},
        {5, "tree path equals dense scan on 800 fixture docs", 30.0,
         criterion_dense_oracle},
        {6, "micro-F >= 0.60 at 80/20 over 10 trials", 120.0,
         criterion_quality_floor},
        {7, "micro-F(0.8) >= micro-F(0.1) over 10 trials", 300.0,
         criterion_trend},
        {8, "byte-identical eval CSV and model round-trip", 60.0,
         criterion_determinism},
        {9, "metric correctness and micro-F == accuracy", 60.0,
         criterion_metrics},
    };
    return list;
}

bool run_criterion(const Criterion& criterion) {
    Checker checker;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string error;
    try {
        ok = criterion.fn(checker);
    } catch (const std::exception& e) {
        ok = false;
        error = e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (ok && elapsed > criterion.budget_seconds) {
        ok = false;
        checker.first_failure = "exceeded runtime budget of " +
                                std::to_string(criterion.budget_seconds) + "s";
    }
    std::printf("%s criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL",
                criterion.id, criterion.name, elapsed,
                checker.first_failure.empty() && error.empty() ? "" : " -- ",
                !error.empty() ? error.c_str()
                               : checker.first_failure.c_str());
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

    bool all_ok = true;
    for (const Criterion& criterion : criteria()) {
        if (!selected.empty() &&
            std::find(selected.begin(), selected.end(), criterion.id) ==
                selected.end())
            continue;
        if (!run_criterion(criterion)) all_ok = false;
    }
    return all_ok ? 0 : 1;
}
