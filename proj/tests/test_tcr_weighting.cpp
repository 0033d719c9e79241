#include <doctest.h>

#include <cmath>
#include <random>

#include "tcms/errors.hpp"
#include "tcms/tcr_weighting.hpp"

#include "support/fixtures.hpp"
#include "support/rational_oracle.hpp"

using namespace tcms;
using namespace tcms::testing;

namespace {

bool close(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

} // namespace

// The frozen TINY4 values are confirmed by the exact-rational brute force
// before the implementation is held to them.
TEST_CASE("oracle: TINY4 hand values as exact rationals") {
    OracleCorpus tiny = tiny4_oracle();

    CHECK(oracle_class_weight(tiny, "A") == Rational(1, 2));
    CHECK(oracle_class_weight(tiny, "B") == Rational(1, 2));

    CHECK(oracle_class_term_weight(tiny, "beta", "A") == Rational(1, 3));
    CHECK(oracle_class_term_weight(tiny, "beta", "B") == Rational(2, 3));
    CHECK(oracle_class_term_weight(tiny, "alpha", "A") == Rational(1, 1));
    CHECK(oracle_class_term_weight(tiny, "alpha", "B") == Rational(0, 1));

    CHECK(oracle_class_term_density(tiny, "beta", "A") == Rational(1, 4));
    CHECK(oracle_class_term_density(tiny, "beta", "B") == Rational(3, 4));
    CHECK(oracle_class_term_density(tiny, "gamma", "A") == Rational(1, 5));
    CHECK(oracle_class_term_density(tiny, "gamma", "B") == Rational(4, 5));

    CHECK(oracle_tcr(tiny, "alpha", "A") == Rational(1, 2));
    CHECK(oracle_tcr(tiny, "alpha", "B") == Rational(0, 1));
    CHECK(oracle_tcr(tiny, "beta", "A") == Rational(1, 24));
    CHECK(oracle_tcr(tiny, "beta", "B") == Rational(1, 4));
    CHECK(oracle_tcr(tiny, "gamma", "A") == Rational(1, 30));
    CHECK(oracle_tcr(tiny, "gamma", "B") == Rational(4, 15));

    // Query supports used by the classifier tests.
    auto ts1 = oracle_total_support(tiny, {"alpha", "beta"});
    CHECK(ts1[0] == Rational(13, 24));
    CHECK(ts1[1] == Rational(1, 4));
    auto ts2 = oracle_total_support(tiny, {"beta", "gamma", "gamma"});
    CHECK(ts2[0] == Rational(13, 120));
    CHECK(ts2[1] == Rational(47, 60));
}

TEST_CASE("implementation matches TINY4 within 1e-9") {
    Corpus corpus = tiny4_corpus();
    CorpusStats stats = CorpusStats::from_corpus(corpus);

    CHECK(close(class_weight(stats, 0), 0.5, 1e-9));
    CHECK(close(class_weight(stats, 1), 0.5, 1e-9));

    CHECK(close(class_term_weight(stats, "beta", 0), 1.0 / 3.0, 1e-9));
    CHECK(close(class_term_weight(stats, "beta", 1), 2.0 / 3.0, 1e-9));
    CHECK(close(class_term_weight(stats, "alpha", 0), 1.0, 1e-9));
    CHECK(close(class_term_weight(stats, "alpha", 1), 0.0, 1e-9));

    CHECK(close(class_term_density(stats, "beta", 0), 0.25, 1e-9));
    CHECK(close(class_term_density(stats, "beta", 1), 0.75, 1e-9));
    CHECK(close(class_term_density(stats, "gamma", 1), 0.8, 1e-9));

    CHECK(close(tcr(stats, "alpha", 0), 0.5, 1e-9));
    CHECK(close(tcr(stats, "alpha", 1), 0.0, 1e-9));
    CHECK(close(tcr(stats, "beta", 0), 1.0 / 24.0, 1e-9));
    CHECK(close(tcr(stats, "beta", 1), 0.25, 1e-9));

    WeightMatrix matrix =
        compute_weight_matrix(corpus, {"alpha", "beta", "gamma"});
    REQUIRE(matrix.term_count() == 3);
    CHECK(matrix.records[0].term == "alpha");
    CHECK(matrix.records[2].term == "gamma");
    CHECK(close(matrix.records[2].weights[0], 1.0 / 30.0, 1e-9));
    CHECK(close(matrix.records[2].weights[1], 4.0 / 15.0, 1e-9));
}

TEST_CASE("unknown terms rejected") {
    CorpusStats stats = CorpusStats::from_corpus(tiny4_corpus());
    CHECK_THROWS_AS(class_term_weight(stats, "delta", 0), UnknownTerm);
    CHECK_THROWS_AS(class_term_density(stats, "delta", 1), UnknownTerm);
    CHECK_THROWS_AS(tcr(stats, "delta", 0), UnknownTerm);
}

TEST_CASE("single-class corpus weights are all 1") {
    Corpus corpus = corpus_from_tokens(
        {{"only", {"x", "y"}}, {"only", {"x"}}});
    CorpusStats stats = CorpusStats::from_corpus(corpus);
    CHECK(class_weight(stats, 0) == 1.0);
    WeightMatrix matrix = compute_weight_matrix(corpus, {"x", "y"});
    for (const WeightRecord& rec : matrix.records) {
        REQUIRE(rec.weights.size() == 1);
        CHECK(rec.weights[0] == 1.0);
    }
}

TEST_CASE("term exclusive to a class gets exactly the class weight") {
    // Balanced two-class corpus; "only" lives entirely in class a.
    Corpus corpus = corpus_from_tokens({{"a", {"only", "shared"}},
                                        {"a", {"only"}},
                                        {"b", {"shared"}},
                                        {"b", {"shared", "shared"}}});
    CorpusStats stats = CorpusStats::from_corpus(corpus);
    CHECK(tcr(stats, "only", 0) == class_weight(stats, 0));
    CHECK(tcr(stats, "only", 1) == 0.0);
}

TEST_CASE("oracle equivalence on 100 random corpora within 1e-12") {
    std::mt19937_64 rng(4242);
    for (int round = 0; round < 100; ++round) {
        OracleCorpus oracle_docs = random_corpus(rng, 2, 5, 8, 30, 10, 60);
        Corpus corpus = corpus_from_tokens(oracle_docs);
        std::vector<std::string> classes = oracle_classes(oracle_docs);
        REQUIRE(classes == corpus.class_names);

        std::vector<std::string> vocabulary = oracle_vocabulary(oracle_docs);
        WeightMatrix matrix = compute_weight_matrix(corpus, vocabulary);
        REQUIRE(matrix.term_count() ==
                static_cast<std::int64_t>(vocabulary.size()));
        for (const WeightRecord& rec : matrix.records)
            for (std::size_t j = 0; j < classes.size(); ++j) {
                double expected =
                    oracle_tcr(oracle_docs, rec.term, classes[j]).to_double();
                CHECK(close(rec.weights[j], expected, 1e-12));
            }
    }
}

TEST_CASE("normalization, bounds and zero structure") {
    std::mt19937_64 rng(99);
    for (int round = 0; round < 40; ++round) {
        Corpus corpus = corpus_from_tokens(random_corpus(rng, 2, 6, 10, 60, 10, 80));
        CorpusStats stats = CorpusStats::from_corpus(corpus);
        const int k = stats.class_count();

        double cw_sum = 0;
        for (int j = 0; j < k; ++j) cw_sum += class_weight(stats, j);
        CHECK(close(cw_sum, 1.0, 1e-12));

        PipelineConfig config;
        config.min_doc_frequency = 1;
        std::vector<std::string> vocabulary = build_vocabulary(corpus, config);
        for (const std::string& term : vocabulary) {
            double ctw_sum = 0, ctd_sum = 0;
            bool any_positive = false;
            for (int j = 0; j < k; ++j) {
                double w = class_term_weight(stats, term, j);
                double d = class_term_density(stats, term, j);
                double t = tcr(stats, term, j);
                ctw_sum += w;
                ctd_sum += d;
                CHECK(t >= 0.0);
                CHECK(t <= class_weight(stats, j) + 1e-15);
                if (t > 0) any_positive = true;
                // zero structure: tcr vanishes exactly with df
                CHECK((t == 0.0) == (stats.require(term).df[j] == 0));
            }
            CHECK(close(ctw_sum, 1.0, 1e-12));
            CHECK(close(ctd_sum, 1.0, 1e-12));
            CHECK(any_positive);
        }
    }
}
