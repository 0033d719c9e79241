// Shared test fixtures: the TINY4 toy corpus, corpus builders that bypass
// the text pipeline, and a seeded random-corpus generator for property
// tests.
#ifndef TCMS_TESTS_FIXTURES_HPP
#define TCMS_TESTS_FIXTURES_HPP

#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tcms/corpus.hpp"
#include "tcms/text_pipeline.hpp"

#include "rational_oracle.hpp"

namespace tcms::testing {

/// TINY4: classes A and B, two documents each.
inline const std::vector<std::pair<std::string, std::string>>& tiny4_raw() {
    static const std::vector<std::pair<std::string, std::string>> docs = {
        {"A", "alpha alpha beta"},
        {"A", "alpha gamma"},
        {"B", "beta beta gamma"},
        {"B", "gamma gamma gamma beta"},
    };
    return docs;
}

/// The pipeline TINY4 is defined under: no stemming, no stopwords,
/// min_token_length = 1.
inline PipelineConfig tiny4_pipeline() {
    PipelineConfig config;
    config.min_token_length = 1;
    config.stemming_enabled = false;
    config.stopwords.clear();
    config.min_doc_frequency = 1;
    return config;
}

inline std::vector<std::string> split_tokens(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

inline OracleCorpus tiny4_oracle() {
    OracleCorpus corpus;
    for (const auto& [cls, text] : tiny4_raw())
        corpus.push_back(OracleDoc{cls, split_tokens(text)});
    return corpus;
}

/// Builds a library Corpus directly from token lists, skipping the text
/// pipeline, so weighting tests are independent of tokenizer behavior.
inline Corpus corpus_from_tokens(const OracleCorpus& docs) {
    Corpus corpus;
    std::map<std::string, int> ids;
    for (const OracleDoc& d : docs) ids.emplace(d.class_name, 0);
    int next = 0;
    for (auto& [name, id] : ids) {
        id = next++;
        corpus.class_names.push_back(name);
    }
    int doc_no = 0;
    for (const OracleDoc& d : docs) {
        Document doc;
        doc.doc_id = "doc" + std::to_string(doc_no++);
        doc.class_id = ids.at(d.class_name);
        for (const std::string& t : d.tokens) doc.terms.add(t);
        corpus.documents.push_back(std::move(doc));
    }
    return corpus;
}

inline Corpus tiny4_corpus() { return corpus_from_tokens(tiny4_oracle()); }

/// Random corpus: class count, document count and vocabulary size drawn
/// from the given ranges; every document gets 3..40 tokens and every class
/// at least min_docs_per_class documents.
inline OracleCorpus random_corpus(std::mt19937_64& rng, int min_classes = 2,
                                  int max_classes = 10, int min_docs = 10,
                                  int max_docs = 200, int min_vocab = 20,
                                  int max_vocab = 500,
                                  int min_docs_per_class = 2) {
    const int classes =
        min_classes + static_cast<int>(rng() % (max_classes - min_classes + 1));
    const int docs =
        std::max(min_docs + static_cast<int>(rng() % (max_docs - min_docs + 1)),
                 classes * min_docs_per_class);
    const int vocab =
        min_vocab + static_cast<int>(rng() % (max_vocab - min_vocab + 1));

    std::vector<std::string> terms;
    terms.reserve(vocab);
    for (int t = 0; t < vocab; ++t) terms.push_back("t" + std::to_string(t));

    OracleCorpus corpus;
    for (int i = 0; i < docs; ++i) {
        // Round-robin the first classes*min_docs_per_class docs so no class
        // is ever empty or singleton.
        int cls = i < classes * min_docs_per_class
                      ? i % classes
                      : static_cast<int>(rng() % classes);
        OracleDoc doc;
        doc.class_name = "c" + std::to_string(cls);
        std::size_t len = 3 + rng() % 38;
        for (std::size_t t = 0; t < len; ++t)
            doc.tokens.push_back(terms[rng() % terms.size()]);
        corpus.push_back(std::move(doc));
    }
    return corpus;
}

} // namespace tcms::testing

#endif // TCMS_TESTS_FIXTURES_HPP
