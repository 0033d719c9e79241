#ifndef TCMS_TEXT_PIPELINE_HPP
#define TCMS_TEXT_PIPELINE_HPP

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tcms/corpus.hpp"

namespace tcms {

/// Knobs for turning raw text into content terms. Stopwords must be stored
/// in the same case normalization as tokens.
struct PipelineConfig {
    bool lowercase = true;
    int min_token_length = 2;
    bool drop_numeric = true;
    std::set<std::string> stopwords;
    bool stemming_enabled = true;
    std::int64_t min_doc_frequency = 1; // vocabulary pruning threshold
};

/// Splits raw text into maximal runs of letters (plus digits when
/// drop_numeric is false), case-normalizes, and drops tokens shorter than
/// min_token_length. Order preserved; any input yields a token list.
std::vector<std::string> tokenize(std::string_view raw_text,
                                  const PipelineConfig& config);

/// Removes tokens found in config.stopwords, preserving order. Tokens are
/// expected to be case-normalized already.
std::vector<std::string> filter_stopwords(std::vector<std::string> tokens,
                                          const PipelineConfig& config);

/// tokenize -> filter_stopwords -> (stem when enabled), counted into a
/// term multiset. An empty result is valid.
TermCounts preprocess_document(std::string_view raw_text,
                               const PipelineConfig& config);

/// Preprocesses raw documents into a Corpus with canonical (lexicographic)
/// class ordering. Labels need not be pre-sorted or unique.
Corpus build_corpus(const std::vector<RawDocument>& raw_docs,
                    const PipelineConfig& config);

/// All terms whose corpus-wide document frequency reaches
/// config.min_doc_frequency, sorted lexicographically.
/// Throws EmptyVocabulary when nothing survives pruning.
std::vector<std::string> build_vocabulary(const Corpus& corpus,
                                          const PipelineConfig& config);

} // namespace tcms

#endif // TCMS_TEXT_PIPELINE_HPP
