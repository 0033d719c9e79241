#ifndef TCMS_CORPUS_IO_HPP
#define TCMS_CORPUS_IO_HPP

#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "tcms/corpus.hpp"
#include "tcms/text_pipeline.hpp"

namespace tcms {

/// Loader output: the preprocessed corpus plus non-fatal warnings
/// (empty classes, skipped entries, malformed lines).
struct CorpusLoadResult {
    Corpus corpus;
    std::vector<std::string> warnings;
    std::int64_t skipped_lines = 0; // jsonl only
};

/// Directory-per-class convention: immediate subdirectories are class
/// names, every regular file inside is one document. Deterministic order
/// (class, then filename, both lexicographic). Nested directories are
/// ignored with a warning; empty classes are dropped with a warning.
/// Throws NoClassesFound when nothing usable exists.
CorpusLoadResult load_corpus_dir(const std::filesystem::path& path,
                                 const PipelineConfig& config);

/// JSON-lines loader: each line an object with string fields "label" and
/// "text". Malformed lines are skipped and counted; more than 1% malformed
/// throws TooManyMalformedLines.
CorpusLoadResult load_corpus_jsonl(const std::filesystem::path& path,
                                   const PipelineConfig& config);

/// Stopword file: UTF-8, one token per line, '#' lines are comments,
/// entries case-normalized on load.
std::set<std::string> load_stopword_file(const std::filesystem::path& path);

/// The bundled English stopword list (also shipped as
/// data/stopwords_english.txt).
const std::set<std::string>& default_stopwords();

} // namespace tcms

#endif // TCMS_CORPUS_IO_HPP
