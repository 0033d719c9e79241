#ifndef TCMS_SYNTHETIC_HPP
#define TCMS_SYNTHETIC_HPP

#include <cstdint>
#include <filesystem>
#include <vector>

#include "tcms/corpus.hpp"

namespace tcms {

/// Parameters for the offline newsgroup-style fixture: each class draws
/// roughly half its tokens from a private vocabulary (with a little
/// cross-class confusion) and the rest from a shared pool.
struct SyntheticSpec {
    int classes = 4;
    int docs_per_class = 200;
    std::uint64_t seed = 977;
    int shared_vocab = 150;
    int class_vocab = 40;
    int min_doc_tokens = 10;
    int max_doc_tokens = 40;
    int class_token_percent = 35;  // chance a token is class-flavored
    int confusion_percent = 40;    // chance a class token leaks from another class
};

/// Deterministic synthetic corpus; identical spec always yields identical
/// documents.
std::vector<RawDocument> make_synthetic_docs(const SyntheticSpec& spec = {});

/// Writes raw documents using the directory-per-class layout consumed by
/// load_corpus_dir.
void write_corpus_dir(const std::vector<RawDocument>& docs,
                      const std::filesystem::path& dir);

} // namespace tcms

#endif // TCMS_SYNTHETIC_HPP
