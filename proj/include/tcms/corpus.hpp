#ifndef TCMS_CORPUS_HPP
#define TCMS_CORPUS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace tcms {

/// Multiset of content terms for one document. Terms map to occurrence
/// counts (always >= 1); total_occurrences is the sum of all counts.
struct TermCounts {
    std::map<std::string, std::int64_t> counts;
    std::int64_t total_occurrences = 0;

    void add(const std::string& term, std::int64_t n = 1) {
        counts[term] += n;
        total_occurrences += n;
    }
    bool empty() const { return counts.empty(); }
    std::size_t distinct() const { return counts.size(); }
};

/// A document before preprocessing: identifier, class label, raw text.
struct RawDocument {
    std::string doc_id;
    std::string label;
    std::string text;
};

/// A preprocessed document: class_id indexes Corpus::class_names.
struct Document {
    std::string doc_id;
    int class_id = 0;
    TermCounts terms;
};

/// Labeled, preprocessed training collection. Class names are unique and
/// kept in canonical (lexicographic) order; class_id values index into it.
struct Corpus {
    std::vector<Document> documents;
    std::vector<std::string> class_names;

    std::int64_t doc_count() const {
        return static_cast<std::int64_t>(documents.size());
    }
    int class_count() const { return static_cast<int>(class_names.size()); }
};

/// Drops every class with fewer than min_docs documents and re-canonicalizes
/// class ids. min_docs <= 1 returns the corpus unchanged.
Corpus filter_small_classes(const Corpus& corpus, std::int64_t min_docs);

} // namespace tcms

#endif // TCMS_CORPUS_HPP
