#include "tcms/text_pipeline.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "tcms/errors.hpp"
#include "tcms/porter_stemmer.hpp"

namespace tcms {
namespace {

bool is_alpha(unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool is_digit(unsigned char c) { return c >= '0' && c <= '9'; }

char fold(unsigned char c, bool lowercase) {
    if (lowercase && c >= 'A' && c <= 'Z')
        return static_cast<char>(c - 'A' + 'a');
    return static_cast<char>(c);
}

} // namespace

std::vector<std::string> tokenize(std::string_view raw_text,
                                  const PipelineConfig& config) {
    std::vector<std::string> tokens;
    std::string current;
    auto flush = [&] {
        if (static_cast<int>(current.size()) >= config.min_token_length)
            tokens.push_back(current);
        current.clear();
    };
    for (unsigned char c : raw_text) {
        bool token_char = is_alpha(c) || (!config.drop_numeric && is_digit(c));
        if (token_char)
            current.push_back(fold(c, config.lowercase));
        else if (!current.empty())
            flush();
    }
    if (!current.empty()) flush();
    return tokens;
}

std::vector<std::string> filter_stopwords(std::vector<std::string> tokens,
                                          const PipelineConfig& config) {
    if (config.stopwords.empty()) return tokens;
    std::erase_if(tokens, [&](const std::string& t) {
        return config.stopwords.count(t) != 0;
    });
    return tokens;
}

TermCounts preprocess_document(std::string_view raw_text,
                               const PipelineConfig& config) {
    std::vector<std::string> tokens =
        filter_stopwords(tokenize(raw_text, config), config);
    TermCounts result;
    for (std::string& token : tokens) {
        if (config.stemming_enabled)
            result.add(porter_stem(token));
        else
            result.add(token);
    }
    return result;
}

Corpus build_corpus(const std::vector<RawDocument>& raw_docs,
                    const PipelineConfig& config) {
    Corpus corpus;
    std::map<std::string, int> class_ids; // sorted -> canonical order
    for (const RawDocument& doc : raw_docs)
        class_ids.emplace(doc.label, 0);
    int next_id = 0;
    for (auto& [name, id] : class_ids) {
        id = next_id++;
        corpus.class_names.push_back(name);
    }
    corpus.documents.reserve(raw_docs.size());
    for (const RawDocument& doc : raw_docs) {
        corpus.documents.push_back(Document{
            doc.doc_id, class_ids.at(doc.label),
            preprocess_document(doc.text, config)});
    }
    return corpus;
}

std::vector<std::string> build_vocabulary(const Corpus& corpus,
                                          const PipelineConfig& config) {
    std::unordered_map<std::string, std::int64_t> doc_frequency;
    for (const Document& doc : corpus.documents)
        for (const auto& [term, count] : doc.terms.counts)
            ++doc_frequency[term];

    std::vector<std::string> vocabulary;
    for (const auto& [term, df] : doc_frequency)
        if (df >= config.min_doc_frequency) vocabulary.push_back(term);
    if (vocabulary.empty())
        throw EmptyVocabulary("no term survives pruning at min_doc_frequency=" +
                              std::to_string(config.min_doc_frequency));
    std::sort(vocabulary.begin(), vocabulary.end());
    return vocabulary;
}

Corpus filter_small_classes(const Corpus& corpus, std::int64_t min_docs) {
    if (min_docs <= 1) return corpus;
    std::vector<std::int64_t> sizes(corpus.class_names.size(), 0);
    for (const Document& doc : corpus.documents) ++sizes[doc.class_id];

    std::vector<int> remap(corpus.class_names.size(), -1);
    Corpus filtered;
    for (std::size_t j = 0; j < corpus.class_names.size(); ++j) {
        if (sizes[j] >= min_docs) {
            remap[j] = static_cast<int>(filtered.class_names.size());
            filtered.class_names.push_back(corpus.class_names[j]);
        }
    }
    for (const Document& doc : corpus.documents) {
        if (remap[doc.class_id] >= 0) {
            filtered.documents.push_back(doc);
            filtered.documents.back().class_id = remap[doc.class_id];
        }
    }
    return filtered;
}

} // namespace tcms
