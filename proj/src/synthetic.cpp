#include "tcms/synthetic.hpp"

#include <cstdio>
#include <fstream>
#include <random>
#include <set>
#include <string>

#include "tcms/errors.hpp"

namespace fs = std::filesystem;

namespace tcms {
namespace {

constexpr std::string_view kConsonants = "bdfgklmnprstvz";
constexpr std::string_view kVowels = "aeiou";

std::string make_word(std::mt19937_64& rng) {
    std::size_t syllables = 2 + rng() % 3;
    std::string word;
    for (std::size_t s = 0; s < syllables; ++s) {
        word.push_back(kConsonants[rng() % kConsonants.size()]);
        word.push_back(kVowels[rng() % kVowels.size()]);
    }
    return word;
}

std::vector<std::string> make_vocab(std::mt19937_64& rng, int count,
                                    std::set<std::string>& taken) {
    std::vector<std::string> vocab;
    while (static_cast<int>(vocab.size()) < count) {
        std::string word = make_word(rng);
        if (taken.insert(word).second) vocab.push_back(word);
    }
    return vocab;
}

std::string class_label(int idx) {
    static const char* base[] = {"comp", "rec", "sci",  "talk",
                                 "misc", "soc", "alt",  "news"};
    std::string name = base[idx % 8];
    if (idx >= 8) name += std::to_string(idx / 8);
    return name;
}

} // namespace

std::vector<RawDocument> make_synthetic_docs(const SyntheticSpec& spec) {
    if (spec.classes < 2 || spec.docs_per_class < 1)
        throw Error("synthetic corpus needs >= 2 classes and >= 1 doc each");

    std::mt19937_64 rng(spec.seed);
    std::set<std::string> taken;
    std::vector<std::string> shared = make_vocab(rng, spec.shared_vocab, taken);
    std::vector<std::vector<std::string>> class_words;
    for (int c = 0; c < spec.classes; ++c)
        class_words.push_back(make_vocab(rng, spec.class_vocab, taken));

    std::vector<RawDocument> docs;
    docs.reserve(static_cast<std::size_t>(spec.classes) * spec.docs_per_class);
    const int span = spec.max_doc_tokens - spec.min_doc_tokens + 1;
    for (int c = 0; c < spec.classes; ++c) {
        for (int i = 0; i < spec.docs_per_class; ++i) {
            std::size_t tokens =
                static_cast<std::size_t>(spec.min_doc_tokens + rng() % span);
            std::string text;
            for (std::size_t t = 0; t < tokens; ++t) {
                const std::vector<std::string>* pool = &shared;
                if (static_cast<int>(rng() % 100) < spec.class_token_percent) {
                    int source = c;
                    if (spec.classes > 1 &&
                        static_cast<int>(rng() % 100) < spec.confusion_percent) {
                        source = static_cast<int>(rng() % (spec.classes - 1));
                        if (source >= c) ++source;
                    }
                    pool = &class_words[source];
                }
                if (!text.empty()) text += ' ';
                text += (*pool)[rng() % pool->size()];
            }
            char id[32];
            std::snprintf(id, sizeof(id), "%s_%03d", class_label(c).c_str(), i);
            docs.push_back(RawDocument{id, class_label(c), std::move(text)});
        }
    }
    return docs;
}

void write_corpus_dir(const std::vector<RawDocument>& docs,
                      const fs::path& dir) {
    for (const RawDocument& doc : docs) {
        fs::path class_dir = dir / doc.label;
        fs::create_directories(class_dir);
        std::ofstream out(class_dir / (doc.doc_id + ".txt"), std::ios::binary);
        if (!out)
            throw Error("cannot write fixture document: " +
                        (class_dir / doc.doc_id).string());
        out << doc.text << '\n';
    }
}

} // namespace tcms
