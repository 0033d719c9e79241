#include "tcms/tcr_weighting.hpp"

#include <algorithm>
#include <cassert>

#include "tcms/errors.hpp"

namespace tcms {

CorpusStats CorpusStats::from_corpus(const Corpus& corpus) {
    CorpusStats stats;
    stats.k_ = corpus.class_count();
    stats.n_ = corpus.doc_count();
    stats.docs_per_class_.assign(stats.k_, 0);
    for (const Document& doc : corpus.documents) {
        assert(doc.class_id >= 0 && doc.class_id < stats.k_);
        ++stats.docs_per_class_[doc.class_id];
        for (const auto& [term, count] : doc.terms.counts) {
            TermStats& ts = stats.terms_[term];
            if (ts.df.empty()) {
                ts.df.assign(stats.k_, 0);
                ts.tf.assign(stats.k_, 0);
            }
            ++ts.df[doc.class_id];
            ts.tf[doc.class_id] += count;
            ++ts.df_total;
            ts.tf_total += count;
        }
    }
    return stats;
}

const CorpusStats::TermStats* CorpusStats::find(std::string_view term) const {
    auto it = terms_.find(std::string(term));
    return it == terms_.end() ? nullptr : &it->second;
}

const CorpusStats::TermStats& CorpusStats::require(std::string_view term) const {
    const TermStats* ts = find(term);
    if (!ts)
        throw UnknownTerm("term not in training vocabulary: " +
                          std::string(term));
    return *ts;
}

const WeightRecord* WeightMatrix::find(std::string_view term) const {
    auto it = std::lower_bound(
        records.begin(), records.end(), term,
        [](const WeightRecord& rec, std::string_view t) { return rec.term < t; });
    if (it == records.end() || it->term != term) return nullptr;
    return &*it;
}

double class_weight(const CorpusStats& stats, int class_idx) {
    assert(class_idx >= 0 && class_idx < stats.class_count());
    assert(stats.doc_count() > 0);
    return static_cast<double>(stats.docs_per_class()[class_idx]) /
           static_cast<double>(stats.doc_count());
}

double class_term_weight(const CorpusStats& stats, std::string_view term,
                         int class_idx) {
    const auto& ts = stats.require(term);
    return static_cast<double>(ts.df[class_idx]) /
           static_cast<double>(ts.df_total);
}

double class_term_density(const CorpusStats& stats, std::string_view term,
                          int class_idx) {
    const auto& ts = stats.require(term);
    return static_cast<double>(ts.tf[class_idx]) /
           static_cast<double>(ts.tf_total);
}

double tcr(const CorpusStats& stats, std::string_view term, int class_idx) {
    return class_weight(stats, class_idx) *
           class_term_weight(stats, term, class_idx) *
           class_term_density(stats, term, class_idx);
}

WeightMatrix compute_weight_matrix(const CorpusStats& stats,
                                   const std::vector<std::string>& vocabulary) {
    WeightMatrix matrix;
    matrix.class_count = stats.class_count();
    matrix.records.reserve(vocabulary.size());
    for (const std::string& term : vocabulary) {
        WeightRecord rec;
        rec.term = term;
        rec.weights.resize(stats.class_count());
        for (int j = 0; j < stats.class_count(); ++j)
            rec.weights[j] = tcr(stats, term, j);
        matrix.records.push_back(std::move(rec));
    }
    return matrix;
}

WeightMatrix compute_weight_matrix(const Corpus& corpus,
                                   const std::vector<std::string>& vocabulary) {
    return compute_weight_matrix(CorpusStats::from_corpus(corpus), vocabulary);
}

} // namespace tcms
