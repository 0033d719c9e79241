#ifndef TCMS_TCR_WEIGHTING_HPP
#define TCMS_TCR_WEIGHTING_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tcms/corpus.hpp"

namespace tcms {

/// Count aggregates a weight computation needs: per-class document counts,
/// and per-term per-class document frequencies and occurrence counts.
class CorpusStats {
public:
    struct TermStats {
        std::vector<std::int64_t> df; // documents of class j containing term
        std::vector<std::int64_t> tf; // occurrences of term in class j
        std::int64_t df_total = 0;
        std::int64_t tf_total = 0;
    };

    static CorpusStats from_corpus(const Corpus& corpus);

    int class_count() const { return k_; }
    std::int64_t doc_count() const { return n_; }
    const std::vector<std::int64_t>& docs_per_class() const {
        return docs_per_class_;
    }

    /// Stats for a term, or nullptr when the term never occurred.
    const TermStats* find(std::string_view term) const;

    /// Same, but throws UnknownTerm for absent terms.
    const TermStats& require(std::string_view term) const;

private:
    int k_ = 0;
    std::int64_t n_ = 0;
    std::vector<std::int64_t> docs_per_class_;
    std::unordered_map<std::string, TermStats> terms_;
};

/// Per-term relevance weights, one entry per class.
struct WeightRecord {
    std::string term;
    std::vector<double> weights;
};

/// All vocabulary records, sorted by term.
struct WeightMatrix {
    std::vector<WeightRecord> records;
    int class_count = 0;

    std::int64_t term_count() const {
        return static_cast<std::int64_t>(records.size());
    }
    /// Binary search over the sorted records; nullptr when absent.
    const WeightRecord* find(std::string_view term) const;
};

/// Share of training documents belonging to class j.
double class_weight(const CorpusStats& stats, int class_idx);

/// Share of the documents containing the term that belong to class j.
double class_term_weight(const CorpusStats& stats, std::string_view term,
                         int class_idx);

/// Share of the term's occurrences that fall inside class j.
double class_term_density(const CorpusStats& stats, std::string_view term,
                          int class_idx);

/// Term-class relevance: the product of the three ratios above.
double tcr(const CorpusStats& stats, std::string_view term, int class_idx);

/// One WeightRecord per vocabulary term, weights[j] = tcr(term, j),
/// sorted by term.
WeightMatrix compute_weight_matrix(const CorpusStats& stats,
                                   const std::vector<std::string>& vocabulary);
WeightMatrix compute_weight_matrix(const Corpus& corpus,
                                   const std::vector<std::string>& vocabulary);

} // namespace tcms

#endif // TCMS_TCR_WEIGHTING_HPP
