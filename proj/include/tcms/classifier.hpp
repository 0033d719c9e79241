#ifndef TCMS_CLASSIFIER_HPP
#define TCMS_CLASSIFIER_HPP

#include <string>
#include <vector>

#include "tcms/btree_index.hpp"
#include "tcms/corpus.hpp"

namespace tcms {

/// Content terms of a query document, with m = number of distinct terms.
struct QueryTerms {
    TermCounts term_counts;

    std::size_t distinct_terms() const { return term_counts.distinct(); }
};

/// Accumulated per-class support plus how many query terms hit the
/// knowledgebase. All-zero supports happen exactly when nothing matched.
struct SupportVector {
    std::vector<double> supports;
    std::int64_t matched_terms = 0;

    bool all_zero() const {
        for (double s : supports)
            if (s != 0.0) return false;
        return true;
    }
};

/// Argmax outcome. confident is false when every support was zero and the
/// class fell out of the tie rule alone.
struct Prediction {
    int class_id = 0;
    std::string class_name;
    SupportVector supports;
    bool confident = false;
};

/// Per-class support: for every distinct query term found in the
/// knowledgebase, its query frequency times its class weight is added.
/// Each distinct term triggers exactly one index search.
SupportVector total_support(const KnowledgeBase& kb, const QueryTerms& query);

/// Class with maximum support; ties (including the all-zero case) resolve
/// to the smallest canonical class index.
Prediction classify(const KnowledgeBase& kb, const QueryTerms& query);

/// The k_prime best classes with their supports, descending, ties by
/// canonical class order. Throws InvalidKPrime outside [1, K].
std::vector<std::pair<int, double>> rank_classes(const KnowledgeBase& kb,
                                                 const QueryTerms& query,
                                                 int k_prime);

} // namespace tcms

#endif // TCMS_CLASSIFIER_HPP
