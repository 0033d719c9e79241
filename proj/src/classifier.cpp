#include "tcms/classifier.hpp"

#include <algorithm>
#include <stdexcept>

#include "tcms/errors.hpp"

namespace tcms {

SupportVector total_support(const KnowledgeBase& kb, const QueryTerms& query) {
    if (kb.class_count() < 2)
        throw std::invalid_argument(
            "classification needs a knowledgebase with at least 2 classes");
    SupportVector result;
    result.supports.assign(kb.class_count(), 0.0);
    for (const auto& [term, freq] : query.term_counts.counts) {
        const WeightRecord* rec = kb.search(term);
        if (!rec) continue;
        ++result.matched_terms;
        const double f = static_cast<double>(freq);
        for (int j = 0; j < kb.class_count(); ++j)
            result.supports[j] += f * rec->weights[j];
    }
    return result;
}

Prediction classify(const KnowledgeBase& kb, const QueryTerms& query) {
    Prediction pred;
    pred.supports = total_support(kb, query);
    int best = 0;
    for (int j = 1; j < kb.class_count(); ++j)
        if (pred.supports.supports[j] > pred.supports.supports[best]) best = j;
    pred.class_id = best;
    pred.class_name = kb.class_names[best];
    pred.confident = !pred.supports.all_zero();
    return pred;
}

std::vector<std::pair<int, double>> rank_classes(const KnowledgeBase& kb,
                                                 const QueryTerms& query,
                                                 int k_prime) {
    if (k_prime < 1 || k_prime > kb.class_count())
        throw InvalidKPrime("k' must be in [1, " +
                            std::to_string(kb.class_count()) + "], got " +
                            std::to_string(k_prime));
    SupportVector sv = total_support(kb, query);
    std::vector<std::pair<int, double>> ranked;
    ranked.reserve(kb.class_count());
    for (int j = 0; j < kb.class_count(); ++j)
        ranked.emplace_back(j, sv.supports[j]);
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const auto& a, const auto& b) {
                         return a.second > b.second;
                     });
    ranked.resize(k_prime);
    return ranked;
}

} // namespace tcms
