#ifndef TCMS_MODEL_HPP
#define TCMS_MODEL_HPP

#include <string>
#include <vector>

#include "tcms/btree_index.hpp"
#include "tcms/classifier.hpp"
#include "tcms/corpus.hpp"
#include "tcms/text_pipeline.hpp"

namespace tcms {

/// A trained model: the indexed weight table plus the pipeline snapshot
/// queries must be preprocessed with.
struct TrainedModel {
    PipelineConfig pipeline;
    IndexConfig index;
    KnowledgeBase kb;

    const std::vector<std::string>& class_names() const {
        return kb.class_names;
    }
    int class_count() const { return kb.class_count(); }
    std::int64_t term_count() const { return kb.term_count(); }

    /// Preprocess raw text with the persisted pipeline and classify.
    Prediction classify_text(std::string_view raw_text) const;
};

/// Vocabulary -> weights -> index over a preprocessed corpus. Requires at
/// least 2 classes; vocabulary pruning failures propagate EmptyVocabulary.
TrainedModel train_model(const Corpus& corpus, const PipelineConfig& pipeline,
                         IndexConfig index);

} // namespace tcms

#endif // TCMS_MODEL_HPP
