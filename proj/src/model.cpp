#include "tcms/model.hpp"

#include <stdexcept>

#include "tcms/tcr_weighting.hpp"

namespace tcms {

Prediction TrainedModel::classify_text(std::string_view raw_text) const {
    return classify(kb, QueryTerms{preprocess_document(raw_text, pipeline)});
}

TrainedModel train_model(const Corpus& corpus, const PipelineConfig& pipeline,
                         IndexConfig index) {
    if (corpus.class_count() < 2)
        throw std::invalid_argument(
            "training requires at least 2 classes, got " +
            std::to_string(corpus.class_count()));
    std::vector<std::string> vocabulary = build_vocabulary(corpus, pipeline);
    WeightMatrix matrix = compute_weight_matrix(corpus, vocabulary);
    return TrainedModel{
        pipeline, index,
        KnowledgeBase::build(matrix, index, corpus.class_names)};
}

} // namespace tcms
