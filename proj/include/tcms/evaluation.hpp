#ifndef TCMS_EVALUATION_HPP
#define TCMS_EVALUATION_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tcms/btree_index.hpp"
#include "tcms/corpus.hpp"
#include "tcms/text_pipeline.hpp"

namespace tcms {

/// Train/test partition request. Classes smaller than min_class_docs are
/// dropped before splitting.
struct SplitSpec {
    double train_fraction = 0.5;
    std::uint64_t seed = 0;
    bool stratified = true;
    std::int64_t min_class_docs = 0;
};

/// Per-class confusion counts for one scored prediction set.
struct ClassCounts {
    std::int64_t tp = 0;
    std::int64_t fp = 0;
    std::int64_t fn = 0;
};

/// Macro/micro precision, recall and F over one prediction set. Macro
/// averages run over classes present in the test set; 0/0 counts as 0.
struct Metrics {
    std::vector<ClassCounts> per_class;
    double macro_precision = 0, macro_recall = 0, macro_f = 0;
    double micro_precision = 0, micro_recall = 0, micro_f = 0;
    double accuracy = 0;
};

/// One report row; trial is kAverage for per-fraction averages.
struct EvalRow {
    static constexpr int kAverage = -1;
    double fraction = 0;
    int trial = 0;
    Metrics metrics;
};

struct EvalReport {
    std::vector<EvalRow> rows;

    /// header: fraction,trial,macro_p,macro_r,macro_f,micro_p,micro_r,
    /// micro_f,accuracy; averages print trial as "avg"; shortest
    /// round-trip decimals throughout.
    std::string to_csv() const;
    /// Fixed-width human-readable table.
    std::string to_text() const;
};

/// Seeded deterministic train/test split. Stratified mode sends
/// ceil(fraction * class_size) documents of every class to train, keeping
/// at least one per class on each side. Throws CorpusTooSmall when fewer
/// than 2 classes remain after filtering or any class has fewer than 2
/// documents.
std::pair<Corpus, Corpus> split(const Corpus& corpus, const SplitSpec& spec);

/// Confusion-matrix metrics over (true class, predicted class) pairs.
Metrics score(const std::vector<std::pair<int, int>>& truth_and_prediction,
              int class_count);

struct ProtocolConfig {
    std::vector<double> fractions;
    int trials = 1;
    std::uint64_t base_seed = 0;
    std::int64_t min_class_docs = 0;
};

/// The full experiment grid: for every fraction and trial (seed =
/// base_seed + trial index) split, train a complete model on the train
/// side, classify every test document and score. Emits per-trial rows
/// followed by a per-fraction average row. Deterministic given base_seed.
EvalReport run_protocol(const Corpus& corpus, const ProtocolConfig& protocol,
                        const PipelineConfig& pipeline, IndexConfig index);

} // namespace tcms

#endif // TCMS_EVALUATION_HPP
