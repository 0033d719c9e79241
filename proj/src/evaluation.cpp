#include "tcms/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>

#include "tcms/classifier.hpp"
#include "tcms/errors.hpp"
#include "tcms/numfmt.hpp"
#include "tcms/tcr_weighting.hpp"

namespace tcms {
namespace {

// Fisher-Yates with explicit draws so the partition is identical on every
// platform for the same seed.
void shuffle_indices(std::vector<std::size_t>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[rng() % i]);
}

// ceil(fraction * size) guarded against the product landing a few ulps
// above an exact integer.
std::int64_t train_quota(double fraction, std::int64_t size) {
    double raw = fraction * static_cast<double>(size);
    auto quota = static_cast<std::int64_t>(std::ceil(raw - 1e-9));
    return std::clamp<std::int64_t>(quota, 1, size - 1);
}

double safe_div(double num, double den) { return den == 0.0 ? 0.0 : num / den; }

} // namespace

std::pair<Corpus, Corpus> split(const Corpus& corpus, const SplitSpec& spec) {
    if (!(spec.train_fraction > 0.0 && spec.train_fraction < 1.0))
        throw std::invalid_argument("train_fraction must be in (0, 1)");

    Corpus filtered = filter_small_classes(corpus, spec.min_class_docs);
    if (filtered.class_count() < 2)
        throw CorpusTooSmall("fewer than 2 classes remain after dropping "
                             "classes below " +
                             std::to_string(spec.min_class_docs) + " documents");
    std::vector<std::int64_t> class_sizes(filtered.class_names.size(), 0);
    for (const Document& doc : filtered.documents) ++class_sizes[doc.class_id];
    for (std::size_t j = 0; j < class_sizes.size(); ++j)
        if (class_sizes[j] < 2)
            throw CorpusTooSmall("class " + filtered.class_names[j] +
                                 " has fewer than 2 documents");

    std::mt19937_64 rng(spec.seed);
    std::vector<bool> in_train(filtered.documents.size(), false);
    if (spec.stratified) {
        for (int j = 0; j < filtered.class_count(); ++j) {
            std::vector<std::size_t> members;
            for (std::size_t i = 0; i < filtered.documents.size(); ++i)
                if (filtered.documents[i].class_id == j) members.push_back(i);
            shuffle_indices(members, rng);
            std::int64_t quota =
                train_quota(spec.train_fraction,
                            static_cast<std::int64_t>(members.size()));
            for (std::int64_t k = 0; k < quota; ++k) in_train[members[k]] = true;
        }
    } else {
        std::vector<std::size_t> all(filtered.documents.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        shuffle_indices(all, rng);
        std::int64_t quota = train_quota(
            spec.train_fraction, static_cast<std::int64_t>(all.size()));
        for (std::int64_t k = 0; k < quota; ++k) in_train[all[k]] = true;
    }

    Corpus train, test;
    train.class_names = filtered.class_names;
    test.class_names = filtered.class_names;
    for (std::size_t i = 0; i < filtered.documents.size(); ++i)
        (in_train[i] ? train : test).documents.push_back(filtered.documents[i]);
    return {std::move(train), std::move(test)};
}

Metrics score(const std::vector<std::pair<int, int>>& truth_and_prediction,
              int class_count) {
    if (truth_and_prediction.empty())
        throw std::invalid_argument("score needs at least one prediction");

    Metrics m;
    m.per_class.assign(class_count, ClassCounts{});
    std::int64_t correct = 0;
    for (const auto& [truth, pred] : truth_and_prediction) {
        if (truth == pred) {
            ++m.per_class[truth].tp;
            ++correct;
        } else {
            ++m.per_class[truth].fn;
            ++m.per_class[pred].fp;
        }
    }

    double sum_p = 0, sum_r = 0, sum_f = 0;
    int present = 0;
    std::int64_t tp_all = 0, fp_all = 0, fn_all = 0;
    for (const ClassCounts& cc : m.per_class) {
        tp_all += cc.tp;
        fp_all += cc.fp;
        fn_all += cc.fn;
        if (cc.tp + cc.fn == 0) continue; // class absent from the test set
        ++present;
        double p = safe_div(static_cast<double>(cc.tp),
                            static_cast<double>(cc.tp + cc.fp));
        double r = safe_div(static_cast<double>(cc.tp),
                            static_cast<double>(cc.tp + cc.fn));
        sum_p += p;
        sum_r += r;
        sum_f += safe_div(2.0 * p * r, p + r);
    }
    m.macro_precision = safe_div(sum_p, present);
    m.macro_recall = safe_div(sum_r, present);
    m.macro_f = safe_div(sum_f, present);
    m.micro_precision = safe_div(static_cast<double>(tp_all),
                                 static_cast<double>(tp_all + fp_all));
    m.micro_recall = safe_div(static_cast<double>(tp_all),
                              static_cast<double>(tp_all + fn_all));
    // The harmonic mean of equal values is that value; taking the shortcut
    // keeps micro-F identical to accuracy for single-label input.
    m.micro_f = m.micro_precision == m.micro_recall
                    ? m.micro_precision
                    : safe_div(2.0 * m.micro_precision * m.micro_recall,
                               m.micro_precision + m.micro_recall);
    m.accuracy = static_cast<double>(correct) /
                 static_cast<double>(truth_and_prediction.size());
    return m;
}

EvalReport run_protocol(const Corpus& corpus, const ProtocolConfig& protocol,
                        const PipelineConfig& pipeline, IndexConfig index) {
    if (protocol.trials < 1)
        throw std::invalid_argument("trials must be >= 1");
    EvalReport report;
    for (double fraction : protocol.fractions) {
        Metrics sum;
        for (int trial = 0; trial < protocol.trials; ++trial) {
            SplitSpec spec;
            spec.train_fraction = fraction;
            spec.seed = protocol.base_seed + static_cast<std::uint64_t>(trial);
            spec.min_class_docs = protocol.min_class_docs;
            try {
                auto [train, test] = split(corpus, spec);
                std::vector<std::string> vocabulary =
                    build_vocabulary(train, pipeline);
                WeightMatrix matrix = compute_weight_matrix(train, vocabulary);
                KnowledgeBase kb =
                    KnowledgeBase::build(matrix, index, train.class_names);

                std::vector<std::pair<int, int>> outcomes;
                outcomes.reserve(test.documents.size());
                for (const Document& doc : test.documents) {
                    Prediction pred = classify(kb, QueryTerms{doc.terms});
                    outcomes.emplace_back(doc.class_id, pred.class_id);
                }
                EvalRow row;
                row.fraction = fraction;
                row.trial = trial;
                row.metrics = score(outcomes, test.class_count());
                report.rows.push_back(std::move(row));
            } catch (const CorpusTooSmall& e) {
                throw CorpusTooSmall("fraction " + format_double(fraction) +
                                     " trial " + std::to_string(trial) + ": " +
                                     e.what());
            } catch (const EmptyVocabulary& e) {
                throw EmptyVocabulary("fraction " + format_double(fraction) +
                                      " trial " + std::to_string(trial) + ": " +
                                      e.what());
            }
            const Metrics& m = report.rows.back().metrics;
            sum.macro_precision += m.macro_precision;
            sum.macro_recall += m.macro_recall;
            sum.macro_f += m.macro_f;
            sum.micro_precision += m.micro_precision;
            sum.micro_recall += m.micro_recall;
            sum.micro_f += m.micro_f;
            sum.accuracy += m.accuracy;
        }
        EvalRow avg;
        avg.fraction = fraction;
        avg.trial = EvalRow::kAverage;
        const double t = protocol.trials;
        avg.metrics.macro_precision = sum.macro_precision / t;
        avg.metrics.macro_recall = sum.macro_recall / t;
        avg.metrics.macro_f = sum.macro_f / t;
        avg.metrics.micro_precision = sum.micro_precision / t;
        avg.metrics.micro_recall = sum.micro_recall / t;
        avg.metrics.micro_f = sum.micro_f / t;
        avg.metrics.accuracy = sum.accuracy / t;
        report.rows.push_back(std::move(avg));
    }
    return report;
}

std::string EvalReport::to_csv() const {
    std::string out = "fraction,trial,macro_p,macro_r,macro_f,"
                      "micro_p,micro_r,micro_f,accuracy\n";
    for (const EvalRow& row : rows) {
        out += format_double(row.fraction);
        out += ',';
        out += row.trial == EvalRow::kAverage ? "avg" : std::to_string(row.trial);
        const Metrics& m = row.metrics;
        for (double v : {m.macro_precision, m.macro_recall, m.macro_f,
                         m.micro_precision, m.micro_recall, m.micro_f,
                         m.accuracy}) {
            out += ',';
            out += format_double(v);
        }
        out += '\n';
    }
    return out;
}

std::string EvalReport::to_text() const {
    std::ostringstream out;
    out << "fraction  trial  macro_p  macro_r  macro_f  micro_p  micro_r  "
           "micro_f  accuracy\n";
    char buf[160];
    for (const EvalRow& row : rows) {
        const Metrics& m = row.metrics;
        std::string trial =
            row.trial == EvalRow::kAverage ? "avg" : std::to_string(row.trial);
        std::snprintf(buf, sizeof(buf),
                      "%8.3f  %5s  %7.4f  %7.4f  %7.4f  %7.4f  %7.4f  %7.4f  "
                      "%8.4f\n",
                      row.fraction, trial.c_str(), m.macro_precision,
                      m.macro_recall, m.macro_f, m.micro_precision,
                      m.micro_recall, m.micro_f, m.accuracy);
        out << buf;
    }
    return out.str();
}

} // namespace tcms
