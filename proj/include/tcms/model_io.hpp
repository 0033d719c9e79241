#ifndef TCMS_MODEL_IO_HPP
#define TCMS_MODEL_IO_HPP

#include <filesystem>
#include <string>

#include "tcms/model.hpp"

namespace tcms {

/// Versioned UTF-8 text model format:
///   line 1: magic "TCMS 1"
///   line 2: class names, tab-separated, canonical order
///   line 3: pipeline snapshot as key=value pairs
///   line 4: "r=<order> d=<terms>"
///   then d rows "term\tw_1\t...\tw_K", sorted by term, shortest
///   round-trip decimals.
/// save(load(f)) reproduces f byte for byte.
std::string serialize_model(const TrainedModel& model);
TrainedModel parse_model(const std::string& text);

void save_model(const TrainedModel& model, const std::filesystem::path& path);
TrainedModel load_model(const std::filesystem::path& path);

} // namespace tcms

#endif // TCMS_MODEL_IO_HPP
