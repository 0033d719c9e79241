#ifndef TCMS_PORTER_STEMMER_HPP
#define TCMS_PORTER_STEMMER_HPP

#include <string>
#include <string_view>

namespace tcms {

/// Porter suffix-stripping stemmer for English, following the reference
/// algorithm (including the BLI->BLE and LOGI->LOG revisions of step 2).
/// Input is expected to be lowercase ASCII; other bytes pass through the
/// rules untouched. Deterministic, not idempotent in general.
std::string porter_stem(std::string_view word);

} // namespace tcms

#endif // TCMS_PORTER_STEMMER_HPP
