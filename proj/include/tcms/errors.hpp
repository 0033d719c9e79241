#ifndef TCMS_ERRORS_HPP
#define TCMS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tcms {

// Base for all data/contract errors raised by the toolkit. CLI maps these
// to exit code 2; usage problems are handled by the flag parser instead.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// No term survived vocabulary pruning; the corpus/config pair is unusable.
struct EmptyVocabulary : Error {
    using Error::Error;
};

// A term outside the training vocabulary was passed to a weighting op
// whose denominator would be zero.
struct UnknownTerm : Error {
    using Error::Error;
};

// Bulk build received a term table with a repeated key.
struct DuplicateTerm : Error {
    using Error::Error;
};

// rank_classes called with k' outside [1, K].
struct InvalidKPrime : Error {
    using Error::Error;
};

// Split preconditions failed (too few classes or documents after filtering).
struct CorpusTooSmall : Error {
    using Error::Error;
};

// Corpus loader found no usable classes/documents.
struct NoClassesFound : Error {
    using Error::Error;
};

// JSONL loader: malformed-line ratio exceeded the tolerated threshold.
struct TooManyMalformedLines : Error {
    using Error::Error;
};

// Model file problems, split by phase so tests can pin each failure mode.
struct ModelFormatError : Error {
    using Error::Error;
};
struct BadMagic : ModelFormatError {
    using ModelFormatError::ModelFormatError;
};
struct VersionUnsupported : ModelFormatError {
    using ModelFormatError::ModelFormatError;
};
struct ChecksumOfCountsMismatch : ModelFormatError {
    using ModelFormatError::ModelFormatError;
};
struct MalformedRow : ModelFormatError {
    using ModelFormatError::ModelFormatError;
};

} // namespace tcms

#endif // TCMS_ERRORS_HPP
