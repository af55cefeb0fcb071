#ifndef CARE2VEC_ERRORS_HPP
#define CARE2VEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace care2vec {

// Base class for everything this library throws on contract violations.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct MissingFile : Error {
    explicit MissingFile(const std::string& msg) : Error(msg) {}
};

// Malformed input data: wrong column count, unknown class label,
// non-binary activity value, non-numeric age. Message names the
// offending row/column.
struct SchemaMismatch : Error {
    explicit SchemaMismatch(const std::string& msg) : Error(msg) {}
};

struct WrongScheme : Error {
    explicit WrongScheme(const std::string& msg) : Error(msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

struct InvalidK : Error {
    explicit InvalidK(const std::string& msg) : Error(msg) {}
};

struct InvalidDim : Error {
    explicit InvalidDim(const std::string& msg) : Error(msg) {}
};

struct LengthMismatch : Error {
    explicit LengthMismatch(const std::string& msg) : Error(msg) {}
};

// ROC needs both classes present.
struct DegenerateLabels : Error {
    explicit DegenerateLabels(const std::string& msg) : Error(msg) {}
};

// Impurity of a node with zero samples is undefined.
struct EmptyNode : Error {
    explicit EmptyNode(const std::string& msg) : Error(msg) {}
};

// Training aborted because the loss left the finite range; message
// carries the epoch where it happened.
struct NonFiniteLoss : Error {
    explicit NonFiniteLoss(const std::string& msg) : Error(msg) {}
};

} // namespace care2vec

#endif // CARE2VEC_ERRORS_HPP
