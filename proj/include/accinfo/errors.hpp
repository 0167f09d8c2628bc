#ifndef ACCINFO_ERRORS_HPP
#define ACCINFO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace accinfo {

struct DimensionMismatch : std::runtime_error {
  explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct ShapeMismatch : std::runtime_error {
  explicit ShapeMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct NotConverged : std::runtime_error {
  explicit NotConverged(const std::string& what) : std::runtime_error(what) {}
};

struct SpectrumOutOfRange : std::runtime_error {
  explicit SpectrumOutOfRange(const std::string& what) : std::runtime_error(what) {}
};

struct SingularMatrix : std::runtime_error {
  explicit SingularMatrix(const std::string& what) : std::runtime_error(what) {}
};

struct NegativeProbability : std::runtime_error {
  explicit NegativeProbability(const std::string& what) : std::runtime_error(what) {}
};

struct IndexOutOfRange : std::runtime_error {
  explicit IndexOutOfRange(const std::string& what) : std::runtime_error(what) {}
};

struct RangeError : std::runtime_error {
  explicit RangeError(const std::string& what) : std::runtime_error(what) {}
};

struct StepFailed : std::runtime_error {
  explicit StepFailed(const std::string& what) : std::runtime_error(what) {}
};

struct NoProgress : std::runtime_error {
  explicit NoProgress(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidInput : std::runtime_error {
  explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace accinfo

#endif
