#pragma once

#include <stdexcept>
#include <string>

namespace qsim {

// Error categories map onto CLI exit codes: Validation -> 2,
// CatalogMiss -> 3, Numerical -> 4.
enum class ErrorKind { Validation, CatalogMiss, Numerical };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

struct NotHermitian : Error {
  explicit NotHermitian(const std::string& w) : Error(ErrorKind::Validation, w) {}
};
struct NotPSD : Error {
  explicit NotPSD(const std::string& w) : Error(ErrorKind::Numerical, w) {}
};
struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& w) : Error(ErrorKind::Validation, w) {}
};
struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& w) : Error(ErrorKind::Validation, w) {}
};
struct UnknownState : Error {
  explicit UnknownState(const std::string& w) : Error(ErrorKind::CatalogMiss, w) {}
};
struct InvalidSubset : Error {
  explicit InvalidSubset(const std::string& w) : Error(ErrorKind::Validation, w) {}
};
struct IndexOutOfRange : Error {
  explicit IndexOutOfRange(const std::string& w) : Error(ErrorKind::Validation, w) {}
};
struct NotSorted : Error {
  explicit NotSorted(const std::string& w) : Error(ErrorKind::Validation, w) {}
};
struct WrongDimension : Error {
  explicit WrongDimension(const std::string& w) : Error(ErrorKind::Validation, w) {}
};
struct StepTooLarge : Error {
  explicit StepTooLarge(const std::string& w) : Error(ErrorKind::Numerical, w) {}
};
struct NotInCatalog : Error {
  explicit NotInCatalog(const std::string& w) : Error(ErrorKind::CatalogMiss, w) {}
};
struct NotConverged : Error {
  explicit NotConverged(const std::string& w) : Error(ErrorKind::Numerical, w) {}
};
struct FileFormatError : Error {
  explicit FileFormatError(const std::string& w) : Error(ErrorKind::Validation, w) {}
};

}  // namespace qsim
