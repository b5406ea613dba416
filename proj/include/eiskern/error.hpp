#pragma once

#include <stdexcept>
#include <string>

namespace eiskern {

// Domain errors map to CLI exit code 2, convergence errors to exit code 3.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

struct BadWeight : DomainError {
  explicit BadWeight(const std::string& w) : DomainError("BadWeight", w) {}
};
struct PoleAtOne : DomainError {
  explicit PoleAtOne(const std::string& w) : DomainError("PoleAtOne", w) {}
};
struct PoleNear : DomainError {
  explicit PoleNear(const std::string& w) : DomainError("PoleNear", w) {}
};
struct InsufficientPrecision : DomainError {
  explicit InsufficientPrecision(const std::string& w) : DomainError("InsufficientPrecision", w) {}
};
struct OutOfDomain : DomainError {
  explicit OutOfDomain(const std::string& w) : DomainError("OutOfDomain", w) {}
};
struct BadData : DomainError {
  explicit BadData(const std::string& w) : DomainError("BadData", w) {}
};
struct ParityUnsupported : DomainError {
  explicit ParityUnsupported(const std::string& w) : DomainError("ParityUnsupported", w) {}
};
struct SingularSystem : DomainError {
  explicit SingularSystem(const std::string& w) : DomainError("SingularSystem", w) {}
};
struct SchemaMismatch : DomainError {
  explicit SchemaMismatch(const std::string& w) : DomainError("SchemaMismatch", w) {}
};

struct NonConvergence : ConvergenceError {
  explicit NonConvergence(const std::string& w) : ConvergenceError("NonConvergence", w) {}
};
struct QuadratureFailure : ConvergenceError {
  explicit QuadratureFailure(const std::string& w) : ConvergenceError("QuadratureFailure", w) {}
};
struct DegenerateSpectrum : ConvergenceError {
  explicit DegenerateSpectrum(const std::string& w) : ConvergenceError("DegenerateSpectrum", w) {}
};

}  // namespace eiskern
