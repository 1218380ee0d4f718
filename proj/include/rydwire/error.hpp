#pragma once

#include <stdexcept>
#include <string>

namespace rydwire {

// Base of every error thrown by the library. The CLI maps any Error to
// exit status 1.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class InvalidInputError : public Error { using Error::Error; };
class CapacityError : public Error { using Error::Error; };
class LookupError : public Error { using Error::Error; };
class ParityError : public Error { using Error::Error; };
class AdjacencyError : public Error { using Error::Error; };
class PlanError : public Error { using Error::Error; };
class DomainError : public Error { using Error::Error; };
class ConfigError : public Error { using Error::Error; };
class AccuracyError : public Error { using Error::Error; };
class InversionError : public Error { using Error::Error; };

class ExtractionFailedError : public Error {
  public:
    ExtractionFailedError(const std::string& what, std::string diagnostics)
        : Error(what), diagnostics_(std::move(diagnostics)) {}
    const std::string& diagnostics() const noexcept { return diagnostics_; }

  private:
    std::string diagnostics_;
};

} // namespace rydwire
