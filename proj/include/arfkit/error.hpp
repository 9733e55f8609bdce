#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arfkit {

enum class ErrorKind {
  EmptyGenerators,
  InvalidGenerator,
  NotCofinite,
  NotASemigroup,
  ApexNotMember,
  EmptyElements,
  InvalidIdeal,
  AmbientMismatch,
  NotAnIdealOfS,
  NotAnExtension,
  GenusTooLarge,
  BoundTooLarge,
  IoFailure,
  ParseError,
  Inconsistency,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyGenerators: return "EmptyGenerators";
    case ErrorKind::InvalidGenerator: return "InvalidGenerator";
    case ErrorKind::NotCofinite: return "NotCofinite";
    case ErrorKind::NotASemigroup: return "NotASemigroup";
    case ErrorKind::ApexNotMember: return "ApexNotMember";
    case ErrorKind::EmptyElements: return "EmptyElements";
    case ErrorKind::InvalidIdeal: return "InvalidIdeal";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::NotAnIdealOfS: return "NotAnIdealOfS";
    case ErrorKind::NotAnExtension: return "NotAnExtension";
    case ErrorKind::GenusTooLarge: return "GenusTooLarge";
    case ErrorKind::BoundTooLarge: return "BoundTooLarge";
    case ErrorKind::IoFailure: return "IoFailure";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Inconsistency: return "Inconsistency";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace arfkit

#ifdef NDEBUG
#define ARFKIT_DEBUG_ASSERT(cond, msg) ((void)0)
#else
#define ARFKIT_DEBUG_ASSERT(cond, msg)                                                   \
  do {                                                                                   \
    if (!(cond)) throw ::arfkit::Error(::arfkit::ErrorKind::Inconsistency, (msg));       \
  } while (false)
#endif
