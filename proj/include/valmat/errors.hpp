#pragma once

#include <stdexcept>
#include <string>

namespace valmat {

// Exit-code contract of the CLI: domain errors -> 1, parse errors -> 2,
// theorem violations (internal bugs) -> 3.

/// Invalid input or a violated precondition (non-member point, cap exceeded,
/// mismatched families, ...).
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed instance documents, points, or command lines.
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// A certified mathematical identity failed to hold. Signals a bug in this
/// library (or an input that slipped past validation), never a user mistake.
class theorem_violation : public std::logic_error {
 public:
  explicit theorem_violation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace valmat
