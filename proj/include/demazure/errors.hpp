#pragma once

#include <stdexcept>
#include <string>

namespace demazure {

// Error taxonomy shared by the library and the CLI.  The CLI maps these to
// exit codes: MalformedInput/UnsupportedType -> 2, RankMismatch -> 3, the
// domain errors -> 4.

struct UnsupportedType : std::invalid_argument {
  explicit UnsupportedType(const std::string& what) : std::invalid_argument(what) {}
};

struct MalformedInput : std::invalid_argument {
  explicit MalformedInput(const std::string& what) : std::invalid_argument(what) {}
};

struct RankMismatch : std::invalid_argument {
  explicit RankMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct NotDivisible : std::domain_error {
  explicit NotDivisible(const std::string& what) : std::domain_error(what) {}
};

struct NotDominant : std::domain_error {
  explicit NotDominant(const std::string& what) : std::domain_error(what) {}
};

struct GroupTooLarge : std::domain_error {
  explicit GroupTooLarge(const std::string& what) : std::domain_error(what) {}
};

}  // namespace demazure
