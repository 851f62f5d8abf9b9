#pragma once

#include "tlie/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tlie {

/// One failed identity instance: the basis tuple plus both evaluated sides,
/// enough to redo the computation by hand.
struct Violation {
  std::string tuple;
  Vec lhs;
  Vec rhs;
};

enum class Outcome { pass, fail, error };

struct Report {
  std::string subject;
  Outcome outcome = Outcome::pass;
  std::vector<Violation> violations;
  std::uint64_t tuples_checked = 0;
  /// Tuples excluded by a window restriction (see families); empty otherwise.
  std::vector<std::string> skipped;
  double elapsed_ms = 0.0;
  std::string message;

  bool passed() const { return outcome == Outcome::pass; }
};

enum class ErrorKind {
  dimension_mismatch,
  unverified_input,
  singular,
  not_a_cocycle,
  not_admissible,
  not_a_derivation,
  not_nijenhuis,
  not_reynolds,
  undefined_denominator,
  resource_cap,
  parse,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

std::string to_string(Outcome outcome);
std::string to_string(ErrorKind kind);

}  // namespace tlie
