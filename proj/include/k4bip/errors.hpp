#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace k4bip {

/// Malformed caller input: bad vertex ids, self-loops, overlapping classes, bad files.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The request exceeds an enumeration cap (oracle vertex limit, sweep size, subset size).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Raised wherever a K4-free hypothesis is violated. Carries the offending 4-set.
class K4Error : public std::runtime_error {
 public:
  explicit K4Error(std::array<int, 4> witness)
      : std::runtime_error("graph contains K4 on vertices {" + std::to_string(witness[0]) + "," +
                           std::to_string(witness[1]) + "," + std::to_string(witness[2]) + "," +
                           std::to_string(witness[3]) + "}"),
        witness_(witness) {}

  const std::array<int, 4>& witness() const noexcept { return witness_; }

 private:
  std::array<int, 4> witness_;
};

/// A proven inequality failed at runtime. Never expected to fire.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace k4bip
