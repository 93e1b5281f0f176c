#pragma once

#include <stdexcept>
#include <string>

namespace seplab {

// Malformed or out-of-contract input (bad JSON, vertex id out of range,
// disconnected graph where connectivity is required, ...).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// An iterative solver stopped before reaching its target accuracy.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// The graph admits no partition (A, B, S) with A and B both nonempty and no
// A-B edge. Happens exactly for complete graphs.
class NoValidPartition : public std::runtime_error {
 public:
  explicit NoValidPartition(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace seplab
