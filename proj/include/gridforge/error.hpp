#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gridforge {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on the arguments was violated (bad dimension, out-of-range k, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An embedded construction could not be placed without touching existing cells.
class PlacementError : public Error {
 public:
  PlacementError(const std::string& what, std::vector<std::string> cells)
      : Error(what), cells_(std::move(cells)) {}
  const std::vector<std::string>& cells() const { return cells_; }

 private:
  std::vector<std::string> cells_;
};

// A parabolic subgroup enumeration hit the configured element cap.
class EnumerationLimitError : public Error {
 public:
  EnumerationLimitError(const std::string& what, std::size_t cap) : Error(what), cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

// An operation that needs a 2-manifold was handed something else.
class NonManifoldError : public Error {
 public:
  using Error::Error;
};

}  // namespace gridforge
