#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace evencw {

// A search or enumeration exceeded its configured budget. `reached` records
// how far it got (nodes visited, cells collected, ...) so callers can report
// honest partial progress instead of a fabricated answer.
class resource_error : public std::runtime_error {
 public:
  resource_error(const std::string& what, std::uint64_t reached)
      : std::runtime_error(what), reached_(reached) {}
  std::uint64_t reached() const noexcept { return reached_; }

 private:
  std::uint64_t reached_;
};

// A generator could not produce a valid complex for the requested parameters
// (identification collapsed an edge, grid too small, ...).
class generation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Violated internal invariant. Indicates a bug in this library, not bad input.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace evencw
