#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace permchain {

// Thrown when a computation would exceed one of the configured budgets.
// Distinct from invalid_input so callers can skip-and-record oversized
// corpus entries instead of aborting the run.
class cap_exceeded : public std::runtime_error {
public:
  explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// Malformed external input: cycle strings, matrices, corpus files.
class invalid_input : public std::runtime_error {
public:
  explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

// Precondition violations on group-theoretic operations (degree mismatch,
// non-normal subgroup passed to quotient, subgroup relation not holding).
class domain_violation : public std::logic_error {
public:
  explicit domain_violation(const std::string& what) : std::logic_error(what) {}
};

struct Caps {
  std::uint64_t element_cap = 20000;       // elements(), intersection, normalizer scans
  std::uint64_t coset_degree_cap = 20000;  // index bound for coset actions
  std::uint64_t lattice_cap = 2500;        // group order bound for lattice enumeration
};

}  // namespace permchain
