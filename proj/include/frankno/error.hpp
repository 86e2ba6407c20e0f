#pragma once

#include <stdexcept>
#include <string>

namespace frankno {

// Every recoverable failure in the library is reported as an `error` with a
// machine-readable kind.  Callers (the batch pipeline in particular) route on
// the kind; the message carries the human-readable detail (byte offsets,
// edge/vertex ids, ...).
enum class errc {
  // graph6 codec
  malformed_length_field,
  trailing_bits_nonzero,
  char_out_of_range,
  // structural domain errors
  not_cubic,
  not_snark,
  not_strong,
  not_perfect_matching,
  not_circuit_decomposition,
  suppression_creates_loop,
  suppression_creates_parallel,
  adjacent_edges,
  degree_too_small,
  precondition_violated,
  // flow construction
  zero_edge,
  cancellation_to_zero,
  value_not_two,
  // certificate construction
  lift_contradiction,
  internal_contradiction,
  // resource limits
  budget_exceeded,
  cap_exceeded,
  // batch input
  unusable_input,
};

const char* errc_name(errc kind);

class error : public std::runtime_error {
 public:
  error(errc kind, const std::string& message);
  errc kind() const { return kind_; }

 private:
  errc kind_;
};

[[noreturn]] void raise(errc kind, const std::string& message);

}  // namespace frankno
