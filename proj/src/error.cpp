#include "frankno/error.hpp"

namespace frankno {

const char* errc_name(errc kind) {
  switch (kind) {
    case errc::malformed_length_field: return "MalformedLengthField";
    case errc::trailing_bits_nonzero: return "TrailingBitsNonzero";
    case errc::char_out_of_range: return "CharOutOfRange";
    case errc::not_cubic: return "NotCubic";
    case errc::not_snark: return "NotSnark";
    case errc::not_strong: return "NotStrong";
    case errc::not_perfect_matching: return "NotPerfectMatching";
    case errc::not_circuit_decomposition: return "NotCircuitDecomposition";
    case errc::suppression_creates_loop: return "SuppressionCreatesLoop";
    case errc::suppression_creates_parallel: return "SuppressionCreatesParallel";
    case errc::adjacent_edges: return "AdjacentEdges";
    case errc::degree_too_small: return "DegreeTooSmall";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::zero_edge: return "ZeroEdge";
    case errc::cancellation_to_zero: return "CancellationToZero";
    case errc::value_not_two: return "ValueNotTwo";
    case errc::lift_contradiction: return "LiftContradiction";
    case errc::internal_contradiction: return "InternalContradiction";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::unusable_input: return "UnusableInput";
  }
  return "UnknownError";
}

error::error(errc kind, const std::string& message)
    : std::runtime_error(std::string(errc_name(kind)) + ": " + message),
      kind_(kind) {}

void raise(errc kind, const std::string& message) { throw error(kind, message); }

}  // namespace frankno
