#include "nearprime/error.hpp"

#include <utility>

namespace nearprime {

std::string_view to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::bad_input: return "BadInput";
  case ErrorCode::not_a_group: return "NotAGroup";
  case ErrorCode::not_associative_mul: return "NotAssociativeMul";
  case ErrorCode::not_right_distributive: return "NotRightDistributive";
  case ErrorCode::not_zero_symmetric: return "NotZeroSymmetric";
  case ErrorCode::action_not_additive_in_scalar:
    return "ActionNotAdditiveInScalar";
  case ErrorCode::action_not_associative: return "ActionNotAssociative";
  case ErrorCode::carrier_mismatch: return "CarrierMismatch";
  case ErrorCode::not_an_ideal: return "NotAnIdeal";
  case ErrorCode::not_an_r_ideal: return "NotAnRIdeal";
  case ErrorCode::not_proper: return "NotProper";
  case ErrorCode::v1_not_defined: return "V1NotDefined";
  case ErrorCode::empty_set: return "EmptySet";
  case ErrorCode::contains_zero: return "ContainsZero";
  case ErrorCode::bound_exceeded: return "BoundExceeded";
  case ErrorCode::not_a_near_field: return "NotANearField";
  case ErrorCode::unknown_key: return "UnknownKey";
  }
  return "Unknown";
}

bool is_validation_code(ErrorCode code) {
  switch (code) {
  case ErrorCode::bad_input:
  case ErrorCode::not_a_group:
  case ErrorCode::not_associative_mul:
  case ErrorCode::not_right_distributive:
  case ErrorCode::not_zero_symmetric:
  case ErrorCode::action_not_additive_in_scalar:
  case ErrorCode::action_not_associative:
  case ErrorCode::bound_exceeded:
    return true;
  default:
    return false;
  }
}

Error::Error(ErrorCode code, std::string message,
             std::vector<std::size_t> witness)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code), witness_(std::move(witness)) {}

} // namespace nearprime
