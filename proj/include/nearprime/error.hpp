#ifndef NEARPRIME_ERROR_HPP_
#define NEARPRIME_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nearprime {

enum class ErrorCode {
  bad_input,
  not_a_group,
  not_associative_mul,
  not_right_distributive,
  not_zero_symmetric,
  action_not_additive_in_scalar,
  action_not_associative,
  carrier_mismatch,
  not_an_ideal,
  not_an_r_ideal,
  not_proper,
  v1_not_defined,
  empty_set,
  contains_zero,
  bound_exceeded,
  not_a_near_field,
  unknown_key,
};

std::string_view to_string(ErrorCode code);

/// True for the codes raised while checking Cayley-table axioms.
bool is_validation_code(ErrorCode code);

/**
 * Raised for rejected input and violated preconditions. `witness` holds
 * element indices that exhibit the failure (for axiom errors: the triple or
 * pair the axiom fails on).
 */
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, std::string message,
        std::vector<std::size_t> witness = {});

  ErrorCode code() const { return code_; }
  const std::vector<std::size_t> &witness() const { return witness_; }

private:
  ErrorCode code_;
  std::vector<std::size_t> witness_;
};

} // namespace nearprime

#endif // NEARPRIME_ERROR_HPP_
