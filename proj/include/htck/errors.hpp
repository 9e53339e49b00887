#pragma once

#include <stdexcept>
#include <string>

namespace htck {

enum class errc {
  not_prime,
  not_eisenstein,
  precision_too_small,
  context_mismatch,
  not_a_unit,
  arity_mismatch,
  index_out_of_range,
  degree_too_small,
  wrong_variant,
  non_convergent,
  horizon_not_reached,
  precision_masked,
  not_a_cocycle,
  not_in_kernel,
  verification_failed,
  coefficient_at_precision_zero,
  parse_error,
  internal
};

const char* errc_name(errc k);

class error : public std::runtime_error {
 public:
  error(errc k, const std::string& msg)
      : std::runtime_error(std::string(errc_name(k)) + ": " + msg), kind_(k) {}
  errc kind() const { return kind_; }

 private:
  errc kind_;
};

[[noreturn]] inline void fail(errc k, const std::string& msg) {
  throw error(k, msg);
}

}  // namespace htck
