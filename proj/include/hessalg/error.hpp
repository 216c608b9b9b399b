#ifndef HESSALG_ERROR_HPP
#define HESSALG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hessalg {

enum class Errc {
  syntax_error,
  unknown_identifier,
  negative_exponent,
  variable_count_mismatch,
  index_out_of_range,
  not_homogeneous,
  degree_too_low,
  not_square,
  k_out_of_range,
  singular_change_matrix,
  arity_mismatch,
  not_artinian_up_to_bound,
  not_a_unit,
  not_a_local_isomorphism,
  mixed_degrees,
  insufficient_range,
  stabilization_not_certified,
  compare_k_missing,
  corrupt_fixture,
  bad_config,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, std::string message, long position = -1)
      : std::runtime_error(std::move(message)), code_(code), position_(position) {}

  Errc code() const { return code_; }
  const char* code_name() const { return errc_name(code_); }

  // byte offset into the offending input, or -1 when not applicable
  long position() const { return position_; }

private:
  Errc code_;
  long position_;
};

[[noreturn]] inline void fail(Errc code, std::string message, long position = -1) {
  throw Error(code, std::move(message), position);
}

} // namespace hessalg

#endif
