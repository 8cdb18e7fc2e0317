#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pcakit {

enum class ErrorKind {
  invalid_argument,
  singular_matrix,
  not_positive_definite,
  non_convergence,
  constant_variable,
  msa_undefined,
  kmo_undefined,
  insufficient_observations,
  no_component_retained,
  not_a_correlation_spectrum,
  degenerate_variable,
  alignment_error,
  not_standardized,
  data_inappropriate,
  not_interrelated,
  over_exclusion,
  parse_error,
  io_error,
  unknown_format,
};

std::string_view to_string(ErrorKind kind);

// Every failure in the library is reported through this type. The stage is
// filled in by whichever layer knows it (pipeline round, CLI step).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::string stage = {})
      : std::runtime_error(message), kind_(kind), stage_(std::move(stage)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& stage() const noexcept { return stage_; }

  void set_stage(std::string stage) { stage_ = std::move(stage); }

 private:
  ErrorKind kind_;
  std::string stage_;
};

}  // namespace pcakit
