#include "pcakit/error.hpp"

namespace pcakit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::singular_matrix: return "singular_matrix";
    case ErrorKind::not_positive_definite: return "not_positive_definite";
    case ErrorKind::non_convergence: return "non_convergence";
    case ErrorKind::constant_variable: return "constant_variable";
    case ErrorKind::msa_undefined: return "msa_undefined";
    case ErrorKind::kmo_undefined: return "kmo_undefined";
    case ErrorKind::insufficient_observations: return "insufficient_observations";
    case ErrorKind::no_component_retained: return "no_component_retained";
    case ErrorKind::not_a_correlation_spectrum: return "not_a_correlation_spectrum";
    case ErrorKind::degenerate_variable: return "degenerate_variable";
    case ErrorKind::alignment_error: return "alignment_error";
    case ErrorKind::not_standardized: return "not_standardized";
    case ErrorKind::data_inappropriate: return "data_inappropriate";
    case ErrorKind::not_interrelated: return "not_interrelated";
    case ErrorKind::over_exclusion: return "over_exclusion";
    case ErrorKind::parse_error: return "parse_error";
    case ErrorKind::io_error: return "io_error";
    case ErrorKind::unknown_format: return "unknown_format";
  }
  return "unknown";
}

}  // namespace pcakit
