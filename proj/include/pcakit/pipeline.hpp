#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pcakit/adequacy.hpp"
#include "pcakit/error.hpp"
#include "pcakit/extraction.hpp"
#include "pcakit/linalg.hpp"
#include "pcakit/rotation.hpp"
#include "pcakit/scoring.hpp"
#include "pcakit/stats.hpp"

namespace pcakit {

enum class RetentionMode { kaiser, fixed };
enum class RotateMode { always, on_complex, never };
enum class ExclusionMode { batch, iterative };

struct PipelineConfig {
  double msa_threshold = 0.50;
  double kmo_threshold = 0.50;
  double bartlett_alpha = 0.01;
  /// |loading| above this on two or more components marks complex structure.
  double loading_threshold = 0.50;
  RetentionMode retention = RetentionMode::kaiser;
  /// Used when retention == fixed.
  std::size_t fixed_components = 0;
  RotateMode rotate = RotateMode::always;
  ExclusionMode exclusion = ExclusionMode::batch;
  bool kaiser_normalize = true;

  /// Throws ErrorKind::invalid_argument on out-of-range settings.
  void validate() const;
};

struct ScreeningRound {
  std::vector<std::string> variables;
  AdequacyReport adequacy;
  /// Dropped at the end of this round; empty for the final round.
  std::vector<std::string> excluded;
};

struct PipelineAnalysis {
  EigenSolution eigen;
  VarianceTable variance;
  std::size_t retained = 0;
  LoadingMatrix unrotated;
  std::vector<std::string> complex_variables;
  std::optional<RotationResult> rotation;
  ScoreCoefficients coefficients;
};

struct PipelineFailure {
  std::string stage;
  ErrorKind kind = ErrorKind::invalid_argument;
  std::string message;
};

struct PipelineReport {
  PipelineConfig config;
  std::size_t observations = 0;
  std::vector<std::string> input_variables;
  std::vector<ScreeningRound> rounds;
  /// Absent when a gate or screening step failed.
  std::optional<PipelineAnalysis> analysis;
  std::vector<std::string> warnings;
  std::optional<PipelineFailure> failure;

  /// Variables analysed after screening (those of the last round).
  const std::vector<std::string>& final_variables() const;
};

/// Failure of run_pipeline. Carries whatever the run had produced so the
/// failing diagnostics can still be rendered.
class PipelineError : public Error {
 public:
  PipelineError(const Error& cause, PipelineReport partial)
      : Error(cause.kind(), cause.what(), cause.stage()),
        report_(std::make_shared<const PipelineReport>(std::move(partial))) {}

  const PipelineReport& report() const noexcept { return *report_; }

 private:
  std::shared_ptr<const PipelineReport> report_;
};

/// Screen, exclude low-MSA variables until clean, gate on KMO and Bartlett,
/// then extract, detect complex structure, rotate and derive score
/// coefficients.
///
/// Batch exclusion drops every variable under the MSA threshold at once and
/// re-screens; iterative exclusion drops only the lowest per round.
/// Throws PipelineError (kinds data_inappropriate, not_interrelated,
/// over_exclusion, singular_matrix, ...) with the partial report attached.
PipelineReport run_pipeline(const DataMatrix& d, const PipelineConfig& cfg = {});

}  // namespace pcakit
