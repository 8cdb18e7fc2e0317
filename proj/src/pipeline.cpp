#include "pcakit/pipeline.hpp"

#include <algorithm>
#include <cstdio>

namespace pcakit {
namespace {

constexpr std::size_t kMinVariables = 3;

std::string fmt2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ", ";
    out += s;
  }
  return out;
}

[[noreturn]] void fail(Error e, const std::string& stage, PipelineReport& report) {
  if (e.stage().empty()) e.set_stage(stage);
  report.failure = PipelineFailure{e.stage(), e.kind(), e.what()};
  throw PipelineError(e, std::move(report));
}

std::vector<std::string> choose_exclusions(const AdequacyReport& a, ExclusionMode mode) {
  if (a.msa_flags.empty() || mode == ExclusionMode::batch) return a.msa_flags;
  std::size_t worst = 0;
  for (std::size_t i = 1; i < a.msa.size(); ++i) {
    if (a.msa[i] < a.msa[worst]) worst = i;
  }
  return {a.variable_names[worst]};
}

}  // namespace

void PipelineConfig::validate() const {
  auto in_unit = [](double v) { return v > 0.0 && v < 1.0; };
  if (!in_unit(msa_threshold) || !in_unit(kmo_threshold) || !in_unit(bartlett_alpha) ||
      !in_unit(loading_threshold)) {
    throw Error(ErrorKind::invalid_argument, "thresholds must lie in (0, 1)", "config");
  }
  if (retention == RetentionMode::fixed && fixed_components < 1) {
    throw Error(ErrorKind::invalid_argument, "fixed component count must be at least 1",
                "config");
  }
}

const std::vector<std::string>& PipelineReport::final_variables() const {
  return rounds.empty() ? input_variables : rounds.back().variables;
}

PipelineReport run_pipeline(const DataMatrix& d, const PipelineConfig& cfg) {
  cfg.validate();

  PipelineReport report;
  report.config = cfg;
  report.observations = d.observations();
  report.input_variables = d.variable_names();

  if (d.variables() < kMinVariables) {
    fail(Error(ErrorKind::over_exclusion, "at least 3 variables are required"), "screening",
         report);
  }

  CorrelationMatrix full = [&] {
    try {
      return correlation_matrix(d);
    } catch (const Error& e) {
      fail(e, "correlation", report);
    }
  }();

  const AdequacyThresholds thresholds{cfg.msa_threshold, cfg.kmo_threshold, cfg.bartlett_alpha};
  std::vector<std::size_t> active(d.variables());
  for (std::size_t i = 0; i < active.size(); ++i) active[i] = i;

  while (true) {
    const std::string stage = "screening round " + std::to_string(report.rounds.size() + 1);
    const CorrelationMatrix r = full.select(active);
    ScreeningRound round{r.variable_names(), {}, {}};
    try {
      round.adequacy = assess_adequacy(r, d.observations(), thresholds);
    } catch (const Error& e) {
      fail(Error(e.kind(), std::string(e.what()) + " (" + stage + ")"), stage, report);
    }

    round.excluded = choose_exclusions(round.adequacy, cfg.exclusion);
    const bool done = round.excluded.empty();
    report.rounds.push_back(std::move(round));
    if (done) break;

    const auto& excluded = report.rounds.back().excluded;
    std::vector<std::size_t> next;
    for (std::size_t idx : active) {
      if (std::find(excluded.begin(), excluded.end(), d.variable_names()[idx]) == excluded.end()) {
        next.push_back(idx);
      }
    }
    if (next.size() < kMinVariables) {
      fail(Error(ErrorKind::over_exclusion,
                 "over-exclusion: dropping " + join(excluded) + " leaves " +
                     std::to_string(next.size()) + " variables (need at least 3)"),
           stage, report);
    }
    active = std::move(next);
  }

  const ScreeningRound& last = report.rounds.back();
  if (!last.adequacy.kmo_verdict.pass) {
    fail(Error(ErrorKind::data_inappropriate,
               "data inappropriate for PCA: " + last.adequacy.kmo_verdict.message),
         "adequacy gate", report);
  }
  if (!last.adequacy.bartlett_verdict.pass) {
    fail(Error(ErrorKind::not_interrelated,
               "variables not interrelated: " + last.adequacy.bartlett_verdict.message),
         "adequacy gate", report);
  }

  const CorrelationMatrix r = full.select(active);
  const std::size_t p = r.order();
  PipelineAnalysis analysis;
  try {
    analysis.eigen = eigen_symmetric(r.base());
  } catch (const Error& e) {
    fail(e, "extraction", report);
  }
  analysis.variance = variance_table(analysis.eigen.eigenvalues, p);

  try {
    if (cfg.retention == RetentionMode::kaiser) {
      analysis.retained = kaiser_retain(analysis.eigen.eigenvalues);
    } else {
      if (cfg.fixed_components > p) {
        throw Error(ErrorKind::invalid_argument,
                    "fixed component count " + std::to_string(cfg.fixed_components) +
                        " exceeds the " + std::to_string(p) + " analysed variables");
      }
      analysis.retained = cfg.fixed_components;
    }
  } catch (const Error& e) {
    fail(e, "retention", report);
  }

  try {
    analysis.unrotated = unrotated_loadings(analysis.eigen, analysis.retained, r.variable_names());
  } catch (const Error& e) {
    fail(e, "extraction", report);
  }
  analysis.complex_variables =
      detect_complex_structure(analysis.unrotated, cfg.loading_threshold);

  bool want_rotation = cfg.rotate == RotateMode::always ||
                       (cfg.rotate == RotateMode::on_complex && !analysis.complex_variables.empty());
  if (want_rotation && analysis.retained < 2) {
    report.warnings.push_back("rotation skipped: only one component retained");
    want_rotation = false;
  }
  if (!analysis.complex_variables.empty() && !want_rotation) {
    report.warnings.push_back("complex structure left unrotated: " +
                              join(analysis.complex_variables) + " load above " +
                              fmt2(cfg.loading_threshold) + " on several components");
  }
  if (want_rotation) {
    try {
      analysis.rotation = varimax(analysis.unrotated, cfg.kaiser_normalize);
    } catch (const Error& e) {
      fail(e, "rotation", report);
    }
  }

  const LoadingMatrix& final_loadings =
      analysis.rotation ? analysis.rotation->rotated : analysis.unrotated;
  try {
    analysis.coefficients = score_coefficients(
        final_loadings,
        std::span<const double>(analysis.eigen.eigenvalues.data(), analysis.retained));
  } catch (const Error& e) {
    fail(e, "scoring", report);
  }

  report.analysis = std::move(analysis);
  return report;
}

}  // namespace pcakit
