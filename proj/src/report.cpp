#include "pcakit/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace pcakit {

using nlohmann::json;

namespace {

// ---- enum names -----------------------------------------------------------

std::string_view name_of(RetentionMode m) { return m == RetentionMode::kaiser ? "kaiser" : "fixed"; }

std::string_view name_of(RotateMode m) {
  switch (m) {
    case RotateMode::always: return "always";
    case RotateMode::on_complex: return "on-complex";
    case RotateMode::never: return "never";
  }
  return "always";
}

std::string_view name_of(ExclusionMode m) {
  return m == ExclusionMode::batch ? "batch" : "iterative";
}

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorKind::parse_error, "malformed report JSON: " + what, "report");
}

ErrorKind error_kind_from(std::string_view name) {
  for (int k = 0; k <= static_cast<int>(ErrorKind::unknown_format); ++k) {
    if (to_string(static_cast<ErrorKind>(k)) == name) return static_cast<ErrorKind>(k);
  }
  malformed("unknown error kind '" + std::string(name) + "'");
}

// ---- JSON encoding --------------------------------------------------------

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    rows.push_back(std::vector<double>(m.row(i).begin(), m.row(i).end()));
  }
  return rows;
}

Matrix matrix_from(const json& j, std::size_t expected_cols) {
  if (!j.is_array()) malformed("matrix must be an array of rows");
  const auto rows = j.get<std::vector<std::vector<double>>>();
  if (rows.empty()) return Matrix(0, expected_cols);
  return Matrix::from_rows(rows);
}

json loadings_json(const LoadingMatrix& l) {
  return {{"variable_names", l.variable_names()},
          {"component_labels", l.component_labels()},
          {"values", matrix_json(l.values())},
          {"rotated", l.rotated()}};
}

LoadingMatrix loadings_from(const json& j) {
  auto labels = j.at("component_labels").get<std::vector<std::string>>();
  const std::size_t m = labels.size();
  return LoadingMatrix(j.at("variable_names").get<std::vector<std::string>>(), std::move(labels),
                       matrix_from(j.at("values"), m), j.at("rotated").get<bool>());
}

json verdict_json(const Verdict& v) { return {{"pass", v.pass}, {"message", v.message}}; }

Verdict verdict_from(const json& j) {
  return {j.at("pass").get<bool>(), j.at("message").get<std::string>()};
}

json adequacy_json(const AdequacyReport& a) {
  return {{"variable_names", a.variable_names},
          {"kmo", a.kmo},
          {"kmo_verdict", verdict_json(a.kmo_verdict)},
          {"bartlett",
           {{"statistic", a.bartlett.statistic},
            {"df", a.bartlett.df},
            {"p_value", a.bartlett.p_value}}},
          {"bartlett_verdict", verdict_json(a.bartlett_verdict)},
          {"msa", a.msa},
          {"msa_flags", a.msa_flags},
          {"anti_image", matrix_json(a.anti_image.values())}};
}

AdequacyReport adequacy_from(const json& j) {
  AdequacyReport a;
  a.variable_names = j.at("variable_names").get<std::vector<std::string>>();
  a.kmo = j.at("kmo").get<double>();
  a.kmo_verdict = verdict_from(j.at("kmo_verdict"));
  const json& b = j.at("bartlett");
  a.bartlett = {b.at("statistic").get<double>(), b.at("df").get<int>(),
                b.at("p_value").get<double>()};
  a.bartlett_verdict = verdict_from(j.at("bartlett_verdict"));
  a.msa = j.at("msa").get<std::vector<double>>();
  a.msa_flags = j.at("msa_flags").get<std::vector<std::string>>();
  a.anti_image = AntiImageMatrix(matrix_from(j.at("anti_image"), a.variable_names.size()),
                                 a.variable_names);
  return a;
}

json config_json(const PipelineConfig& c) {
  return {{"msa_threshold", c.msa_threshold},
          {"kmo_threshold", c.kmo_threshold},
          {"bartlett_alpha", c.bartlett_alpha},
          {"loading_threshold", c.loading_threshold},
          {"retention", name_of(c.retention)},
          {"fixed_components", c.fixed_components},
          {"rotate", name_of(c.rotate)},
          {"exclusion", name_of(c.exclusion)},
          {"kaiser_normalize", c.kaiser_normalize}};
}

PipelineConfig config_from(const json& j) {
  PipelineConfig c;
  c.msa_threshold = j.at("msa_threshold").get<double>();
  c.kmo_threshold = j.at("kmo_threshold").get<double>();
  c.bartlett_alpha = j.at("bartlett_alpha").get<double>();
  c.loading_threshold = j.at("loading_threshold").get<double>();
  c.retention = j.at("retention") == "fixed" ? RetentionMode::fixed : RetentionMode::kaiser;
  c.fixed_components = j.at("fixed_components").get<std::size_t>();
  const auto rotate = j.at("rotate").get<std::string>();
  c.rotate = rotate == "never"        ? RotateMode::never
             : rotate == "on-complex" ? RotateMode::on_complex
                                      : RotateMode::always;
  c.exclusion = j.at("exclusion") == "iterative" ? ExclusionMode::iterative : ExclusionMode::batch;
  c.kaiser_normalize = j.at("kaiser_normalize").get<bool>();
  return c;
}

// ---- text rendering -------------------------------------------------------

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::size_t label_width(const std::vector<std::string>& names) {
  std::size_t w = 8;
  for (const auto& n : names) w = std::max(w, n.size() + 2);
  return w;
}

void write_matrix(std::ostringstream& os, const std::vector<std::string>& row_names,
                  const std::vector<std::string>& col_names, const Matrix& m) {
  const std::size_t lw = label_width(row_names);
  std::size_t cw = 9;
  for (const auto& c : col_names) cw = std::max(cw, c.size() + 2);
  os << pad_right("", lw);
  for (const auto& c : col_names) os << pad_left(c, cw);
  os << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << pad_right(row_names[i], lw);
    for (std::size_t j = 0; j < m.cols(); ++j) os << pad_left(format_fixed3(m(i, j)), cw);
    os << '\n';
  }
}

std::string join(const std::vector<std::string>& items) {
  if (items.empty()) return "(none)";
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ", ";
    out += s;
  }
  return out;
}

void write_round(std::ostringstream& os, const ScreeningRound& round, std::size_t index) {
  const AdequacyReport& a = round.adequacy;
  os << "-- Round " << index << " (" << round.variables.size() << " variables) --\n";
  os << "KMO: " << format_fixed3(a.kmo) << "  " << a.kmo_verdict.message << '\n';
  os << "Bartlett's test of sphericity: chi-square " << format_fixed3(a.bartlett.statistic)
     << ", df " << a.bartlett.df << ", p-value " << format_fixed3(a.bartlett.p_value) << "  "
     << a.bartlett_verdict.message << '\n';
  os << "Anti-image correlation matrix (diagonal: MSA)\n";
  write_matrix(os, a.variable_names, a.variable_names, a.anti_image.values());
  os << "Measures of sampling adequacy\n";
  const std::size_t lw = label_width(a.variable_names);
  for (std::size_t i = 0; i < a.msa.size(); ++i) {
    const double v = a.msa[i];
    const std::string adjective =
        v >= 0.0 && v <= 1.0 ? std::string(to_string(classify_msa(v))) : "n/a";
    os << "  " << pad_right(a.variable_names[i], lw) << format_fixed3(v) << "  " << adjective
       << '\n';
  }
  os << "Excluded: " << join(round.excluded) << "\n\n";
}

void write_equations(std::ostringstream& os, const ScoreCoefficients& c) {
  for (std::size_t k = 0; k < c.components(); ++k) {
    os << c.component_labels()[k] << " =";
    for (std::size_t j = 0; j < c.variables(); ++j) {
      std::string v = format_fixed3(c(j, k));
      const bool negative = v.front() == '-';
      if (negative) v.erase(0, 1);
      if (j == 0) {
        os << ' ' << (negative ? "-" : "") << v << ' ' << c.variable_names()[j];
      } else {
        os << (negative ? " - " : " + ") << v << ' ' << c.variable_names()[j];
      }
    }
    os << '\n';
  }
}

std::string render_text(const PipelineReport& r) {
  std::ostringstream os;
  os << "pcakit " << kVersion << " principal component report\n";
  os << "Observations: " << r.observations << "  Variables: " << r.input_variables.size()
     << "\n\n";

  os << "== Adequacy ==\n";
  for (std::size_t i = 0; i < r.rounds.size(); ++i) write_round(os, r.rounds[i], i + 1);

  if (r.analysis) {
    const PipelineAnalysis& a = *r.analysis;
    os << "== Eigenvalues ==\n";
    os << pad_right("Component", 12) << pad_left("Eigenvalue", 12) << '\n';
    for (std::size_t k = 0; k < a.eigen.eigenvalues.size(); ++k) {
      os << pad_right(std::to_string(k + 1), 12)
         << pad_left(format_fixed3(a.eigen.eigenvalues[k]), 12) << '\n';
    }
    os << "Retained (" << (r.config.retention == RetentionMode::kaiser ? "Kaiser rule" : "fixed")
       << "): " << a.retained << "\n\n";

    os << "== Variance ==\n";
    os << pad_right("Component", 12) << pad_left("Eigenvalue", 12) << pad_left("% of Variance", 16)
       << pad_left("Cumulative %", 16) << '\n';
    for (const auto& row : a.variance) {
      os << pad_right(std::to_string(row.component), 12)
         << pad_left(format_fixed3(row.eigenvalue), 12)
         << pad_left(format_fixed3(row.percent_of_variance), 16)
         << pad_left(format_fixed3(row.cumulative_percent), 16) << '\n';
    }
    os << '\n';

    os << "== Loadings ==\n";
    write_matrix(os, a.unrotated.variable_names(), a.unrotated.component_labels(),
                 a.unrotated.values());
    os << "Complex structure (|loading| > " << format_fixed3(r.config.loading_threshold)
       << " on several components): " << join(a.complex_variables) << "\n\n";

    if (a.rotation) {
      const RotationResult& rot = *a.rotation;
      os << "== Rotated Loadings ==\n";
      os << "Varimax" << (r.config.kaiser_normalize ? " with Kaiser normalization" : "")
         << ", converged in " << rot.sweeps << " sweeps\n";
      write_matrix(os, rot.rotated.variable_names(), rot.rotated.component_labels(),
                   rot.rotated.values());
      os << '\n';
    }

    os << "== Score Coefficients ==\n";
    write_matrix(os, a.coefficients.variable_names(), a.coefficients.component_labels(),
                 a.coefficients.values());
    write_equations(os, a.coefficients);
    os << '\n';
  }

  if (!r.warnings.empty()) {
    os << "== Warnings ==\n";
    for (const auto& w : r.warnings) os << "- " << w << '\n';
    os << '\n';
  }
  if (r.failure) {
    os << "== Failure ==\n";
    os << "Stage: " << r.failure->stage << '\n' << r.failure->message << '\n';
  }
  return os.str();
}

}  // namespace

std::string format_fixed3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

ReportFormat parse_report_format(std::string_view name) {
  if (name == "text") return ReportFormat::text;
  if (name == "json") return ReportFormat::json;
  throw Error(ErrorKind::unknown_format, "unknown report format '" + std::string(name) + "'",
              "report");
}

json report_to_json(const PipelineReport& r) {
  json j;
  j["format_version"] = 1;
  j["config"] = config_json(r.config);
  j["observations"] = r.observations;
  j["input_variables"] = r.input_variables;

  json rounds = json::array();
  for (std::size_t i = 0; i < r.rounds.size(); ++i) {
    rounds.push_back({{"round", i + 1},
                      {"variables", r.rounds[i].variables},
                      {"adequacy", adequacy_json(r.rounds[i].adequacy)},
                      {"excluded", r.rounds[i].excluded}});
  }
  j["rounds"] = std::move(rounds);

  for (const char* key : {"eigen", "variance", "retained", "unrotated", "complex_variables",
                          "rotation", "rotated", "coefficients"}) {
    j[key] = nullptr;
  }
  if (r.analysis) {
    const PipelineAnalysis& a = *r.analysis;
    j["eigen"] = {{"eigenvalues", a.eigen.eigenvalues},
                  {"eigenvectors", matrix_json(a.eigen.eigenvectors)}};
    json variance = json::array();
    for (const auto& row : a.variance) {
      variance.push_back({{"component", row.component},
                          {"eigenvalue", row.eigenvalue},
                          {"percent_of_variance", row.percent_of_variance},
                          {"cumulative_percent", row.cumulative_percent}});
    }
    j["variance"] = std::move(variance);
    j["retained"] = a.retained;
    j["unrotated"] = loadings_json(a.unrotated);
    j["complex_variables"] = a.complex_variables;
    if (a.rotation) {
      j["rotation"] = {{"rotation", matrix_json(a.rotation->rotation)},
                       {"criterion_history", a.rotation->criterion_history},
                       {"sweeps", a.rotation->sweeps}};
      j["rotated"] = loadings_json(a.rotation->rotated);
    }
    j["coefficients"] = {{"variable_names", a.coefficients.variable_names()},
                         {"component_labels", a.coefficients.component_labels()},
                         {"values", matrix_json(a.coefficients.values())}};
  }
  j["warnings"] = r.warnings;
  if (r.failure) {
    j["failure"] = {{"stage", r.failure->stage},
                    {"kind", to_string(r.failure->kind)},
                    {"message", r.failure->message}};
  } else {
    j["failure"] = nullptr;
  }
  return j;
}

PipelineReport report_from_json(const json& j) {
  try {
    PipelineReport r;
    r.config = config_from(j.at("config"));
    r.observations = j.at("observations").get<std::size_t>();
    r.input_variables = j.at("input_variables").get<std::vector<std::string>>();
    for (const json& round : j.at("rounds")) {
      r.rounds.push_back({round.at("variables").get<std::vector<std::string>>(),
                          adequacy_from(round.at("adequacy")),
                          round.at("excluded").get<std::vector<std::string>>()});
    }
    if (!j.at("eigen").is_null()) {
      PipelineAnalysis a;
      const json& e = j.at("eigen");
      a.eigen.eigenvalues = e.at("eigenvalues").get<std::vector<double>>();
      a.eigen.eigenvectors = matrix_from(e.at("eigenvectors"), a.eigen.eigenvalues.size());
      for (const json& row : j.at("variance")) {
        a.variance.push_back({row.at("component").get<int>(), row.at("eigenvalue").get<double>(),
                              row.at("percent_of_variance").get<double>(),
                              row.at("cumulative_percent").get<double>()});
      }
      a.retained = j.at("retained").get<std::size_t>();
      a.unrotated = loadings_from(j.at("unrotated"));
      a.complex_variables = j.at("complex_variables").get<std::vector<std::string>>();
      if (!j.at("rotation").is_null()) {
        const json& rot = j.at("rotation");
        a.rotation = RotationResult{loadings_from(j.at("rotated")),
                                    matrix_from(rot.at("rotation"), a.retained),
                                    rot.at("criterion_history").get<std::vector<double>>(),
                                    rot.at("sweeps").get<int>()};
      }
      const json& c = j.at("coefficients");
      auto labels = c.at("component_labels").get<std::vector<std::string>>();
      const std::size_t m = labels.size();
      a.coefficients =
          ScoreCoefficients(c.at("variable_names").get<std::vector<std::string>>(),
                            std::move(labels), matrix_from(c.at("values"), m));
      r.analysis = std::move(a);
    }
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    if (!j.at("failure").is_null()) {
      const json& f = j.at("failure");
      r.failure = PipelineFailure{f.at("stage").get<std::string>(),
                                  error_kind_from(f.at("kind").get<std::string>()),
                                  f.at("message").get<std::string>()};
    }
    return r;
  } catch (const json::exception& e) {
    malformed(e.what());
  }
}

std::string render_report(const PipelineReport& r, ReportFormat format) {
  if (format == ReportFormat::json) return report_to_json(r).dump(2) + "\n";
  return render_text(r);
}

}  // namespace pcakit
