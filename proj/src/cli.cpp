#include "pcakit/cli.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "pcakit/csv.hpp"
#include "pcakit/pipeline.hpp"
#include "pcakit/report.hpp"
#include "pcakit/scree.hpp"

namespace pcakit {
namespace {

struct Invocation {
  std::string input;
  std::string format = "text";
  double msa_threshold = 0.50;
  double kmo_threshold = 0.50;
  double alpha = 0.01;
  double loading_threshold = 0.50;
  std::string retain = "kaiser";
  std::string rotate = "always";
  std::string exclusion = "batch";
  std::string scree_out;
  std::string scores_out;
};

void report_error(std::ostream& err, const Error& e) {
  err << "error [" << (e.stage().empty() ? "pcakit" : e.stage()) << "]: " << e.what() << '\n';
}

PipelineConfig to_config(const Invocation& inv) {
  PipelineConfig cfg;
  cfg.msa_threshold = inv.msa_threshold;
  cfg.kmo_threshold = inv.kmo_threshold;
  cfg.bartlett_alpha = inv.alpha;
  cfg.loading_threshold = inv.loading_threshold;
  if (inv.retain == "kaiser") {
    cfg.retention = RetentionMode::kaiser;
  } else {
    std::size_t count = 0;
    const auto* end = inv.retain.data() + inv.retain.size();
    const auto [ptr, ec] = std::from_chars(inv.retain.data(), end, count);
    if (ec != std::errc() || ptr != end || count == 0) {
      throw Error(ErrorKind::invalid_argument,
                  "--retain expects 'kaiser' or a positive integer, got '" + inv.retain + "'",
                  "usage");
    }
    cfg.retention = RetentionMode::fixed;
    cfg.fixed_components = count;
  }
  cfg.rotate = inv.rotate == "never"        ? RotateMode::never
               : inv.rotate == "on-complex" ? RotateMode::on_complex
                                            : RotateMode::always;
  cfg.exclusion = inv.exclusion == "iterative" ? ExclusionMode::iterative : ExclusionMode::batch;
  try {
    cfg.validate();
  } catch (Error& e) {
    e.set_stage("usage");
    throw;
  }
  return cfg;
}

std::string lower_extension(const std::string& path) {
  std::string ext = std::filesystem::path(path).extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext;
}

void write_file(const std::string& path, const std::string& content, const std::string& stage) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content)) {
    throw Error(ErrorKind::io_error, "cannot write '" + path + "'", stage);
  }
}

void write_artifacts(const Invocation& inv, const DataMatrix& data, const PipelineReport& report) {
  if (!report.analysis) return;
  const PipelineAnalysis& a = *report.analysis;
  if (!inv.scree_out.empty()) {
    const auto points = scree_data(a.eigen.eigenvalues);
    const bool svg = lower_extension(inv.scree_out) == ".svg";
    write_file(inv.scree_out, svg ? scree_svg(points) : scree_csv(points), "scree output");
  }
  if (!inv.scores_out.empty()) {
    std::vector<std::size_t> columns;
    for (const auto& name : report.final_variables()) {
      const auto& names = data.variable_names();
      columns.push_back(static_cast<std::size_t>(
          std::find(names.begin(), names.end(), name) - names.begin()));
    }
    const DataMatrix z = standardize(data.select(columns));
    try {
      const Matrix scores = compute_scores(z, a.coefficients);
      write_file(inv.scores_out, write_csv(a.coefficients.component_labels(), scores),
                 "scores output");
    } catch (Error& e) {
      if (e.stage().empty()) e.set_stage("scores output");
      throw;
    }
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Principal component analysis with sampling-adequacy screening and varimax "
               "rotation",
               "pcakit"};
  Invocation inv;
  app.add_option("--input", inv.input, "CSV file: header of variable names, one row per "
                                        "observation")
      ->required();
  app.add_option("--format", inv.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--msa-threshold", inv.msa_threshold,
                 "Exclude variables whose MSA falls below this")
      ->capture_default_str();
  app.add_option("--kmo-threshold", inv.kmo_threshold, "Minimum overall KMO")
      ->capture_default_str();
  app.add_option("--alpha", inv.alpha, "Bartlett significance level")->capture_default_str();
  app.add_option("--loading-threshold", inv.loading_threshold,
                 "|loading| marking a heavy load for complex-structure detection")
      ->capture_default_str();
  app.add_option("--retain", inv.retain, "Component retention: kaiser or a fixed count N")
      ->capture_default_str();
  app.add_option("--rotate", inv.rotate, "Varimax rotation policy")
      ->check(CLI::IsMember({"always", "on-complex", "never"}))
      ->capture_default_str();
  app.add_option("--exclusion", inv.exclusion, "Low-MSA exclusion strategy")
      ->check(CLI::IsMember({"batch", "iterative"}))
      ->capture_default_str();
  app.add_option("--scree-out", inv.scree_out, "Write scree data (.csv or .svg)");
  app.add_option("--scores-out", inv.scores_out, "Write component scores (.csv)");
  app.set_version_flag("--version", std::string(kVersion));
  app.allow_windows_style_options(false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << "pcakit " << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error [usage]: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  PipelineConfig cfg;
  ReportFormat format = ReportFormat::text;
  try {
    cfg = to_config(inv);
    format = parse_report_format(inv.format);
    if (!inv.scree_out.empty()) {
      const std::string ext = lower_extension(inv.scree_out);
      if (ext != ".csv" && ext != ".svg") {
        throw Error(ErrorKind::unknown_format, "--scree-out must end in .csv or .svg", "usage");
      }
    }
  } catch (const Error& e) {
    report_error(err, e);
    err << app.help();
    return kExitUsage;
  }

  std::optional<DataMatrix> data;
  try {
    data = ingest_csv(inv.input);
  } catch (Error& e) {
    e.set_stage("ingest");
    report_error(err, e);
    if (e.kind() == ErrorKind::io_error) err << app.help();
    return kExitUsage;
  }

  try {
    const PipelineReport report = run_pipeline(*data, cfg);
    out << render_report(report, format);
    write_artifacts(inv, *data, report);
    return kExitOk;
  } catch (const PipelineError& e) {
    out << render_report(e.report(), format);
    report_error(err, e);
    const bool gate =
        e.kind() == ErrorKind::data_inappropriate || e.kind() == ErrorKind::not_interrelated;
    return gate ? kExitInadequate : kExitUsage;
  } catch (const Error& e) {
    report_error(err, e);
    return kExitUsage;
  }
}

}  // namespace pcakit
