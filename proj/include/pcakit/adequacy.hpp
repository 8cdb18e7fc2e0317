#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pcakit/matrix.hpp"
#include "pcakit/stats.hpp"

namespace pcakit {

/// Anti-image correlation matrix. Off-diagonal (i, j) holds the partial
/// correlation of i and j controlling for all other variables,
/// q_ij = -s_ij / sqrt(s_ii s_jj) with S = R^-1. The diagonal holds each
/// variable's measure of sampling adequacy (MSA).
class AntiImageMatrix {
 public:
  AntiImageMatrix() = default;
  AntiImageMatrix(Matrix values, std::vector<std::string> variable_names);

  std::size_t order() const noexcept { return values_.rows(); }
  double msa(std::size_t i) const { return values_(i, i); }
  double partial(std::size_t i, std::size_t j) const { return values_(i, j); }
  std::vector<double> msa_values() const;
  const Matrix& values() const noexcept { return values_; }
  const std::vector<std::string>& variable_names() const noexcept { return names_; }

 private:
  Matrix values_;
  std::vector<std::string> names_;
};

/// Kaiser's adjective scale for MSA/KMO values.
enum class MsaAdjective { unacceptable, miserable, mediocre, middling, meritorious, marvellous };

std::string_view to_string(MsaAdjective a);

struct BartlettResult {
  double statistic = 0.0;
  int df = 0;
  double p_value = 1.0;
};

struct Verdict {
  bool pass = false;
  std::string message;
};

struct AdequacyThresholds {
  double msa = 0.50;
  double kmo = 0.50;
  double bartlett_alpha = 0.01;
};

struct AdequacyReport {
  std::vector<std::string> variable_names;
  double kmo = 0.0;
  BartlettResult bartlett;
  AntiImageMatrix anti_image;
  std::vector<double> msa;
  Verdict kmo_verdict;
  Verdict bartlett_verdict;
  /// Variables whose MSA is below the threshold, in variable order.
  std::vector<std::string> msa_flags;
};

/// Throws ErrorKind::singular_matrix if R is not invertible and
/// ErrorKind::msa_undefined if some variable has zero correlation with all
/// others.
AntiImageMatrix anti_image(const CorrelationMatrix& r);

/// Throws ErrorKind::kmo_undefined if every off-diagonal correlation is 0.
double kmo(const CorrelationMatrix& r);

/// Bartlett's sphericity test, stat = -(n - 1 - (2p + 5)/6) ln|R| on
/// p(p-1)/2 degrees of freedom.
BartlettResult bartlett_test(const CorrelationMatrix& r, std::size_t n);

MsaAdjective classify_msa(double value);

/// Runs KMO, Bartlett and the anti-image battery and applies the thresholds.
AdequacyReport assess_adequacy(const CorrelationMatrix& r, std::size_t n,
                               const AdequacyThresholds& thresholds = {});

}  // namespace pcakit
