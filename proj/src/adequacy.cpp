#include "pcakit/adequacy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "pcakit/error.hpp"
#include "pcakit/linalg.hpp"

namespace pcakit {
namespace {

Matrix partial_correlations(const CorrelationMatrix& r) {
  const SymmetricMatrix s = invert_spd(r.base());
  const std::size_t p = r.order();
  Matrix q(p, p);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      const double v = -s(i, j) / std::sqrt(s(i, i) * s(j, j));
      q(i, j) = v;
      q(j, i) = v;
    }
  return q;
}

std::string fmt3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

AntiImageMatrix::AntiImageMatrix(Matrix values, std::vector<std::string> variable_names)
    : values_(std::move(values)), names_(std::move(variable_names)) {
  if (values_.rows() != values_.cols() || names_.size() != values_.rows()) {
    throw Error(ErrorKind::invalid_argument, "anti-image matrix shape mismatch");
  }
}

std::vector<double> AntiImageMatrix::msa_values() const {
  std::vector<double> out(order());
  for (std::size_t i = 0; i < order(); ++i) out[i] = msa(i);
  return out;
}

std::string_view to_string(MsaAdjective a) {
  switch (a) {
    case MsaAdjective::unacceptable: return "unacceptable";
    case MsaAdjective::miserable: return "miserable";
    case MsaAdjective::mediocre: return "mediocre";
    case MsaAdjective::middling: return "middling";
    case MsaAdjective::meritorious: return "meritorious";
    case MsaAdjective::marvellous: return "marvellous";
  }
  return "unknown";
}

AntiImageMatrix anti_image(const CorrelationMatrix& r) {
  Matrix q = partial_correlations(r);
  const std::size_t p = r.order();
  for (std::size_t i = 0; i < p; ++i) {
    double r2 = 0.0;
    double q2 = 0.0;
    for (std::size_t j = 0; j < p; ++j) {
      if (j == i) continue;
      r2 += r(i, j) * r(i, j);
      q2 += q(i, j) * q(i, j);
    }
    if (r2 == 0.0) {
      throw Error(ErrorKind::msa_undefined, "MSA undefined for isolated variable '" +
                                                r.variable_names()[i] + "'");
    }
    q(i, i) = r2 / (r2 + q2);
  }
  return AntiImageMatrix(std::move(q), r.variable_names());
}

double kmo(const CorrelationMatrix& r) {
  const Matrix q = partial_correlations(r);
  const std::size_t p = r.order();
  double r2 = 0.0;
  double q2 = 0.0;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) {
      if (i == j) continue;
      r2 += r(i, j) * r(i, j);
      q2 += q(i, j) * q(i, j);
    }
  if (r2 == 0.0) {
    throw Error(ErrorKind::kmo_undefined, "KMO undefined: all correlations are zero");
  }
  return r2 / (r2 + q2);
}

BartlettResult bartlett_test(const CorrelationMatrix& r, std::size_t n) {
  const std::size_t p = r.order();
  if (n <= p) {
    throw Error(ErrorKind::insufficient_observations,
                "insufficient observations for Bartlett's test (n=" + std::to_string(n) +
                    ", p=" + std::to_string(p) + ")");
  }
  const double log_det = log_determinant(r.base());
  const double factor =
      static_cast<double>(n) - 1.0 - (2.0 * static_cast<double>(p) + 5.0) / 6.0;
  BartlettResult out;
  // ln|R| <= 0 for any correlation matrix; clamp rounding on R ~ I.
  out.statistic = std::max(0.0, -factor * log_det);
  out.df = static_cast<int>(p * (p - 1) / 2);
  out.p_value = chi_square_sf(out.statistic, out.df);
  return out;
}

MsaAdjective classify_msa(double value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw Error(ErrorKind::invalid_argument, "MSA value outside [0, 1]");
  }
  if (value >= 0.90) return MsaAdjective::marvellous;
  if (value >= 0.80) return MsaAdjective::meritorious;
  if (value >= 0.70) return MsaAdjective::middling;
  if (value >= 0.60) return MsaAdjective::mediocre;
  if (value >= 0.50) return MsaAdjective::miserable;
  return MsaAdjective::unacceptable;
}

AdequacyReport assess_adequacy(const CorrelationMatrix& r, std::size_t n,
                               const AdequacyThresholds& thresholds) {
  AntiImageMatrix ai = anti_image(r);
  AdequacyReport rep{.variable_names = r.variable_names(),
                     .kmo = kmo(r),
                     .bartlett = bartlett_test(r, n),
                     .anti_image = ai,
                     .msa = ai.msa_values(),
                     .kmo_verdict = {},
                     .bartlett_verdict = {},
                     .msa_flags = {}};

  if (rep.kmo >= thresholds.kmo) {
    rep.kmo_verdict = {true, "Satisfied. PCA is appropriate for the analysis of these variables"};
  } else {
    rep.kmo_verdict = {false, "Not satisfied. KMO " + fmt3(rep.kmo) + " is below " +
                                  fmt3(thresholds.kmo) + "; data inappropriate for PCA"};
  }
  if (rep.bartlett.p_value < thresholds.bartlett_alpha) {
    rep.bartlett_verdict = {true, "Satisfied. Variables are interrelated"};
  } else {
    rep.bartlett_verdict = {false, "Not satisfied. p-value " + fmt3(rep.bartlett.p_value) +
                                       " is not below " + fmt3(thresholds.bartlett_alpha) +
                                       "; variables not interrelated"};
  }
  for (std::size_t i = 0; i < rep.msa.size(); ++i) {
    if (rep.msa[i] < thresholds.msa) rep.msa_flags.push_back(rep.variable_names[i]);
  }
  return rep;
}

}  // namespace pcakit
