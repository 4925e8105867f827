#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "framecert/hilbert.hpp"
#include "framecert/series_trace.hpp"

namespace framecert {

using NamedValues = std::vector<std::pair<std::string, double>>;

// Slack for comparing predicted against exact bounds, commensurate with the
// eigensolver residuals.
inline constexpr double kEnclosureSlack = 1e-9;

// One executable certificate: the hypothesis quantities that were computed,
// whether the hypothesis holds, predicted bounds when it does, exact bounds,
// and the enclosure verdict. checks_ok gathers the proof-internal
// inequalities verified on the instance (e.g. ||I - L|| <= mu); a violation
// there signals a soundness bug, not a failed hypothesis.
struct CertificateReport {
  std::string theorem;
  NamedValues hypothesis_values;
  bool hypothesis_ok = false;
  std::optional<FrameBounds> predicted;
  std::optional<FrameBounds> actual;
  std::optional<bool> enclosed;
  NamedValues extras;
  std::vector<std::pair<std::string, SeriesTrace>> series_traces;
  std::vector<std::string> notes;
  bool checks_ok = true;

  // Mirrors the CLI exit contract: hypothesis holds, internal checks hold,
  // and the enclosure (when applicable) holds.
  bool passed() const { return hypothesis_ok && checks_ok && enclosed.value_or(true); }
};

// Running sums lambda = sum ||f_k - h_k||^2 and mu = sum ||f_k - h_k|| w_k
// over the members, with every partial retained. Certificates and the
// gallery share this accumulation so their reported sums agree exactly.
struct PerturbationSeries {
  double lambda = 0.0;
  double mu = 0.0;
  std::vector<double> lambda_partials;
  std::vector<double> mu_partials;
};

PerturbationSeries perturbation_series(const VectorFamily& f, const VectorFamily& h,
                                       const std::vector<double>& weights);

std::vector<double> member_norms(const VectorFamily& fam);

struct PaleyWienerResult {
  double lambda_star = 0.0;
  bool basis_predicted = false;
  std::size_t rank_y = 0;
};

// Least lambda with ||sum c_i (x_i - y_i)|| <= lambda ||sum c_i x_i|| for a
// basis x of R^d: sigma_max((X - Y) X^{-1}). Throws NotABasis.
PaleyWienerResult paley_wiener_lambda(const VectorFamily& x, const VectorFamily& y);
CertificateReport paley_wiener_report(const VectorFamily& x, const VectorFamily& y);

// Least mu for the lambda = 0 special case of the two-parameter closeness
// inequality: sigma_max of the difference synthesis.
double christensen_mu_star(const VectorFamily& f, const VectorFamily& g);

// Caller supplies (lambda, mu); they are validated on sampled coefficient
// vectors. Predicted bounds A(1-(lambda+mu/sqrt(A)))^2 and
// B(1+lambda+mu/sqrt(B))^2.
CertificateReport christensen_certificate(const VectorFamily& f, const VectorFamily& g,
                                          double lambda, double mu, std::uint64_t seed = 0);

// lambda = sum ||f_k-h_k||^2, mu = sum ||f_k-h_k|| ||g_k|| against a dual
// frame g (canonical dual when absent). Predicted ((1-mu)^2/D,
// B(1+sqrt(lambda)/sqrt(B))^2).
CertificateReport thm21_certificate(const VectorFamily& f, const VectorFamily& h,
                                    const VectorFamily* dual = nullptr);

// M = Bessel bound of the difference family; requires M < A. Predicted
// ((1-sqrt(M/A))^2 A, (1+sqrt(M/B))^2 B).
CertificateReport favier_zalik_certificate(const VectorFamily& f, const VectorFamily& h);

// Quadratic closeness sum lambda = sum ||f_k-g_k||^2; applicable iff
// lambda < A. Demonstrates instances where the dual-weighted condition
// applies but this one does not.
CertificateReport quadratic_closeness_check(const VectorFamily& f, const VectorFamily& g);

// mu = sum ||f_k-h_k|| ||S^{-1}f_k|| < 1 preserves completeness and excess.
CertificateReport near_riesz_excess_certificate(const VectorFamily& f, const VectorFamily& h);

// Frame-sequence version with the span gap: delta = gap(span h, span f) < 1
// and mu < 1 give bounds ((1-mu)^2/D, B(1+sqrt(lambda)/sqrt(B))^2/(1-delta)^2)
// for h over its own span, and P_L restricted to span(h) is an isomorphism.
CertificateReport gap_certificate(const VectorFamily& f, const VectorFamily& h,
                                  const VectorFamily* dual = nullptr);

// Riesz-sequence version: mu = sum ||f_k-g_k|| ||S^+f_k|| < 1 gives Riesz
// bounds (A(1-mu)^2, B(1+sqrt(lambda)/sqrt(B))^2).
CertificateReport riesz_sequence_certificate(const VectorFamily& f, const VectorFamily& g);

// Finite stand-in for the extension dichotomy: when the orthogonal
// complement of span(f) has >= 2 directions, interleaving scaled complement
// vectors produces a quadratically close family whose lower frame ratio
// r_n = 1/(2n-1)^2 decays to zero.
struct DichotomyReport {
  std::size_t ambient = 0;
  std::size_t codim = 0;
  std::optional<VectorFamily> extension;  // 0, f_1, 0, f_2, ...
  std::optional<VectorFamily> witness;    // e_1, f_1, (1/3)e_3, f_2, ...
  std::vector<double> witness_ratios;     // r_n
  SeriesTrace diff_sq_trace;              // sum ||g_k - h_k||^2 partials
  std::string note;
};

DichotomyReport frame_extension_dichotomy(const VectorFamily& f, std::size_t ambient_d);

}  // namespace framecert
