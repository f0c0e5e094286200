#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "adtk/dataset.hpp"

namespace adtk {

// Binomial logistic fit. Coefficient 0 is the intercept; coefficient j+1
// belongs to predictors[j]. Wald chi-square is (beta/se)^2 with the
// corresponding df=1 upper-tail p-value.
struct LogisticFit {
  std::vector<std::string> predictors;
  Eigen::VectorXd beta;
  Eigen::VectorXd se;
  Eigen::VectorXd wald_chi2;
  Eigen::VectorXd p_value;
  bool converged = false;
  int iterations = 0;
  double log_likelihood = 0;
  std::vector<double> ll_trace;  // log-likelihood after each IRLS step
};

struct Chi2Result {
  std::string attribute;
  double chi2 = 0;
  int df = 0;
  double p_value = 1;
  Eigen::MatrixXd observed;  // rows: attribute categories, cols: target categories
  Eigen::MatrixXd expected;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
};

struct FeatureStat {
  std::string name;
  std::string source;  // "wald" or "chi2"
  double statistic = 0;
  double p_value = 1;
  bool selected = false;
  bool forced = false;
};

struct FeatureSet {
  std::vector<std::string> selected;
  std::vector<FeatureStat> stats;
  double alpha = 0.05;
  std::vector<std::string> force_include;
};

// Upper-tail probability of the chi-square distribution: the regularized
// upper incomplete gamma Q(df/2, x/2), evaluated by series / continued
// fraction. Absolute accuracy around 1e-14.
double chi2_sf(double x, int df);

// Maximum-likelihood logistic regression by Newton/IRLS with step halving,
// so the log-likelihood never decreases. Convergence: max |delta beta| <
// 1e-8 within 50 iterations; a non-converged fit is returned flagged, not
// thrown. Separation (collapsed weights or a numerically singular
// information matrix) is an error.
LogisticFit fit_logistic(const Dataset& ds, const std::vector<std::string>& predictors,
                         const std::string& target);

// Per-coefficient (wald chi2, p). Requires a converged fit.
std::vector<std::pair<double, double>> wald_test(const LogisticFit& fit);

// Pearson chi-squared independence test on the attr x target contingency
// table, no continuity correction. Both columns must be nominal.
Chi2Result chi_squared_test(const Dataset& ds, const std::string& attr,
                            const std::string& target);

// p <= alpha keeps an attribute; force_include names are kept regardless.
FeatureSet select_features(const LogisticFit& fit, const std::vector<Chi2Result>& chi2s,
                           double alpha, const std::vector<std::string>& force_include);

}  // namespace adtk
