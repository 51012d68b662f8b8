#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "shifted_shapes/numeric.hpp"
#include "shifted_shapes/partitions.hpp"

namespace shs {

inline constexpr int kDefaultOracleBound = 9;
inline constexpr int kDefaultLinearBound = 24;

// Polynomial in the odd power sums p_1, p_3, ..., keyed by the odd partition of the monomial.
using PowerSumPolynomial = std::map<OddPartition, Rational>;

PowerSumPolynomial multiply(const PowerSumPolynomial& a, const PowerSumPolynomial& b);
// q_n from sum_n q_n t^n = exp(2 sum_{k odd} p_k t^k / k).
PowerSumPolynomial q_function(int n);
PowerSumPolynomial schur_q_expansion(const StrictPartition& xi, int bound = kDefaultOracleBound);

BigInt centralizer_size(const OddPartition& pi);

// Character ratios chi^xi(pi) for xi in SP_n and padded classes pi in OP_n.
class SpinCharacterTable {
 public:
  explicit SpinCharacterTable(int n, int bound = kDefaultOracleBound);

  int n() const { return n_; }
  const std::vector<StrictPartition>& shapes() const { return shapes_; }
  const std::vector<OddPartition>& classes() const { return classes_; }

  // c_pi(xi) / c_(1^n)(xi), before calibration.
  Rational raw_ratio(const StrictPartition& xi, const OddPartition& pi) const;
  // Factor B(pi), fixed by the one-letter Schur-Weyl identity.
  const Rational& calibration(const OddPartition& pi) const;
  // pi is padded with fixed points up to n.
  Rational ratio(const StrictPartition& xi, const OddPartition& pi) const;

 private:
  int n_;
  std::vector<StrictPartition> shapes_;
  std::vector<OddPartition> classes_;
  std::map<StrictPartition, PowerSumPolynomial> expansion_;
  std::map<OddPartition, Rational> calibration_;
};

// Shared, lazily built tables (thread-safe).
const SpinCharacterTable& spin_character_table(int n);

Rational char_ratio(const StrictPartition& xi, const OddPartition& pi);
// n^(falling |pi|) * 2^(||pi|| / 2) * chi^xi(pi), or 0 when |pi| > |xi|.
Rational normalized_spin_char(const OddPartition& pi, const StrictPartition& xi);
// chi^xi((3, 1^(n-3))) through the content sum of the double; valid for any n.
double char_ratio_3(const StrictPartition& xi);

// Irreducible character of S_n by Murnaghan-Nakayama.
BigInt linear_character(const Partition& lambda, const Partition& cycle_type);
BigInt linear_dimension(const Partition& lambda);
Rational linear_normalized_char(const Partition& rho, const Partition& lambda, int bound = kDefaultLinearBound);

struct DStarFailure {
  StrictPartition xi;
  Rational lhs;
  Rational rhs;
};

struct DStarResult {
  bool ok = true;
  std::vector<DStarFailure> failures;
};

// Ch_rho(D(xi)) against sum over subsets I of Ch^spin_{rho(I)} Ch^spin_{rho(I^c)}, all xi in SP_n.
DStarResult dstar_check(const OddPartition& rho, int n);

using SPMeasure = std::map<StrictPartition, Rational>;
using ClassFunction = std::function<Rational(const OddPartition&)>;
using ShapeFunction = std::function<Rational(const StrictPartition&)>;

SPMeasure plancherel_measure(int n);
SPMeasure schur_weyl_measure(int n, int d);
SPMeasure restriction_measure(const StrictPartition& mu, int m);
// Solves sum_xi P(xi) chi^xi(pi) = chi(pi) over pi in OP_n.
SPMeasure measure_from_ratios(const ClassFunction& chi, int n);

BigInt saturated_chains(const StrictPartition& from, const StrictPartition& to);
BigInt bratteli_dimension(const StrictPartition& mu, int bound = 12);

// Moment-cumulant inversion over set partitions of {0, ..., l-1}; moment takes a bit mask.
Rational cumulant(int l, const std::function<Rational(unsigned)>& moment);
Rational char_cumulant(const ClassFunction& chi, const std::vector<OddPartition>& pis);
Rational gamma_cumulant(const SPMeasure& p, const std::vector<ShapeFunction>& xs);
Rational disjoint_cumulant(const SPMeasure& p, const std::vector<OddPartition>& pis);

// kappa(pi_1..pi_l) * n^((sum ||pi_i|| + 2(l-1)) / 2) for each n.
std::vector<double> afp_diagnostic(const std::function<ClassFunction(int)>& family, const std::vector<int>& ns,
                                   const std::vector<OddPartition>& pis);

struct LimitConstants {
  std::map<int, Rational> r;
  std::map<std::pair<int, int>, Rational> kbullet;
};

LimitConstants plancherel_constants(int max_index);
// r_{k+1} = (c^2 / 2)^((k-1)/2) for odd k, k-bullet = 0.
LimitConstants schur_weyl_constants(const Rational& c_squared, int max_index);
Rational clt_covariance(const LimitConstants& constants, int k1, int k2);

}  // namespace shs
