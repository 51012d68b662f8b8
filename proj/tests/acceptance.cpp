#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "shifted_shapes/free_cumulants.hpp"
#include "shifted_shapes/limit_shapes.hpp"
#include "shifted_shapes/rsk.hpp"
#include "shifted_shapes/samplers.hpp"
#include "shifted_shapes/spin_characters.hpp"
#include "shifted_shapes/tableaux.hpp"

using namespace shs;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const std::function<Outcome()>& body) {
  Outcome out;
  const auto start = Clock::now();
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  if (!out.pass) ++failures;
  std::printf("criterion %2d: %s (%s; %.1f s)\n", id, out.pass ? "PASS" : "FAIL", out.detail.c_str(),
              seconds_since(start));
  std::fflush(stdout);
}

std::string fmt(const char* pattern, double a, double b = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

BigInt pow2(int e) { return BigInt(1) << e; }

Rational plancherel_weight(const StrictPartition& xi, int n) {
  const BigInt g = count_syt(xi);
  Rational w(BigInt(g * g * pow2(n - xi.length())), factorial(n));
  w.canonicalize();
  return w;
}

using PairKey = std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>;

PairKey key(const TableauPair& p) {
  PairKey k;
  for (const auto& row : p.P.rows()) {
    k.first.emplace_back();
    for (const auto& l : row) k.first.back().push_back(l.key());
  }
  const auto& q = p.Q.tableau.rows();
  for (std::size_t y = 0; y < q.size(); ++y) {
    k.second.emplace_back();
    for (std::size_t i = 0; i < q[y].size(); ++i) k.second.back().push_back(2 * q[y][i] - (p.Q.circled[y][i] ? 1 : 0));
  }
  return k;
}

ZigzagProfile random_zigzag(std::mt19937& rng, int max_breakpoints) {
  for (;;) {
    const int m = static_cast<int>(rng() % ((max_breakpoints - 1) / 2)) + 1;
    std::set<Rational> pts;
    while (static_cast<int>(pts.size()) < 2 * m + 1)
      pts.insert(make_rational(static_cast<long>(rng() % 49) - 24, 1 + static_cast<long>(rng() % 6)));
    std::vector<Rational> v(pts.begin(), pts.end()), mins, maxs;
    for (int i = 0; i < 2 * m + 1; ++i) (i % 2 ? maxs : mins).push_back(v[i]);
    Rational sx = 0, sy = 0;
    for (const auto& x : mins) sx += x;
    for (const auto& y : maxs) sy += y;
    mins.back() += sy - sx;
    if (mins.back() > maxs.back()) return ZigzagProfile(mins, maxs);
  }
}

double variance(const std::vector<double>& xs) {
  double mean = 0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double v = 0;
  for (double x : xs) v += (x - mean) * (x - mean);
  return v / static_cast<double>(xs.size() - 1);
}

Outcome plancherel_normalization() {
  const auto start = Clock::now();
  for (int n = 0; n <= 10; ++n) {
    Rational total = 0;
    for (const auto& xi : strict_partitions(n)) total += plancherel_weight(xi, n);
    if (total != 1) return {false, "sum is " + total.get_str() + " at n=" + std::to_string(n)};
  }
  const double t = seconds_since(start);
  return {t < 10, fmt("exact for n <= 10 in %.3f s", t)};
}

Outcome product_formula() {
  int shapes = 0;
  for (int n = 0; n <= 10; ++n)
    for (const auto& xi : strict_partitions(n)) {
      ++shapes;
      if (count_syt(xi) != static_cast<long>(enumerate_syt(xi).size()))
        return {false, "mismatch at " + xi.str()};
    }
  return {true, std::to_string(shapes) + " shapes"};
}

Outcome rsk_certificate() {
  for (int d = 1; d <= 2; ++d)
    for (int n = 1; n <= 4; ++n) {
      long total = 1;
      for (int i = 0; i < n; ++i) total *= 2 * d;
      std::set<PairKey> pairs;
      for (long code = 0; code < total; ++code) {
        CircledWord w;
        long x = code;
        for (int i = 0; i < n; ++i, x /= 2 * d) w.push_back({static_cast<int>(x % d) + 1, (x / d) % 2 == 1});
        pairs.insert(key(rsk(w, d)));
      }
      if (static_cast<long>(pairs.size()) != total)
        return {false, "collision at n=" + std::to_string(n) + " d=" + std::to_string(d)};
      BigInt sum = 0;
      for (const auto& xi : strict_partitions(n)) sum += count_generalized(xi, d) * pow2(n - xi.length()) * count_syt(xi);
      if (sum != total) return {false, "counting identity fails at n=" + std::to_string(n)};
    }
  for (int n = 1; n <= 3; ++n) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    std::map<StrictPartition, long> counts;
    std::set<PairKey> pairs;
    long total = 0;
    do {
      for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<bool> circles(n);
        for (int i = 0; i < n; ++i) circles[i] = (mask >> i) & 1;
        const auto p = rs_circled_permutation(perm, circles);
        pairs.insert(key(p));
        ++counts[shape_of(p)];
        ++total;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (static_cast<long>(pairs.size()) != total) return {false, "circled permutations collide"};
    for (const auto& xi : strict_partitions(n)) {
      Rational freq(counts[xi], total);
      freq.canonicalize();
      if (freq != plancherel_weight(xi, n)) return {false, "Plancherel mismatch at " + xi.str()};
    }
  }
  return {true, "all words n <= 4, d <= 2 injective; circled permutations n <= 3 exact"};
}

Outcome hook_walk_uniformity() {
  const long draws = 100000;
  int tested = 0;
  double worst = 0;
  std::string failed;
  std::uint64_t seed = 4000;
  for (int n = 1; n <= 7; ++n)
    for (const auto& xi : strict_partitions(n)) {
      const auto all = enumerate_syt(xi);
      Rng rng(seed++);
      std::map<ShiftedStandardTableau, long> observed;
      for (long i = 0; i < draws; ++i) ++observed[hook_walk_syt(xi, rng)];
      bool ok = observed.size() <= all.size();
      for (const auto& [t, c] : observed) ok = ok && t.valid() && t.shape() == xi;
      if (all.size() >= 2) {
        ++tested;
        const double e = static_cast<double>(draws) / static_cast<double>(all.size());
        double stat = 0;
        for (const auto& t : all) {
          const auto it = observed.find(t);
          const double o = it == observed.end() ? 0.0 : static_cast<double>(it->second);
          stat += (o - e) * (o - e) / e;
        }
        const double critical = boost::math::quantile(boost::math::chi_squared(all.size() - 1.0), 0.99);
        worst = std::max(worst, stat / critical);
        ok = ok && stat <= critical;
      }
      if (!ok) failed += " " + xi.str();
    }
  if (!failed.empty()) return {false, "rejected at 0.01 for" + failed + fmt(", worst stat/critical %.3f", worst)};
  return {true, std::to_string(tested) + " shapes with >= 2 tableaux" + fmt(", worst stat/critical %.3f", worst)};
}

Outcome calibration_identities() {
  for (int n = 1; n <= 6; ++n) {
    const auto& table = spin_character_table(n);
    for (int d = 1; d <= 3; ++d) {
      const auto sw = schur_weyl_measure(n, d);
      for (const auto& pi : table.classes()) {
        Rational total = 0;
        for (const auto& [xi, p] : sw) total += p * table.ratio(xi, pi);
        const int norm = pi.norm();
        Rational expected = Rational(1) / (Rational(pow2(norm / 2)) * pow(Rational(d), norm));
        if (total != expected) return {false, "Schur-Weyl n=" + std::to_string(n) + " d=" + std::to_string(d)};
      }
    }
    const auto pl = plancherel_measure(n);
    for (const auto& pi : table.classes()) {
      if (pi.reduced().empty()) continue;
      Rational total = 0;
      for (const auto& [xi, p] : pl) total += p * table.ratio(xi, pi);
      if (total != 0) return {false, "Plancherel n=" + std::to_string(n) + " pi=" + pi.str()};
    }
  }
  return {true, "n <= 6, d in {1,2,3}"};
}

Outcome dstar_and_link() {
  int checks = 0;
  for (int k = 1; k <= 5; ++k)
    for (const auto& rho : odd_partitions(k))
      for (int n = 1; n <= 7; ++n) {
        if (!dstar_check(rho, n).ok) return {false, "D* fails for rho=" + rho.str() + " n=" + std::to_string(n)};
        ++checks;
      }
  int links = 0;
  for (int k1 = 1; k1 <= 7; k1 += 2)
    for (int k2 = 1; k1 + k2 <= 8; k2 += 2)
      for (int n = 1; n <= 8; ++n)
        for (const auto& xi : strict_partitions(n)) {
          const OddPartition a({k1}), b({k2}), ab = concatenate(a, b);
          const Rational spin = normalized_spin_char(ab, xi) - normalized_spin_char(a, xi) * normalized_spin_char(b, xi);
          const Partition D = double_partition(xi);
          const Rational lin = linear_normalized_char(ab.as_partition(), D) -
                               linear_normalized_char(a.as_partition(), D) * linear_normalized_char(b.as_partition(), D);
          if (spin * 2 != lin) return {false, "cumulant link fails at " + xi.str()};
          ++links;
        }
  return {true, std::to_string(checks) + " D* checks, " + std::to_string(links) + " link evaluations"};
}

Outcome round_trip() {
  std::mt19937 rng(2718);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> S(13, Rational(0));
    for (int n = 2; n <= 12; ++n) S[n] = make_rational(static_cast<long>(rng() % 41) - 20, 1 + rng() % 9);
    if (s_from_r(r_from_s(S)) != S || r_from_s(s_from_r(S)) != S) return {false, "random sequence"};
  }
  for (int n = 1; n <= 8; ++n)
    for (const auto& xi : strict_partitions(n)) {
      const auto S = sigma_moments(profile(xi), 12);
      if (s_from_r(r_from_s(S)) != S) return {false, "profile of " + xi.str()};
    }
  const auto bern = profile(Partition({1}));
  const auto viaS = r_from_s(sigma_moments(bern, 4));
  const auto cauchy = transition_measure(bern).cauchy;
  const auto viaG = free_cumulants_from_cauchy_exact(cauchy, 4);
  const auto viaGd = free_cumulants_from_cauchy(cauchy, 4);
  const bool ok = viaS[2] == 1 && viaS[4] == -1 && viaG[2] == 1 && viaG[4] == -1 && std::abs(viaGd[2] - 1) < 1e-12 &&
                  std::abs(viaGd[4] + 1) < 1e-12;
  return {ok, "order 12 exact; Bernoulli R2=" + viaS[2].get_str() + ", R4=" + viaS[4].get_str() + " by both routes"};
}

Outcome transition_consistency() {
  std::mt19937 rng(8128);
  double worst_r = 0, worst_shape = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto w = random_zigzag(rng, 6);
    const auto viaS = r_from_s(sigma_moments(w, 8));
    const auto G = transition_measure(w).cauchy;
    const auto viaG = free_cumulants_from_cauchy(G, 8);
    for (int k = 2; k <= 8; ++k) {
      const double ref = viaS[k].get_d();
      worst_r = std::max(worst_r, std::abs(viaG[k] - ref) / std::max(1.0, std::abs(ref)));
    }
    const double lo = w.minima().front().get_d() - 1, hi = w.minima().back().get_d() + 1;
    const auto s = shape_from_cauchy(G, Grid{lo, hi, 301});
    for (int i = 0; i < s.size(); ++i) worst_shape = std::max(worst_shape, std::abs(s.values()[i] - w(s.z(i))));
  }
  return {worst_r < 1e-9 && worst_shape < 2e-3,
          fmt("worst cumulant error %.2e, worst sup-norm %.2e", worst_r, worst_shape)};
}

Outcome lsvk_pipeline() {
  const auto start = Clock::now();
  const auto G = CauchyTransform::from_free_cumulants({0, 0, 1});
  const auto s = shape_from_cauchy(G, Grid{-2, 2, 400});
  const double t = seconds_since(start);
  double err = 0;
  for (int i = 0; i < s.size(); ++i) err = std::max(err, std::abs(s.values()[i] - lsvk_value(s.z(i))));
  const auto centred = shape_from_cauchy(G, Grid{-2, 2, 401});
  const double at0 = std::abs(centred.values()[200] - 4 / M_PI);
  return {err < 1e-4 && at0 < 1e-6 && t < 60,
          fmt("sup error %.2e, |Omega(0) - 4/pi| %.2e", err, at0) + fmt(", %.2f s at 400 points", t)};
}

Outcome schur_weyl_cubic() {
  const auto G = cauchy_sw(1.0);
  double residual = 0;
  for (int i = 0; i < 200; ++i) {
    const double x = -5 + 10.0 * i / 199;
    const std::complex<double> z(x, 0.0);
    residual = std::max(residual, std::abs(G.residual(z, G(z))));
  }
  const auto c2 = sw_shape(2.0, Grid{-1, 1, 201});
  double flat = 0;
  for (int i = 0; i < c2.size(); ++i)
    if (std::abs(c2.z(i)) <= 0.2) flat = std::max(flat, std::abs(c2.values()[i] - std::abs(c2.z(i)) - std::sqrt(2.0) / 2));
  return {residual < 1e-10 && flat < 5e-3,
          fmt("c=1 residual %.2e; c=2 deviation from |x|+sqrt(2)/2 on |x|<=0.2: %.2e", residual, flat)};
}

Outcome desk_lln() {
  const auto start = Clock::now();
  const int n1 = 2000;
  const auto pl = monte_carlo_profile([n1](Rng& rng) { return sample_plancherel(n1, rng); }, 20,
                                      1.0 / std::sqrt(2.0 * n1), 42, Grid{-3, 3, 401}, lsvk_value);
  const int n2 = 5000;
  const int d = static_cast<int>(std::floor(std::sqrt(static_cast<double>(n2))));
  const Grid grid{-4, 4, 401};
  const auto limit = sw_shape(std::sqrt(static_cast<double>(n2)) / d, grid);
  const auto sw = monte_carlo_profile([n2, d](Rng& rng) { return sample_schur_weyl(n2, d, rng); }, 20,
                                      1.0 / std::sqrt(2.0 * n2), 42, grid, [&](double z) { return limit(z); });
  const double t = seconds_since(start);
  const double a = pl.mean_deviation(), b = sw.mean_deviation();
  return {a < 0.1 && b < 0.15 && t < 300, fmt("Plancherel %.4f, Schur-Weyl %.4f", a, b)};
}

Outcome clt_trend() {
  const auto constants = plancherel_constants(8);
  const Rational k44 = clt_covariance(constants, 3, 3), k46 = clt_covariance(constants, 3, 5);
  if (k44 != 6 || k46 != 0) return {false, "k44=" + k44.get_str() + " k46=" + k46.get_str()};
  std::vector<double> scaled;
  std::uint64_t seed = 77;
  for (int n : {1000, 4000}) {
    const auto values = monte_carlo_statistic([n](Rng& rng) { return sample_plancherel(n, rng); }, 5000, seed++,
                                              [](const StrictPartition& xi) { return char_ratio_3(xi); });
    scaled.push_back(std::pow(static_cast<double>(n), 3) * variance(values));
  }
  const double ratio = scaled[0] / scaled[1];
  return {ratio >= 0.8 && ratio <= 1.25,
          fmt("k44=6, k46=0; n^3 Var at n=1000: %.4f, ", scaled[0]) + fmt("n=4000: %.4f", scaled[1]) +
              fmt(", ratio %.3f", ratio)};
}

Outcome restriction_and_bratteli() {
  int compared = 0;
  for (int n = 1; n <= 9; ++n)
    for (const auto& mu : strict_partitions(n)) {
      const auto all = enumerate_syt(mu);
      for (int m = 0; m <= n; ++m) {
        SPMeasure expected;
        for (const auto& t : all) expected[level_set(t, m)] += Rational(1, static_cast<long>(all.size()));
        for (auto& [k, v] : expected) v.canonicalize();
        if (restriction_measure(mu, m) != expected) return {false, "restriction of " + mu.str()};
        ++compared;
      }
    }
  for (int n = 1; n <= 10; ++n)
    for (const auto& mu : strict_partitions(n)) {
      const int c = 1 + static_cast<int>(std::floor((mu.norm() - 1) / 2.0));
      if (Rational(bratteli_dimension(mu)) != Rational(count_syt(mu) * pow2(c)))
        return {false, "Bratteli dimension of " + mu.str()};
    }
  return {true, std::to_string(compared) + " restriction measures exact; Bratteli dimensions for |mu| <= 10"};
}

}  // namespace

int main() {
  report(1, plancherel_normalization);
  report(2, product_formula);
  report(3, rsk_certificate);
  report(4, hook_walk_uniformity);
  report(5, calibration_identities);
  report(6, dstar_and_link);
  report(7, round_trip);
  report(8, transition_consistency);
  report(9, lsvk_pipeline);
  report(10, schur_weyl_cubic);
  report(11, desk_lln);
  report(12, clt_trend);
  report(13, restriction_and_bratteli);
  std::printf("%d of 13 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
