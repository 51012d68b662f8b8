#include "shifted_shapes/spin_characters.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>

#include "shifted_shapes/tableaux.hpp"

namespace shs {

PowerSumPolynomial multiply(const PowerSumPolynomial& a, const PowerSumPolynomial& b) {
  PowerSumPolynomial out;
  for (const auto& [ka, va] : a)
    for (const auto& [kb, vb] : b) {
      Rational& slot = out[concatenate(ka, kb)];
      slot += va * vb;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

namespace {

void add_scaled(PowerSumPolynomial& into, const PowerSumPolynomial& x, const Rational& s) {
  for (const auto& [k, v] : x) into[k] += s * v;
  for (auto it = into.begin(); it != into.end();) it = it->second == 0 ? into.erase(it) : std::next(it);
}

PowerSumPolynomial q_pair(int a, int b) {
  if (b == 0) return q_function(a);
  PowerSumPolynomial out = multiply(q_function(a), q_function(b));
  for (int i = 1; i <= b; ++i)
    add_scaled(out, multiply(q_function(a + i), q_function(b - i)), Rational(i % 2 ? -2 : 2));
  return out;
}

PowerSumPolynomial pfaffian(const std::vector<std::vector<PowerSumPolynomial>>& m, std::vector<int> idx) {
  if (idx.empty()) return {{OddPartition(), Rational(1)}};
  PowerSumPolynomial out;
  const int first = idx[0];
  for (std::size_t j = 1; j < idx.size(); ++j) {
    std::vector<int> rest;
    for (std::size_t k = 1; k < idx.size(); ++k)
      if (k != j) rest.push_back(idx[k]);
    add_scaled(out, multiply(m[first][idx[j]], pfaffian(m, rest)), Rational(j % 2 ? 1 : -1));
  }
  return out;
}

}  // namespace

BigInt centralizer_size(const OddPartition& pi) {
  BigInt z = 1;
  std::map<int, int> mult;
  for (int p : pi.parts()) ++mult[p];
  for (const auto& [k, m] : mult) {
    for (int i = 0; i < m; ++i) z *= k;
    z *= factorial(m);
  }
  return z;
}

PowerSumPolynomial q_function(int n) {
  if (n < 0) return {};
  PowerSumPolynomial out;
  for (const auto& pi : odd_partitions(n)) {
    Rational c = Rational(BigInt(1) << pi.length()) / Rational(centralizer_size(pi));
    out[pi] = c;
  }
  return out;
}

PowerSumPolynomial schur_q_expansion(const StrictPartition& xi, int bound) {
  if (xi.size() > bound) throw BoundExceeded("schur_q_expansion: |xi| exceeds the oracle bound");
  std::vector<int> parts = xi.parts();
  if (parts.size() % 2) parts.push_back(0);
  const int m = static_cast<int>(parts.size());
  std::vector<std::vector<PowerSumPolynomial>> mat(m, std::vector<PowerSumPolynomial>(m));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) mat[i][j] = q_pair(parts[i], parts[j]);
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) idx[i] = i;
  return pfaffian(mat, idx);
}

SpinCharacterTable::SpinCharacterTable(int n, int bound)
    : n_(n), shapes_(strict_partitions(n)), classes_(odd_partitions(n)) {
  if (n > bound) throw BoundExceeded("character table: n exceeds the oracle bound");
  for (const auto& xi : shapes_) expansion_[xi] = schur_q_expansion(xi, bound);
  const SPMeasure sw = schur_weyl_measure(n, 1);
  for (const auto& pi : classes_) {
    Rational mean = 0;
    for (const auto& [xi, w] : sw) mean += w * raw_ratio(xi, pi);
    if (mean == 0) throw std::logic_error("calibration: degenerate Schur-Weyl average");
    calibration_[pi] = pow(Rational(2), -pi.norm() / 2) / mean;
  }
}

Rational SpinCharacterTable::raw_ratio(const StrictPartition& xi, const OddPartition& pi) const {
  const auto& e = expansion_.at(xi);
  const auto it = e.find(pi.padded(n_));
  if (it == e.end()) return 0;
  return it->second / e.at(OddPartition().padded(n_));
}

const Rational& SpinCharacterTable::calibration(const OddPartition& pi) const {
  return calibration_.at(pi.padded(n_));
}

Rational SpinCharacterTable::ratio(const StrictPartition& xi, const OddPartition& pi) const {
  if (pi.size() > n_) throw InvalidArgument("class larger than the shape");
  return calibration(pi) * raw_ratio(xi, pi);
}

const SpinCharacterTable& spin_character_table(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<SpinCharacterTable>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<SpinCharacterTable>(n);
  return *slot;
}

Rational char_ratio(const StrictPartition& xi, const OddPartition& pi) {
  return spin_character_table(xi.size()).ratio(xi, pi);
}

Rational normalized_spin_char(const OddPartition& pi, const StrictPartition& xi) {
  const int n = xi.size();
  if (pi.size() > n) return 0;
  if (pi.empty()) return 1;
  return Rational(falling_factorial(n, pi.size())) * pow(Rational(2), pi.norm() / 2) * char_ratio(xi, pi);
}

double char_ratio_3(const StrictPartition& xi) {
  const long n = xi.size();
  if (n < 3) throw InvalidArgument("class (3) needs |xi| >= 3");
  const Partition lambda = double_partition(xi);
  long content_squares = 0;
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.row(i); ++j) content_squares += static_cast<long>(j - i) * (j - i);
  const long m = 2 * n;
  const double ch3 = 3.0 * static_cast<double>(content_squares) - 1.5 * static_cast<double>(m) * (m - 1);
  return ch3 / (4.0 * static_cast<double>(n) * (n - 1) * (n - 2));
}

namespace {

std::vector<int> beta_set(const Partition& lambda) {
  const int l = lambda.length();
  std::vector<int> beta;
  for (int i = l; i >= 1; --i) beta.push_back(lambda.row(i) + (l - i));
  return beta;  // ascending
}

BigInt beta_dimension(const std::vector<int>& beta) {
  const int l = static_cast<int>(beta.size());
  long n = -static_cast<long>(l) * (l - 1) / 2;
  for (int b : beta) n += b;
  Rational f = Rational(factorial(static_cast<int>(n)));
  for (int i = 0; i < l; ++i) {
    f /= Rational(factorial(beta[i]));
    for (int j = i + 1; j < l; ++j) f *= beta[j] - beta[i];
  }
  return f.get_num();
}

BigInt mn_recurse(const std::vector<int>& beta, const std::vector<int>& parts, std::size_t idx,
                  std::map<std::pair<std::vector<int>, std::size_t>, BigInt>& memo) {
  if (idx == parts.size() || parts[idx] == 1) return beta_dimension(beta);
  auto key = std::make_pair(beta, idx);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int k = parts[idx];
  BigInt total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int target = beta[i] - k;
    if (target < 0 || std::binary_search(beta.begin(), beta.end(), target)) continue;
    int between = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++between;
    std::vector<int> next = beta;
    next[i] = target;
    std::sort(next.begin(), next.end());
    const BigInt sub = mn_recurse(next, parts, idx + 1, memo);
    if (between % 2) {
      total -= sub;
    } else {
      total += sub;
    }
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

BigInt linear_character(const Partition& lambda, const Partition& cycle_type) {
  if (lambda.size() != cycle_type.size()) throw InvalidArgument("character arguments differ in size");
  std::map<std::pair<std::vector<int>, std::size_t>, BigInt> memo;
  return mn_recurse(beta_set(lambda), cycle_type.parts(), 0, memo);
}

BigInt linear_dimension(const Partition& lambda) { return beta_dimension(beta_set(lambda)); }

Rational linear_normalized_char(const Partition& rho, const Partition& lambda, int bound) {
  if (lambda.size() > bound) throw BoundExceeded("linear character: |lambda| exceeds the oracle bound");
  const int n = lambda.size();
  const int k = rho.size();
  if (k > n) return 0;
  std::vector<int> cycle = rho.parts();
  cycle.insert(cycle.end(), n - k, 1);
  const Rational ratio = Rational(linear_character(lambda, Partition(cycle))) / Rational(linear_dimension(lambda));
  return Rational(falling_factorial(n, k)) * ratio;
}

DStarResult dstar_check(const OddPartition& rho, int n) {
  DStarResult result;
  const int l = rho.length();
  for (const auto& xi : strict_partitions(n)) {
    const Rational lhs = linear_normalized_char(rho.as_partition(), double_partition(xi));
    Rational rhs = 0;
    for (unsigned mask = 0; mask < (1u << l); ++mask) {
      std::vector<int> in, out;
      for (int i = 0; i < l; ++i) (mask >> i & 1u ? in : out).push_back(rho.parts()[i]);
      rhs += normalized_spin_char(OddPartition(in), xi) * normalized_spin_char(OddPartition(out), xi);
    }
    if (lhs != rhs) {
      result.ok = false;
      result.failures.push_back({xi, lhs, rhs});
    }
  }
  return result;
}

SPMeasure plancherel_measure(int n) {
  SPMeasure p;
  const Rational nf = Rational(factorial(n));
  for (const auto& xi : strict_partitions(n)) {
    const BigInt g = count_syt(xi);
    p[xi] = Rational(BigInt(g * g) << (n - xi.length())) / nf;
  }
  return p;
}

SPMeasure schur_weyl_measure(int n, int d) {
  if (d < 1) throw InvalidArgument("d must be positive");
  SPMeasure p;
  BigInt total = 1;
  for (int i = 0; i < n; ++i) total *= 2 * d;
  for (const auto& xi : strict_partitions(n)) {
    const BigInt count = count_generalized(xi, d) * count_syt(xi);
    if (count == 0) continue;
    p[xi] = Rational(BigInt(count << (n - xi.length()))) / Rational(total);
  }
  return p;
}

namespace {

bool contained(const StrictPartition& a, const StrictPartition& b) {
  if (a.length() > b.length()) return false;
  for (int i = 1; i <= a.length(); ++i)
    if (a.row(i) > b.row(i)) return false;
  return true;
}

BigInt chains(const StrictPartition& from, const StrictPartition& to, std::map<StrictPartition, BigInt>& memo) {
  if (from == to) return 1;
  if (auto it = memo.find(from); it != memo.end()) return it->second;
  BigInt total = 0;
  for (const auto& next : shifted_successors(from))
    if (contained(next, to)) total += chains(next, to, memo);
  memo.emplace(from, total);
  return total;
}

}  // namespace

BigInt saturated_chains(const StrictPartition& from, const StrictPartition& to) {
  if (!contained(from, to)) return 0;
  std::map<StrictPartition, BigInt> memo;
  return chains(from, to, memo);
}

SPMeasure restriction_measure(const StrictPartition& mu, int m) {
  if (m < 0 || m > mu.size()) throw InvalidArgument("restriction level out of range");
  SPMeasure p;
  const Rational gmu = Rational(count_syt(mu));
  for (const auto& xi : strict_partitions(m)) {
    const BigInt c = saturated_chains(xi, mu);
    if (c == 0) continue;
    p[xi] = Rational(BigInt(count_syt(xi) * c)) / gmu;
  }
  return p;
}

SPMeasure measure_from_ratios(const ClassFunction& chi, int n) {
  const SpinCharacterTable& table = spin_character_table(n);
  const auto& shapes = table.shapes();
  const auto& classes = table.classes();
  const std::size_t m = shapes.size();
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) a[r][c] = table.ratio(shapes[c], classes[r]);
    a[r][m] = chi(classes[r]);
  }
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    while (piv < m && a[piv][col] == 0) ++piv;
    if (piv == m) throw std::runtime_error("measure_from_ratios: singular system");
    std::swap(a[piv], a[col]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= m; ++c) a[r][c] -= f * a[col][c];
    }
  }
  SPMeasure p;
  Rational total = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const Rational v = a[i][m] / a[i][i];
    if (v < 0) throw InvalidArgument("measure_from_ratios: solution has a negative weight");
    total += v;
    if (v != 0) p[shapes[i]] = v;
  }
  if (total != 1) throw InvalidArgument("measure_from_ratios: solution does not sum to one");
  return p;
}

BigInt bratteli_dimension(const StrictPartition& mu, int bound) {
  if (mu.size() > bound) throw BoundExceeded("bratteli_dimension: |mu| exceeds the bound");
  std::map<StrictPartition, BigInt> memo;
  std::function<BigInt(const StrictPartition&)> dim = [&](const StrictPartition& z) -> BigInt {
    if (z.empty()) return 1;
    if (auto it = memo.find(z); it != memo.end()) return it->second;
    BigInt total = 0;
    for (const auto& xi : shifted_predecessors(z)) {
      const int mult = (xi.even() && !z.even()) ? 2 : 1;
      total += mult * dim(xi);
    }
    memo.emplace(z, total);
    return total;
  };
  return dim(mu);
}

namespace {

void set_partitions(int l, int i, std::vector<unsigned>& blocks, const std::function<void()>& emit) {
  if (i == l) {
    emit();
    return;
  }
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    blocks[k] |= 1u << i;
    set_partitions(l, i + 1, blocks, emit);
    blocks[k] &= ~(1u << i);
  }
  blocks.push_back(1u << i);
  set_partitions(l, i + 1, blocks, emit);
  blocks.pop_back();
}

}  // namespace

Rational cumulant(int l, const std::function<Rational(unsigned)>& moment) {
  if (l < 1) throw InvalidArgument("cumulant needs at least one argument");
  std::map<unsigned, Rational> cache;
  auto m = [&](unsigned mask) -> const Rational& {
    auto it = cache.find(mask);
    if (it == cache.end()) it = cache.emplace(mask, moment(mask)).first;
    return it->second;
  };
  Rational total = 0;
  std::vector<unsigned> blocks;
  set_partitions(l, 0, blocks, [&] {
    const int k = static_cast<int>(blocks.size());
    Rational term = Rational(factorial(k - 1));
    if ((k - 1) % 2) term = -term;
    for (unsigned b : blocks) term *= m(b);
    total += term;
  });
  return total;
}

namespace {

OddPartition concat_mask(const std::vector<OddPartition>& pis, unsigned mask) {
  OddPartition out;
  for (std::size_t i = 0; i < pis.size(); ++i)
    if (mask >> i & 1u) out = concatenate(out, pis[i]);
  return out;
}

}  // namespace

Rational char_cumulant(const ClassFunction& chi, const std::vector<OddPartition>& pis) {
  return cumulant(static_cast<int>(pis.size()), [&](unsigned mask) { return chi(concat_mask(pis, mask)); });
}

Rational gamma_cumulant(const SPMeasure& p, const std::vector<ShapeFunction>& xs) {
  return cumulant(static_cast<int>(xs.size()), [&](unsigned mask) {
    Rational e = 0;
    for (const auto& [xi, w] : p) {
      Rational v = w;
      for (std::size_t i = 0; i < xs.size(); ++i)
        if (mask >> i & 1u) v *= xs[i](xi);
      e += v;
    }
    return e;
  });
}

Rational disjoint_cumulant(const SPMeasure& p, const std::vector<OddPartition>& pis) {
  return cumulant(static_cast<int>(pis.size()), [&](unsigned mask) {
    const OddPartition joined = concat_mask(pis, mask);
    Rational e = 0;
    for (const auto& [xi, w] : p) e += w * normalized_spin_char(joined, xi);
    return e;
  });
}

std::vector<double> afp_diagnostic(const std::function<ClassFunction(int)>& family, const std::vector<int>& ns,
                                   const std::vector<OddPartition>& pis) {
  int exponent2 = 2 * (static_cast<int>(pis.size()) - 1);
  for (const auto& pi : pis) exponent2 += pi.norm();
  std::vector<double> out;
  for (int n : ns) {
    const Rational k = char_cumulant(family(n), pis);
    out.push_back(k.get_d() * std::pow(static_cast<double>(n), exponent2 / 2.0));
  }
  return out;
}

LimitConstants plancherel_constants(int max_index) {
  LimitConstants c;
  for (int i = 2; i <= max_index; ++i) c.r[i] = i == 2 ? 1 : 0;
  for (int a = 2; a <= max_index; a += 2)
    for (int b = 2; b <= max_index; b += 2) c.kbullet[{a, b}] = 0;
  return c;
}

LimitConstants schur_weyl_constants(const Rational& c_squared, int max_index) {
  LimitConstants c;
  for (int i = 2; i <= max_index; ++i) c.r[i] = i % 2 == 0 ? pow(c_squared / 2, (i - 2) / 2) : Rational(0);
  for (int a = 2; a <= max_index; a += 2)
    for (int b = 2; b <= max_index; b += 2) c.kbullet[{a, b}] = 0;
  return c;
}

Rational clt_covariance(const LimitConstants& constants, int k1, int k2) {
  if (k1 < 1 || k2 < 1 || k1 % 2 == 0 || k2 % 2 == 0) throw InvalidArgument("clt_covariance needs odd k1, k2");
  auto r = [&](int i) -> const Rational& {
    auto it = constants.r.find(i);
    if (it == constants.r.end()) throw InvalidArgument("missing free cumulant r_" + std::to_string(i));
    return it->second;
  };
  auto kb = constants.kbullet.find({k1 + 1, k2 + 1});
  if (kb == constants.kbullet.end()) throw InvalidArgument("missing k-bullet entry");
  for (int i = 2; i <= k1 + k2; ++i) r(i);
  // F[len][A][B]: sum over len pairs (a_i, b_i) >= 1, a_i + b_i even, sum a = A, sum b = B, of prod r.
  const int top = std::min(k1, k2);
  std::vector<std::vector<std::vector<Rational>>> F(
      top + 1, std::vector<std::vector<Rational>>(k1 + 1, std::vector<Rational>(k2 + 1)));
  F[0][0][0] = 1;
  Rational sum = 0;
  for (int len = 1; len <= top; ++len) {
    for (int A = 1; A <= k1; ++A)
      for (int B = 1; B <= k2; ++B)
        for (int a = 1; a <= A; ++a)
          for (int b = 1; b <= B; ++b) {
            if ((a + b) % 2) continue;
            if (F[len - 1][A - a][B - b] == 0) continue;
            F[len][A][B] += r(a + b) * F[len - 1][A - a][B - b];
          }
    sum += make_rational(k1 * k2, len) * F[len][k1][k2];
  }
  return kb->second - 2 * k1 * k2 * r(k1 + 1) * r(k2 + 1) + 2 * sum;
}

}  // namespace shs
