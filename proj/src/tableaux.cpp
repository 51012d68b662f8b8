#include "shifted_shapes/tableaux.hpp"

#include <functional>

namespace shs {

ShiftedStandardTableau::ShiftedStandardTableau(StrictPartition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.length()) throw InvalidArgument("tableau rows do not match shape");
  for (int y = 1; y <= shape_.length(); ++y)
    if (static_cast<int>(rows_[y - 1].size()) != shape_.row(y)) throw InvalidArgument("tableau row length mismatch");
}

bool ShiftedStandardTableau::valid() const {
  std::vector<bool> seen(size() + 1, false);
  for (int y = 1; y <= shape_.length(); ++y) {
    for (int x = y + 1; x <= y + shape_.row(y); ++x) {
      const int v = at(x, y);
      if (v < 1 || v > size() || seen[v]) return false;
      seen[v] = true;
      if (x > y + 1 && at(x - 1, y) >= v) return false;
      if (y > 1 && at(x, y - 1) >= v) return false;
    }
  }
  return true;
}

GeneralizedShiftedTableau::GeneralizedShiftedTableau(StrictPartition shape,
                                                     std::vector<std::vector<CircledLetter>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.length()) throw InvalidArgument("tableau rows do not match shape");
  for (int y = 1; y <= shape_.length(); ++y)
    if (static_cast<int>(rows_[y - 1].size()) != shape_.row(y)) throw InvalidArgument("tableau row length mismatch");
}

bool GeneralizedShiftedTableau::valid() const {
  for (int y = 1; y <= shape_.length(); ++y) {
    for (int x = y + 1; x <= y + shape_.row(y); ++x) {
      const CircledLetter& c = at(x, y);
      if (c.value < 1) return false;
      if (x > y + 1) {
        const CircledLetter& left = at(x - 1, y);
        if (left > c || (left == c && c.circled)) return false;
      }
      if (y > 1) {
        const CircledLetter& below = at(x, y - 1);
        if (below > c || (below == c && !c.circled)) return false;
      }
    }
  }
  return true;
}

bool RecordingTableau::valid() const {
  if (!tableau.valid()) return false;
  if (circled.size() != tableau.rows().size()) return false;
  for (std::size_t y = 0; y < circled.size(); ++y) {
    if (circled[y].size() != tableau.rows()[y].size()) return false;
    if (!circled[y].empty() && circled[y][0]) return false;
  }
  return true;
}

BigInt count_syt(const StrictPartition& xi) {
  Rational g = Rational(factorial(xi.size()));
  const auto& p = xi.parts();
  for (int a : p) g /= Rational(factorial(a));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) g *= make_rational(p[i] - p[j], p[i] + p[j]);
  if (g.get_den() != 1) throw std::logic_error("product formula produced a non-integer");
  return g.get_num();
}

std::vector<ShiftedStandardTableau> enumerate_syt(const StrictPartition& xi, int bound) {
  if (xi.size() > bound) throw BoundExceeded("enumerate_syt: |xi| exceeds the enumeration bound");
  const int l = xi.length();
  std::vector<std::vector<int>> rows(l);
  std::vector<ShiftedStandardTableau> out;
  // Place 1..n one at a time; each row fills from left to right.
  std::function<void(int)> place = [&](int v) {
    if (v > xi.size()) {
      out.emplace_back(xi, rows);
      return;
    }
    for (int y = 1; y <= l; ++y) {
      const int k = static_cast<int>(rows[y - 1].size());
      if (k == xi.row(y)) continue;
      const int x = y + 1 + k;
      if (y > 1) {
        // Cell below (x, y-1) must be filled already.
        const int below_k = x - (y - 1) - 1;
        if (below_k >= static_cast<int>(rows[y - 2].size())) continue;
      }
      rows[y - 1].push_back(v);
      place(v + 1);
      rows[y - 1].pop_back();
    }
  };
  place(1);
  return out;
}

StrictPartition level_set(const ShiftedStandardTableau& t, int i) {
  if (i < 0 || i > t.size()) throw InvalidArgument("level_set index out of range");
  std::vector<int> parts;
  for (const auto& row : t.rows()) {
    int count = 0;
    for (int v : row)
      if (v <= i) ++count;
    if (count > 0) parts.push_back(count);
  }
  return StrictPartition(std::move(parts));
}

BigInt count_generalized(const StrictPartition& xi, int d, int bound) {
  if (d < 1) throw InvalidArgument("alphabet size must be positive");
  if (xi.size() > bound) throw BoundExceeded("count_generalized: |xi| exceeds the enumeration bound");
  const int l = xi.length();
  if (l > d) return 0;
  std::vector<std::pair<int, int>> order = cells(xi);
  std::vector<std::vector<int>> key(l + 1);
  for (int y = 1; y <= l; ++y) key[y].assign(xi.row(y), 0);
  auto at = [&](int x, int y) -> int& { return key[y][x - y - 1]; };
  BigInt total = 0;
  std::function<void(std::size_t)> fill = [&](std::size_t idx) {
    if (idx == order.size()) {
      ++total;
      return;
    }
    const auto [x, y] = order[idx];
    for (int k = 1; k <= 2 * d; ++k) {
      const bool circled = k % 2 == 1;
      if (x > y + 1) {
        const int left = at(x - 1, y);
        if (left > k || (left == k && circled)) continue;
      }
      if (y > 1) {
        const int below = at(x, y - 1);
        if (below > k || (below == k && !circled)) continue;
      }
      at(x, y) = k;
      fill(idx + 1);
    }
  };
  fill(0);
  return total;
}

}  // namespace shs
