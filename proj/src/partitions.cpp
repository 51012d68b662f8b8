#include "shifted_shapes/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "shifted_shapes/numeric.hpp"

namespace shs {

namespace {

std::string join(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

// Parts in [1, max_part], non-increasing (or decreasing when strict), summing to n.
void generate(int n, int max_part, bool strict, bool odd_only, std::vector<int>& prefix,
              const std::function<void(const std::vector<int>&)>& emit) {
  if (n == 0) {
    emit(prefix);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    if (odd_only && p % 2 == 0) continue;
    prefix.push_back(p);
    generate(n - p, strict ? p - 1 : p, strict, odd_only, prefix, emit);
    prefix.pop_back();
  }
}

}  // namespace

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw InvalidArgument("strict partition parts must be positive");
    if (i && parts_[i] >= parts_[i - 1]) throw InvalidArgument("strict partition parts must decrease");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string StrictPartition::str() const { return join(parts_); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw InvalidArgument("partition parts must be positive");
    if (i && parts_[i] > parts_[i - 1]) throw InvalidArgument("partition parts must not increase");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  for (int j = 1; j <= row(1); ++j) {
    int h = 0;
    while (h < length() && parts_[h] >= j) ++h;
    c.push_back(h);
  }
  return Partition(std::move(c));
}

std::string Partition::str() const { return join(parts_); }

OddPartition::OddPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1 || parts_[i] % 2 == 0) throw InvalidArgument("odd partition parts must be odd and positive");
    if (i && parts_[i] > parts_[i - 1]) throw InvalidArgument("odd partition parts must not increase");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

OddPartition OddPartition::reduced() const {
  std::vector<int> p;
  for (int x : parts_)
    if (x > 1) p.push_back(x);
  return OddPartition(std::move(p));
}

OddPartition OddPartition::padded(int n) const {
  if (n < size_) throw InvalidArgument("cannot pad an odd partition to a smaller size");
  std::vector<int> p = parts_;
  p.insert(p.end(), n - size_, 1);
  return OddPartition(std::move(p));
}

std::string OddPartition::str() const { return join(parts_); }

OddPartition concatenate(const OddPartition& a, const OddPartition& b) {
  std::vector<int> p = a.parts();
  p.insert(p.end(), b.parts().begin(), b.parts().end());
  std::sort(p.begin(), p.end(), std::greater<>());
  return OddPartition(std::move(p));
}

std::vector<StrictPartition> strict_partitions(int n) {
  if (n < 0) throw InvalidArgument("negative size");
  std::vector<StrictPartition> out;
  std::vector<int> prefix;
  generate(n, n, true, false, prefix, [&](const std::vector<int>& p) { out.emplace_back(p); });
  return out;
}

std::vector<Partition> partitions(int n) {
  if (n < 0) throw InvalidArgument("negative size");
  std::vector<Partition> out;
  std::vector<int> prefix;
  generate(n, n, false, false, prefix, [&](const std::vector<int>& p) { out.emplace_back(p); });
  return out;
}

std::vector<OddPartition> odd_partitions(int n) {
  if (n < 0) throw InvalidArgument("negative size");
  std::vector<OddPartition> out;
  std::vector<int> prefix;
  generate(n, n, false, true, prefix, [&](const std::vector<int>& p) { out.emplace_back(p); });
  return out;
}

std::vector<std::pair<int, int>> cells(const StrictPartition& xi) {
  std::vector<std::pair<int, int>> out;
  out.reserve(xi.size());
  for (int y = 1; y <= xi.length(); ++y)
    for (int x = y + 1; x <= y + xi.row(y); ++x) out.emplace_back(x, y);
  return out;
}

Partition double_partition(const StrictPartition& xi) {
  const int l = xi.length();
  std::vector<int> rows;
  for (int i = 1; i <= l; ++i) rows.push_back(xi.row(i) + i);
  for (int i = l + 1;; ++i) {
    int count = 0;
    for (int j = 1; j <= l; ++j)
      if (xi.row(j) - 1 + j >= i) ++count;
    if (count == 0) break;
    rows.push_back(count);
  }
  return Partition(std::move(rows));
}

StrictPartition staircase(int k) {
  if (k < 1) throw InvalidArgument("staircase needs k >= 1");
  std::vector<int> p;
  for (int i = k; i >= 1; --i) p.push_back(i);
  return StrictPartition(std::move(p));
}

std::vector<StrictPartition> shifted_successors(const StrictPartition& xi) {
  std::vector<StrictPartition> out;
  const auto& p = xi.parts();
  for (int i = 0; i <= xi.length(); ++i) {
    std::vector<int> q = p;
    if (i == xi.length()) {
      q.push_back(1);
    } else {
      q[i] += 1;
    }
    if (i > 0 && i < xi.length() && q[i] >= q[i - 1]) continue;
    if (i == xi.length() && i > 0 && q[i - 1] <= 1) continue;
    out.emplace_back(std::move(q));
  }
  return out;
}

std::vector<StrictPartition> shifted_predecessors(const StrictPartition& xi) {
  std::vector<StrictPartition> out;
  const auto& p = xi.parts();
  for (int i = 0; i < xi.length(); ++i) {
    std::vector<int> q = p;
    q[i] -= 1;
    if (i + 1 < xi.length() && q[i] <= q[i + 1]) continue;
    if (q[i] == 0) q.pop_back();
    out.emplace_back(std::move(q));
  }
  return out;
}

}  // namespace shs
