#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace shs {

// Strictly decreasing positive parts. Norm is |xi| - l(xi); SP+ when the norm is even.
class StrictPartition {
 public:
  StrictPartition() = default;
  explicit StrictPartition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int norm() const { return size_ - length(); }
  bool even() const { return norm() % 2 == 0; }
  bool empty() const { return parts_.empty(); }
  // 1-based row access, 0 beyond the last row.
  int row(int y) const { return y >= 1 && y <= length() ? parts_[y - 1] : 0; }

  std::string str() const;

  friend auto operator<=>(const StrictPartition&, const StrictPartition&) = default;
  friend bool operator==(const StrictPartition&, const StrictPartition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// Weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int row(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }
  Partition conjugate() const;
  std::string str() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// Weakly decreasing odd parts; weight is |pi| + l(pi).
class OddPartition {
 public:
  OddPartition() = default;
  explicit OddPartition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int norm() const { return size_ - length(); }
  int weight() const { return size_ + length(); }
  bool empty() const { return parts_.empty(); }
  // Parts other than 1, i.e. the class with its fixed points dropped.
  OddPartition reduced() const;
  OddPartition padded(int n) const;
  Partition as_partition() const { return Partition(parts_); }
  std::string str() const;

  friend auto operator<=>(const OddPartition&, const OddPartition&) = default;
  friend bool operator==(const OddPartition&, const OddPartition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

OddPartition concatenate(const OddPartition& a, const OddPartition& b);

// All strict partitions / partitions / odd partitions of n, in reverse lexicographic order.
std::vector<StrictPartition> strict_partitions(int n);
std::vector<Partition> partitions(int n);
std::vector<OddPartition> odd_partitions(int n);

// Cells {(x, y) : 1 <= y < x <= y + xi_y}, row by row.
std::vector<std::pair<int, int>> cells(const StrictPartition& xi);

// D(xi) with Frobenius coordinates (xi_1, ..., xi_l | xi_1 - 1, ..., xi_l - 1).
Partition double_partition(const StrictPartition& xi);

StrictPartition staircase(int k);

// Strict partitions obtained by adding / removing one box.
std::vector<StrictPartition> shifted_successors(const StrictPartition& xi);
std::vector<StrictPartition> shifted_predecessors(const StrictPartition& xi);

}  // namespace shs
