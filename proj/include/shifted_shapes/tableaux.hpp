#pragma once

#include <compare>
#include <vector>

#include "shifted_shapes/numeric.hpp"
#include "shifted_shapes/partitions.hpp"

namespace shs {

// Entries stored row by row: rows[y-1][k] sits in cell (x, y) = (y + 1 + k, y).
class ShiftedStandardTableau {
 public:
  ShiftedStandardTableau() = default;
  ShiftedStandardTableau(StrictPartition shape, std::vector<std::vector<int>> rows);

  const StrictPartition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int at(int x, int y) const { return rows_[y - 1][x - y - 1]; }
  int size() const { return shape_.size(); }

  // Rows increase to the right, columns increase upwards, entries are exactly 1..n.
  bool valid() const;

  friend auto operator<=>(const ShiftedStandardTableau&, const ShiftedStandardTableau&) = default;
  friend bool operator==(const ShiftedStandardTableau&, const ShiftedStandardTableau&) = default;

 private:
  StrictPartition shape_;
  std::vector<std::vector<int>> rows_;
};

// Letters of the circled alphabet, ordered (1) < 1 < (2) < 2 < ...
struct CircledLetter {
  int value = 1;
  bool circled = false;

  int key() const { return 2 * value - (circled ? 1 : 0); }
  friend bool operator==(const CircledLetter&, const CircledLetter&) = default;
  friend auto operator<=>(const CircledLetter& a, const CircledLetter& b) { return a.key() <=> b.key(); }
};

class GeneralizedShiftedTableau {
 public:
  GeneralizedShiftedTableau() = default;
  GeneralizedShiftedTableau(StrictPartition shape, std::vector<std::vector<CircledLetter>> rows);

  const StrictPartition& shape() const { return shape_; }
  const std::vector<std::vector<CircledLetter>>& rows() const { return rows_; }
  const CircledLetter& at(int x, int y) const { return rows_[y - 1][x - y - 1]; }

  // Weakly increasing along rows and columns; a circled letter at most once per row,
  // an uncircled letter at most once per column.
  bool valid() const;

  friend bool operator==(const GeneralizedShiftedTableau&, const GeneralizedShiftedTableau&) = default;

 private:
  StrictPartition shape_;
  std::vector<std::vector<CircledLetter>> rows_;
};

// Standard tableau plus circling flags, which are only allowed off the diagonal.
struct RecordingTableau {
  ShiftedStandardTableau tableau;
  std::vector<std::vector<bool>> circled;

  bool valid() const;
  friend bool operator==(const RecordingTableau&, const RecordingTableau&) = default;
};

inline constexpr int kDefaultEnumerationBound = 12;

BigInt count_syt(const StrictPartition& xi);
std::vector<ShiftedStandardTableau> enumerate_syt(const StrictPartition& xi, int bound = kDefaultEnumerationBound);
StrictPartition level_set(const ShiftedStandardTableau& t, int i);
BigInt count_generalized(const StrictPartition& xi, int d, int bound = kDefaultEnumerationBound);

}  // namespace shs
