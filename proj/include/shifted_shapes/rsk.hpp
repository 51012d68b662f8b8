#pragma once

#include <string>
#include <utility>
#include <vector>

#include "shifted_shapes/partitions.hpp"
#include "shifted_shapes/tableaux.hpp"

namespace shs {

using CircledWord = std::vector<CircledLetter>;

struct TableauPair {
  GeneralizedShiftedTableau P;
  RecordingTableau Q;

  friend bool operator==(const TableauPair&, const TableauPair&) = default;
};

// Mixed insertion on letter values. Entries are keys 2v - primed; primes come only from
// entries bumped off the diagonal, so the diagonal stays unprimed. Shape-only callers
// (the samplers) use this directly.
class MixedInserter {
 public:
  // Returns the new cell as (row index from 0, position in row from 0).
  std::pair<int, int> insert(int value);

  int size() const { return size_; }
  StrictPartition shape() const;
  const std::vector<std::vector<int>>& rows() const { return rows_; }

 private:
  std::pair<int, int> row_insert(int key, int r);
  std::pair<int, int> column_insert(int key, int c);

  std::vector<std::vector<int>> rows_;
  int size_ = 0;
};

TableauPair rsk(const CircledWord& word, int d);
TableauPair rs_circled_permutation(const std::vector<int>& perm, const std::vector<bool>& circles);
StrictPartition shape_of(const TableauPair& pair);

// Comma-separated tokens, "3" or "c3" for circled.
CircledWord parse_word(const std::string& text);

}  // namespace shs
