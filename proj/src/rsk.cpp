#include "shifted_shapes/rsk.hpp"

#include <algorithm>
#include <sstream>

namespace shs {

namespace {

bool primed(int key) { return key % 2 != 0; }

}  // namespace

std::pair<int, int> MixedInserter::insert(int value) {
  if (value < 1) throw InvalidArgument("letter values start at 1");
  ++size_;
  return row_insert(2 * value, 0);
}

std::pair<int, int> MixedInserter::row_insert(int key, int r) {
  for (;;) {
    if (r == static_cast<int>(rows_.size())) {
      rows_.push_back({key});
      return {r, 0};
    }
    auto& row = rows_[r];
    auto it = std::upper_bound(row.begin(), row.end(), key);
    if (it == row.end()) {
      row.push_back(key);
      return {r, static_cast<int>(row.size()) - 1};
    }
    const int pos = static_cast<int>(it - row.begin());
    int bumped = *it;
    *it = key;
    const int column = r + 2 + pos;
    if (pos == 0) {
      return column_insert(bumped - 1, column + 1);
    }
    if (primed(bumped)) return column_insert(bumped, column + 1);
    key = bumped;
    ++r;
  }
}

std::pair<int, int> MixedInserter::column_insert(int key, int c) {
  for (;;) {
    // Rows covering column c form a prefix r = 0, 1, ... (0-based rows start at column r + 2).
    int r = 0;
    for (; r < static_cast<int>(rows_.size()); ++r) {
      const int pos = c - r - 2;
      if (pos < 0 || pos >= static_cast<int>(rows_[r].size())) break;
      if (rows_[r][pos] > key) break;
    }
    const bool covered = r < static_cast<int>(rows_.size()) && c - r - 2 >= 0 &&
                         c - r - 2 < static_cast<int>(rows_[r].size());
    if (!covered) {
      if (r == static_cast<int>(rows_.size())) rows_.emplace_back();
      auto& row = rows_[r];
      if (static_cast<int>(row.size()) != c - r - 2) throw std::logic_error("column insertion left a gap");
      row.push_back(key);
      return {r, static_cast<int>(row.size()) - 1};
    }
    const int pos = c - r - 2;
    const int bumped = rows_[r][pos];
    rows_[r][pos] = key;
    if (!primed(bumped)) return row_insert(bumped, r + 1);
    key = bumped;
    ++c;
  }
}

StrictPartition MixedInserter::shape() const {
  std::vector<int> parts;
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return StrictPartition(std::move(parts));
}

TableauPair rsk(const CircledWord& word, int d) {
  MixedInserter ins;
  std::vector<std::pair<int, int>> placed;
  placed.reserve(word.size());
  for (const auto& letter : word) {
    if (letter.value < 1 || letter.value > d) throw InvalidArgument("letter outside the alphabet");
    placed.push_back(ins.insert(letter.value));
  }
  const StrictPartition shape = ins.shape();
  std::vector<std::vector<CircledLetter>> prow;
  for (const auto& row : ins.rows()) {
    std::vector<CircledLetter> out;
    for (int key : row) out.push_back({(key + 1) / 2, primed(key)});
    prow.push_back(std::move(out));
  }
  std::vector<std::vector<int>> qrow(shape.length());
  std::vector<std::vector<bool>> qcirc(shape.length());
  for (int y = 0; y < shape.length(); ++y) {
    qrow[y].assign(shape.row(y + 1), 0);
    qcirc[y].assign(shape.row(y + 1), false);
  }
  for (std::size_t i = 0; i < placed.size(); ++i) {
    const auto [r, pos] = placed[i];
    qrow[r][pos] = static_cast<int>(i) + 1;
    if (!word[i].circled) continue;
    if (pos == 0) {
      prow[r][0].circled = true;
    } else {
      qcirc[r][pos] = true;
    }
  }
  TableauPair pair{GeneralizedShiftedTableau(shape, std::move(prow)),
                   RecordingTableau{ShiftedStandardTableau(shape, std::move(qrow)), std::move(qcirc)}};
  return pair;
}

TableauPair rs_circled_permutation(const std::vector<int>& perm, const std::vector<bool>& circles) {
  const int n = static_cast<int>(perm.size());
  if (static_cast<int>(circles.size()) != n) throw InvalidArgument("one circle flag per position is required");
  std::vector<bool> seen(n + 1, false);
  CircledWord word;
  for (int i = 0; i < n; ++i) {
    if (perm[i] < 1 || perm[i] > n) throw InvalidArgument("permutation value out of range");
    if (seen[perm[i]]) throw InvalidArgument("repeated value in permutation");
    seen[perm[i]] = true;
    word.push_back({perm[i], circles[i]});
  }
  return rsk(word, std::max(n, 1));
}

StrictPartition shape_of(const TableauPair& pair) { return pair.P.shape(); }

CircledWord parse_word(const std::string& text) {
  CircledWord word;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    token.erase(0, token.find_first_not_of(" \t"));
    token.erase(token.find_last_not_of(" \t") + 1);
    if (token.empty()) continue;
    bool circled = false;
    if (token[0] == 'c') {
      circled = true;
      token.erase(0, 1);
    }
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw InvalidArgument("bad letter token: " + token);
    }
    if (used != token.size() || value < 1) throw InvalidArgument("bad letter token: " + token);
    word.push_back({value, circled});
  }
  return word;
}

}  // namespace shs
