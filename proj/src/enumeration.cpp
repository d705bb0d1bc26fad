#include "hookcsp/enumeration.hpp"

#include <functional>

#include "hookcsp/bijection.hpp"
#include "hookcsp/error.hpp"

namespace hookcsp {

namespace {

// Fills cells in reading order (bottom row first, left to right) trying
// letters in increasing order, so solutions come out sorted by reading word.
class GenericEnumerator {
 public:
  GenericEnumerator(const Partition& shape, const Composition& content)
      : shape_(shape), k_(static_cast<int>(content.length())), remaining_(content.parts()) {
    for (int len : shape_.parts()) grid_.emplace_back(static_cast<std::size_t>(len), 0);
    for (auto r = static_cast<int>(grid_.size()) - 1; r >= 0; --r)
      for (std::size_t c = 0; c < grid_[r].size(); ++c) order_.push_back({static_cast<std::size_t>(r), c});
  }

  std::vector<Tableau> run() {
    if (!feasible(0)) return {};
    descend(0);
    return std::move(out_);
  }

 private:
  struct Cell {
    std::size_t row;
    std::size_t col;
  };

  void descend(std::size_t idx) {
    if (idx == order_.size()) {
      out_.emplace_back(grid_, k_);
      return;
    }
    const auto [r, c] = order_[idx];
    int lo = static_cast<int>(r) + 1;
    if (c > 0) lo = std::max(lo, grid_[r][c - 1]);
    int hi = k_;
    if (r + 1 < grid_.size() && c < grid_[r + 1].size()) hi = std::min(hi, grid_[r + 1][c] - 1);
    for (int v = lo; v <= hi; ++v) {
      auto& left = remaining_[static_cast<std::size_t>(v - 1)];
      if (left == 0) continue;
      --left;
      grid_[r][c] = v;
      if (feasible(idx + 1)) descend(idx + 1);
      ++left;
    }
    grid_[r][c] = 0;
  }

  // Hall-type bound: letter v only fits in rows 1..v, so for every t the
  // unplaced letters <= t must fit in the unfilled cells of rows 1..t.
  bool feasible(std::size_t next) const {
    std::vector<int> open_rows(grid_.size(), 0);
    for (std::size_t i = next; i < order_.size(); ++i) ++open_rows[order_[i].row];
    int letters = 0;
    int cells = 0;
    for (int t = 1; t <= k_; ++t) {
      letters += remaining_[static_cast<std::size_t>(t - 1)];
      if (static_cast<std::size_t>(t - 1) < open_rows.size()) cells += open_rows[static_cast<std::size_t>(t - 1)];
      if (letters > cells) return false;
    }
    return true;
  }

  const Partition& shape_;
  int k_;
  std::vector<int> remaining_;
  Tableau::Rows grid_;
  std::vector<Cell> order_;
  std::vector<Tableau> out_;
};

}  // namespace

std::vector<Tableau> enumerate_generic(const SsytFamily& family) {
  if (family.alphabet() < 1 || !family.weights_match()) return {};
  return GenericEnumerator(family.shape, family.content).run();
}

std::vector<Tableau> enumerate_hook_arm(const HookArmShape& shape, const Composition& content) {
  const FreeEntryProfile profile = beta_profile(shape, content);
  if (profile.beta < 0) return {};
  std::vector<Tableau> out;
  for (const Multiset& free : all_multisets(2, shape.b() + 2, profile.beta))
    out.push_back(phi_inverse(shape, content, free));
  return out;
}

std::vector<Composition> compositions(int total, int parts, bool positive_only) {
  std::vector<Composition> out;
  if (parts < 1 || total < 0) return out;
  const int min_part = positive_only ? 1 : 0;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int slots) {
    if (slots == 1) {
      if (left >= min_part) {
        cur.push_back(left);
        out.emplace_back(cur);
        cur.pop_back();
      }
      return;
    }
    for (int p = min_part; p <= left - min_part * (slots - 1); ++p) {
      cur.push_back(p);
      rec(left - p, slots - 1);
      cur.pop_back();
    }
  };
  rec(total, parts);
  return out;
}

}  // namespace hookcsp
