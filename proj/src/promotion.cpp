#include "hookcsp/promotion.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "hookcsp/error.hpp"

namespace hookcsp {

namespace {

constexpr int kDot = 0;

using Grid = Tableau::Rows;

// Membership in the largest top-left-justified block of dotted cells.
bool settled(const Grid& g, std::size_t row, std::size_t col) {
  for (std::size_t r = 0; r <= row; ++r)
    for (std::size_t c = 0; c <= col; ++c)
      if (g[r][c] != kDot) return false;
  return true;
}

// Westernmost dot outside the settled block, northernmost on ties.
bool next_unsettled(const Grid& g, std::size_t& row, std::size_t& col) {
  const std::size_t width = g.empty() ? 0 : g.front().size();
  for (std::size_t c = 0; c < width; ++c)
    for (std::size_t r = 0; r < g.size() && c < g[r].size(); ++r)
      if (g[r][c] == kDot && !settled(g, r, c)) {
        row = r;
        col = c;
        return true;
      }
  return false;
}

void slide(Grid& g, std::size_t r, std::size_t c) {
  while (!settled(g, r, c)) {
    const bool up = r > 0 && g[r - 1][c] != kDot;
    const bool left = c > 0 && g[r][c - 1] != kDot;
    bool go_up;
    if (up && left)
      go_up = g[r][c - 1] <= g[r - 1][c];
    else if (up || left)
      go_up = up;
    else
      throw InconsistencyError("promotion: unsettled dot with no sliding neighbour");
    if (go_up) {
      std::swap(g[r][c], g[r - 1][c]);
      --r;
    } else {
      std::swap(g[r][c], g[r][c - 1]);
      --c;
    }
  }
}

Tableau promote_unchecked(const Tableau& t) {
  const int k = t.alphabet();
  Grid g = t.rows();
  for (auto& row : g)
    for (int& v : row)
      if (v == k) v = kDot;
  std::size_t r = 0;
  std::size_t c = 0;
  while (next_unsettled(g, r, c)) slide(g, r, c);
  for (auto& row : g)
    for (int& v : row) v = (v == kDot) ? 1 : v + 1;
  return Tableau(std::move(g), k);
}

}  // namespace

Tableau promote(const Tableau& t) {
  require_ssyt(t);
  return promote_unchecked(t);
}

Tableau promote_power(const Tableau& t, std::size_t j) {
  require_ssyt(t);
  Tableau cur = t;
  for (std::size_t i = 0; i < j; ++i) cur = promote_unchecked(cur);
  return cur;
}

PromotionOrbit orbit(const Tableau& t, std::size_t step, std::size_t bound) {
  if (step == 0) throw DomainError("orbit step must be positive");
  PromotionOrbit o{t, step, {t}};
  Tableau cur = promote_power(t, step);
  while (!(cur == t)) {
    if (o.members.size() >= bound)
      throw std::runtime_error("promotion orbit exceeds bound " + std::to_string(bound));
    o.members.push_back(cur);
    cur = promote_power(cur, step);
  }
  return o;
}

std::vector<std::size_t> orbit_sizes(std::span<const Tableau> members, std::size_t step) {
  std::map<Tableau, std::size_t> index;
  for (std::size_t i = 0; i < members.size(); ++i) index.emplace(members[i], i);
  std::vector<bool> seen(members.size(), false);
  std::vector<std::size_t> sizes;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (seen[i]) continue;
    const PromotionOrbit o = orbit(members[i], step);
    for (const Tableau& m : o.members) {
      auto it = index.find(m);
      if (it == index.end()) throw DomainError("promotion power does not preserve the family");
      seen[it->second] = true;
    }
    sizes.push_back(o.order());
  }
  return sizes;
}

std::size_t promotion_order_on_family(std::span<const Tableau> members, std::size_t step) {
  if (members.empty()) throw DomainError("promotion order of an empty family");
  std::size_t order = 1;
  for (std::size_t s : orbit_sizes(members, step)) order = std::lcm(order, s);
  return order;
}

std::size_t promotion_order_on_family(const SsytFamily& family, std::size_t step) {
  const auto members = enumerate_generic(family);
  return promotion_order_on_family(members, step);
}

}  // namespace hookcsp
