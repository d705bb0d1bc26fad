#include "hookcsp/bijection.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "hookcsp/error.hpp"

namespace hookcsp {

Multiset::Multiset(int lo, int hi, std::vector<int> elements) : lo_(lo), hi_(hi), elements_(std::move(elements)) {
  if (hi_ < lo_) throw DomainError("multiset support is empty");
  std::sort(elements_.begin(), elements_.end());
  for (int e : elements_)
    if (e < lo_ || e > hi_)
      throw DomainError("multiset element " + std::to_string(e) + " outside [" + std::to_string(lo_) + ", " +
                        std::to_string(hi_) + "]");
}

std::size_t Multiset::count(int value) const {
  auto [first, last] = std::equal_range(elements_.begin(), elements_.end(), value);
  return static_cast<std::size_t>(last - first);
}

int Multiset::sum() const { return std::accumulate(elements_.begin(), elements_.end(), 0); }

Multiset Multiset::rotated(int steps) const {
  const int width = hi_ - lo_ + 1;
  const int s = ((steps % width) + width) % width;
  std::vector<int> out;
  out.reserve(elements_.size());
  for (int e : elements_) out.push_back(lo_ + (e - lo_ + s) % width);
  return Multiset(lo_, hi_, std::move(out));
}

Multiset Multiset::shifted(int delta) const {
  std::vector<int> out = elements_;
  for (int& e : out) e += delta;
  return Multiset(lo_ + delta, hi_ + delta, std::move(out));
}

std::vector<Multiset> all_multisets(int lo, int hi, int k) {
  std::vector<Multiset> out;
  if (k < 0 || hi < lo) return out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(cur.size()) == k) {
      out.emplace_back(lo, hi, cur);
      return;
    }
    for (int v = from; v <= hi; ++v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(lo);
  return out;
}

FreeEntryProfile beta_profile(const HookArmShape& shape, const Composition& content) {
  const int n = shape.n();
  if (static_cast<int>(content.length()) != shape.alphabet())
    throw DomainError("content must have b+2 = " + std::to_string(shape.alphabet()) + " parts");
  if (content.weight() != shape.cells())
    throw DomainError("content must sum to m + n*b = " + std::to_string(shape.cells()));

  FreeEntryProfile p;
  int forced = 0;
  int missing = 0;
  for (int mu : content.parts()) {
    p.gamma.push_back(std::max(mu - n, 0));
    p.deficit.push_back(std::max(n - mu, 0));
    forced += p.gamma.back();
    missing += p.deficit.back();
  }
  p.beta = shape.m() - n - forced;
  if (p.beta != n - missing) throw InconsistencyError("the two free-entry counts disagree");
  p.free = Multiset(2, shape.b() + 2);
  return p;
}

namespace {

struct HookArmTableau {
  HookArmShape shape;
  Composition mu;
  FreeEntryProfile profile;
};

HookArmTableau inspect(const Tableau& t) {
  require_ssyt(t);
  const auto shape = HookArmShape::from_partition(t.shape());
  if (!shape) throw DomainError("tableau is not of shape (m, n^b)");
  if (t.alphabet() != shape->alphabet()) throw DomainError("tableau alphabet must be b+2");
  Composition mu = content(t);
  FreeEntryProfile profile = beta_profile(*shape, mu);
  return {*shape, std::move(mu), std::move(profile)};
}

// Removes `copies` occurrences of `value`; false if there are not enough.
bool remove_copies(std::vector<int>& bag, int value, int copies) {
  for (int i = 0; i < copies; ++i) {
    auto it = std::find(bag.begin(), bag.end(), value);
    if (it == bag.end()) return false;
    bag.erase(it);
  }
  return true;
}

Multiset missing_letter_map(const Tableau& t, const HookArmTableau& info) {
  const int n = info.shape.n();
  const int k = info.shape.alphabet();
  std::vector<int> missing;
  for (int c = 0; c < n; ++c) {
    std::vector<bool> present(static_cast<std::size_t>(k) + 1, false);
    for (std::size_t r = 0; r < t.row_count(); ++r) present[static_cast<std::size_t>(t.at(r, c))] = true;
    for (int v = 1; v <= k; ++v)
      if (!present[static_cast<std::size_t>(v)]) missing.push_back(v);
  }
  for (int i = 0; i < k; ++i)
    if (!remove_copies(missing, i + 1, info.profile.deficit[static_cast<std::size_t>(i)]))
      throw InconsistencyError("a deficient letter is missing from too few columns");
  return Multiset(2, k, std::move(missing));
}

Multiset arm_map(const Tableau& t, const HookArmTableau& info) {
  const auto& top = t.rows().front();
  std::vector<int> arm(top.begin() + info.shape.n(), top.end());
  for (int i = 0; i < info.shape.alphabet(); ++i)
    if (!remove_copies(arm, i + 1, info.profile.gamma[static_cast<std::size_t>(i)]))
      throw InconsistencyError("the arm holds fewer forced entries than required");
  return Multiset(2, info.shape.alphabet(), std::move(arm));
}

}  // namespace

Multiset phi(const Tableau& t) {
  const HookArmTableau info = inspect(t);
  Multiset from_columns = missing_letter_map(t, info);
  if (!(from_columns == arm_map(t, info)))
    throw InconsistencyError("column and arm characterizations of the free entries disagree");
  return from_columns;
}

Multiset arm_free_entries(const Tableau& t) { return arm_map(t, inspect(t)); }

Tableau phi_inverse(const HookArmShape& shape, const Composition& content, const Multiset& free) {
  const FreeEntryProfile profile = beta_profile(shape, content);
  if (profile.beta < 0) throw InfeasibleFamily("beta(lambda, mu) < 0: the family is empty");
  const int n = shape.n();
  const int k = shape.alphabet();
  if (static_cast<int>(free.size()) != profile.beta)
    throw DomainError("free-entry multiset must have beta = " + std::to_string(profile.beta) + " elements");
  for (int e : free.elements())
    if (e < 2 || e > k) throw DomainError("free entries must lie in [2, b+2]");

  // Pad with the forced omissions and list the letter each body column lacks,
  // largest first.
  std::vector<int> lacks = free.elements();
  for (int i = 0; i < k; ++i) lacks.insert(lacks.end(), profile.deficit[static_cast<std::size_t>(i)], i + 1);
  std::sort(lacks.begin(), lacks.end(), std::greater<>{});

  Tableau::Rows rows(static_cast<std::size_t>(shape.b()) + 1);
  std::vector<int> used(static_cast<std::size_t>(k) + 1, 0);
  for (int c = 0; c < n; ++c) {
    std::size_t r = 0;
    for (int v = 1; v <= k; ++v) {
      if (v == lacks[static_cast<std::size_t>(c)]) continue;
      rows[r++].push_back(v);
      ++used[static_cast<std::size_t>(v)];
    }
  }
  for (int v = 1; v <= k; ++v) {
    const int rest = content[static_cast<std::size_t>(v - 1)] - used[static_cast<std::size_t>(v)];
    if (rest < 0) throw DomainError("free-entry multiset is incompatible with the content");
    rows[0].insert(rows[0].end(), rest, v);
  }
  Tableau t(std::move(rows), k);
  if (!validate_ssyt(t)) throw DomainError("free-entry multiset does not yield a semistandard tableau");
  return t;
}

Multiset psi(const Tableau& t) { return phi(t).shifted(-1); }

}  // namespace hookcsp
