#include "hookcsp/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "hookcsp/error.hpp"

namespace hookcsp {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw DomainError("partition has a negative part");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw DomainError("partition parts must be weakly decreasing: " + to_string(parts_));
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> out(parts_.empty() ? 0 : parts_.front(), 0);
  for (int p : parts_)
    for (int c = 0; c < p; ++c) ++out[c];
  return Partition(std::move(out));
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 0) throw DomainError("composition has a negative part");
}

int Composition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Composition::is_partition() const {
  return std::is_sorted(parts_.begin(), parts_.end(), std::greater<>{});
}

Composition Composition::sorted_descending() const {
  auto p = parts_;
  std::sort(p.begin(), p.end(), std::greater<>{});
  return Composition(std::move(p));
}

Composition Composition::rotated_right() const {
  auto p = parts_;
  std::rotate(p.rbegin(), p.rbegin() + (p.empty() ? 0 : 1), p.rend());
  return Composition(std::move(p));
}

HookArmShape::HookArmShape(int m, int n, int b) : m_(m), n_(n), b_(b) {
  if (n < 1 || b < 1) throw DomainError("hook-arm shape needs n >= 1 and b >= 1");
  if (m < n) throw DomainError("hook-arm shape needs m >= n");
}

std::optional<HookArmShape> HookArmShape::from_partition(const Partition& shape) {
  const auto& p = shape.parts();
  if (p.size() < 2) return std::nullopt;
  for (std::size_t i = 2; i < p.size(); ++i)
    if (p[i] != p[1]) return std::nullopt;
  return HookArmShape(p[0], p[1], static_cast<int>(p.size()) - 1);
}

Partition HookArmShape::partition() const {
  std::vector<int> p(static_cast<std::size_t>(b_) + 1, n_);
  p[0] = m_;
  return Partition(std::move(p));
}

std::string to_string(const std::vector<int>& values, char sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << sep;
    os << values[i];
  }
  return os.str();
}

}  // namespace hookcsp
