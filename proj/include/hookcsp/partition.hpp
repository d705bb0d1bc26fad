#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace hookcsp {

/// Weakly decreasing tuple of nonnegative integers. Trailing zeros are
/// dropped on construction, so equality compares the nonzero parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  int weight() const;

  Partition conjugate() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Tableau content: entry i counts letter i+1. Zero parts are kept, the
/// length is the alphabet size.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  int weight() const;

  bool is_partition() const;
  Composition sorted_descending() const;
  /// (mu_k, mu_1, ..., mu_{k-1}): the content of a promoted tableau.
  Composition rotated_right() const;

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

/// The shape (m, n^b): one row of length m above b rows of length n.
class HookArmShape {
 public:
  HookArmShape(int m, int n, int b);

  /// Recognizes (m, n^b) with b >= 1; returns nullopt for any other shape.
  static std::optional<HookArmShape> from_partition(const Partition& shape);

  int m() const { return m_; }
  int n() const { return n_; }
  int b() const { return b_; }
  int cells() const { return m_ + n_ * b_; }
  int alphabet() const { return b_ + 2; }
  Partition partition() const;

  friend bool operator==(const HookArmShape&, const HookArmShape&) = default;

 private:
  int m_;
  int n_;
  int b_;
};

std::string to_string(const std::vector<int>& values, char sep = ',');

}  // namespace hookcsp
