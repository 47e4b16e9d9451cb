#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace scminor {

/// A bijection on 0..n-1, stored as its image array.
class Permutation {
 public:
  Permutation() = default;
  /// Throws DomainError unless `image` is a bijection on 0..size-1.
  explicit Permutation(std::vector<int> image);
  static Permutation identity(int n);
  /// Builds from cycles; vertices not mentioned are fixed.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int v) const { return image_[v]; }
  std::span<const int> image() const { return image_; }

  Permutation inverse() const;
  /// v -> this(v) applied k times; k may be negative.
  int power_apply(int v, int k) const;
  /// (this * other)(v) = this(other(v)).
  Permutation compose(const Permutation& other) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

struct CycleDecomposition {
  /// Nontrivial cycles, each starting at its least vertex, ordered by
  /// decreasing length then least vertex.
  std::vector<std::vector<int>> cycles;
  std::vector<int> fixed_points;
};

CycleDecomposition cycle_decomposition(const Permutation& p);

/// One-line cycle notation with explicit fixed points, cycles ordered by
/// their least vertex: "(0)(1 2 4 3)".
std::string to_cycle_notation(const Permutation& p);

/// Inverse of to_cycle_notation; throws ParseError on malformed input.
Permutation parse_cycle_notation(std::string_view text, int n);

}  // namespace scminor
