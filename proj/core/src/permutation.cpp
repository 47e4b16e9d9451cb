#include "scminor/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "scminor/errors.hpp"

namespace scminor {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (int v : image_) {
    if (v < 0 || v >= size() || seen[v]) throw DomainError("image array is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  return Permutation(std::move(image));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  std::vector<bool> used(n, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int v = cycle[i];
      if (v < 0 || v >= n || used[v]) throw DomainError("cycles are not disjoint vertices in range");
      used[v] = true;
      image[v] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int v = 0; v < size(); ++v) inv[image_[v]] = v;
  return Permutation(std::move(inv));
}

int Permutation::power_apply(int v, int k) const {
  if (k >= 0) {
    for (int i = 0; i < k; ++i) v = image_[v];
    return v;
  }
  const Permutation inv = inverse();
  for (int i = 0; i < -k; ++i) v = inv(v);
  return v;
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) throw DomainError("composing permutations of different sizes");
  std::vector<int> out(image_.size());
  for (int v = 0; v < size(); ++v) out[v] = image_[other(v)];
  return Permutation(std::move(out));
}

namespace {

std::vector<std::vector<int>> raw_cycles(const Permutation& p) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(p.size(), false);
  for (int start = 0; start < p.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (int v = start; !seen[v]; v = p(v)) {
      seen[v] = true;
      cycle.push_back(v);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

}  // namespace

CycleDecomposition cycle_decomposition(const Permutation& p) {
  CycleDecomposition d;
  // raw_cycles starts every cycle at its least vertex and emits cycles by least vertex.
  for (auto& cycle : raw_cycles(p)) {
    if (cycle.size() == 1) {
      d.fixed_points.push_back(cycle.front());
    } else {
      d.cycles.push_back(std::move(cycle));
    }
  }
  std::stable_sort(d.cycles.begin(), d.cycles.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return d;
}

std::string to_cycle_notation(const Permutation& p) {
  std::string out;
  for (const auto& cycle : raw_cycles(p)) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out;
}

Permutation parse_cycle_notation(std::string_view text, int n) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '('", i);
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip_space();
      if (i >= text.size()) throw ParseError("unterminated cycle", i);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError("expected vertex label", i);
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v >= n) throw ParseError("vertex label out of range", i);
        ++i;
      }
      cycle.push_back(v);
    }
    if (cycle.empty()) throw ParseError("empty cycle", i - 1);
    cycles.push_back(std::move(cycle));
    skip_space();
  }
  try {
    return Permutation::from_cycles(n, cycles);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), 0);
  }
}

}  // namespace scminor
