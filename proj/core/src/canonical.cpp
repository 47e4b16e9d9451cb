#include "scminor/canonical.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>

#include "scminor/errors.hpp"
#include "scminor/graph6.hpp"

namespace scminor {
namespace {

using Coloring = std::array<int, kCanonicalMaxOrder>;
using Code = std::pair<std::uint64_t, std::uint64_t>;

// Individualize-and-refine search. Refinement is 1-dimensional colour
// refinement keyed on (colour, neighbour counts per colour), which keeps cell
// order independent of vertex labels. Twins inside a target cell are
// interchangeable, so only one of them is individualized.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

  std::vector<int> run() {
    Coloring colors{};
    search(colors);
    return {best_labels_.begin(), best_labels_.begin() + n_};
  }

 private:
  int refine(Coloring& colors) const {
    int cells = 1 + *std::max_element(colors.begin(), colors.begin() + n_);
    while (true) {
      std::array<Bits, kCanonicalMaxOrder> members{};
      for (int v = 0; v < n_; ++v) members[colors[v]] |= bit(v);

      std::array<std::pair<int, std::uint64_t>, kCanonicalMaxOrder> keys{};
      for (int v = 0; v < n_; ++v) {
        std::uint64_t packed = 0;
        for (int c = 0; c < cells; ++c) {
          const auto count = static_cast<std::uint64_t>(popcount(g_.neighbors(v) & members[c]));
          packed |= count << (4 * (15 - c));
        }
        keys[v] = {colors[v], packed};
      }
      std::array<std::pair<int, std::uint64_t>, kCanonicalMaxOrder> sorted = keys;
      std::sort(sorted.begin(), sorted.begin() + n_);
      const auto last = std::unique(sorted.begin(), sorted.begin() + n_);
      const int next_cells = static_cast<int>(last - sorted.begin());
      for (int v = 0; v < n_; ++v) {
        colors[v] = static_cast<int>(std::lower_bound(sorted.begin(), last, keys[v]) - sorted.begin());
      }
      if (next_cells == cells) return cells;
      cells = next_cells;
    }
  }

  void search(Coloring colors) {
    if (n_ == 0) {
      have_best_ = true;
      return;
    }
    const int cells = refine(colors);
    if (cells == n_) {
      consider_leaf(colors);
      return;
    }
    // First non-singleton cell.
    std::array<int, kCanonicalMaxOrder> sizes{};
    for (int v = 0; v < n_; ++v) ++sizes[colors[v]];
    int target = 0;
    while (sizes[target] < 2) ++target;

    Bits tried = 0;
    for (int v = 0; v < n_; ++v) {
      if (colors[v] != target) continue;
      bool twin_of_tried = false;
      for_each_bit(tried, [&](int u) {
        if ((g_.neighbors(u) & ~bit(v)) == (g_.neighbors(v) & ~bit(u))) twin_of_tried = true;
      });
      if (twin_of_tried) continue;
      tried |= bit(v);

      Coloring child = colors;
      for (int w = 0; w < n_; ++w) {
        auto& c = child[w];
        if (c > target || (c == target && w != v)) ++c;
      }
      search(child);
    }
  }

  void consider_leaf(const Coloring& labels) {
    Code code{0, 0};
    int k = 0;
    std::array<int, kCanonicalMaxOrder> inverse{};
    for (int v = 0; v < n_; ++v) inverse[labels[v]] = v;
    for (int j = 1; j < n_; ++j) {
      for (int i = 0; i < j; ++i, ++k) {
        if (!g_.has_edge(inverse[i], inverse[j])) continue;
        if (k < 64) {
          code.first |= std::uint64_t{1} << (63 - k);
        } else {
          code.second |= std::uint64_t{1} << (127 - k);
        }
      }
    }
    if (!have_best_ || code > best_code_) {
      have_best_ = true;
      best_code_ = code;
      best_labels_ = labels;
    }
  }

  const Graph& g_;
  int n_;
  bool have_best_ = false;
  Code best_code_{};
  Coloring best_labels_{};
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
  if (g.order() > kCanonicalMaxOrder) {
    throw CapacityError("canonical form supports n <= " + std::to_string(kCanonicalMaxOrder) +
                        ", got " + std::to_string(g.order()));
  }
  return CanonicalSearch(g).run();
}

std::string canonical_form(const Graph& g) {
  const std::vector<int> labels = canonical_labeling(g);
  return write_graph6(relabel(g, labels));
}

}  // namespace scminor
