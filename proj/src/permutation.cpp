#include "ewens/permutation.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ewens {

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  return from_images_unchecked(std::move(images));
}

Permutation Permutation::from_images_unchecked(std::vector<int> images) {
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation make_permutation(std::span<const int> one_line) {
  const std::size_t n = one_line.size();
  if (n == 0) throw std::invalid_argument("permutation: empty input");
  std::vector<char> seen(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    const int v = one_line[k];
    if (v < 1 || v > static_cast<int>(n)) {
      throw std::invalid_argument("permutation: value " + std::to_string(v) +
                                  " at position " + std::to_string(k + 1) +
                                  " is outside [1," + std::to_string(n) + "]");
    }
    if (seen[static_cast<std::size_t>(v - 1)]) {
      throw std::invalid_argument("permutation: duplicate value " + std::to_string(v) +
                                  " at position " + std::to_string(k + 1));
    }
    seen[static_cast<std::size_t>(v - 1)] = 1;
  }
  return Permutation::from_images_unchecked(std::vector<int>(one_line.begin(), one_line.end()));
}

Permutation inverse(const Permutation& p) {
  const int n = p.size();
  std::vector<int> inv(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) inv[static_cast<std::size_t>(p(i) - 1)] = i;
  return Permutation::from_images_unchecked(std::move(inv));
}

int cycle_count(const Permutation& p) {
  const int n = p.size();
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  int cycles = 0;
  for (int i = 1; i <= n; ++i) {
    if (visited[static_cast<std::size_t>(i - 1)]) continue;
    ++cycles;
    int j = i;
    while (!visited[static_cast<std::size_t>(j - 1)]) {
      visited[static_cast<std::size_t>(j - 1)] = 1;
      j = p(j);
    }
  }
  return cycles;
}

CycleDecomposition decompose(const Permutation& p) {
  const int n = p.size();
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  CycleDecomposition d;
  // Scanning starts from 1..n, so each cycle begins at its minimum and
  // cycles come out sorted by minimum: canonical by construction.
  for (int i = 1; i <= n; ++i) {
    if (visited[static_cast<std::size_t>(i - 1)]) continue;
    std::vector<int> cycle;
    int j = i;
    while (!visited[static_cast<std::size_t>(j - 1)]) {
      visited[static_cast<std::size_t>(j - 1)] = 1;
      cycle.push_back(j);
      j = p(j);
    }
    d.cycles.push_back(std::move(cycle));
  }
  return d;
}

CycleDecomposition canonicalized(CycleDecomposition d) {
  for (auto& cycle : d.cycles) {
    auto min_it = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), min_it, cycle.end());
  }
  std::sort(d.cycles.begin(), d.cycles.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return d;
}

CycleDecomposition delete_label(const CycleDecomposition& d, int label) {
  CycleDecomposition out;
  for (const auto& cycle : d.cycles) {
    std::vector<int> kept;
    kept.reserve(cycle.size());
    for (int v : cycle) {
      if (v != label) kept.push_back(v);
    }
    if (!kept.empty()) out.cycles.push_back(std::move(kept));
  }
  return canonicalized(std::move(out));
}

int fixed_point_count(const Permutation& p) {
  int count = 0;
  for (int i = 1; i <= p.size(); ++i) {
    if (p(i) == i) ++count;
  }
  return count;
}

bool is_inversion(const Permutation& p, int i, int j) {
  const int n = p.size();
  if (i < 1 || j > n || i >= j) {
    throw std::invalid_argument("is_inversion: need 1 <= i < j <= n, got i=" +
                                std::to_string(i) + " j=" + std::to_string(j));
  }
  int pos_i = 0, pos_j = 0;
  for (int k = 1; k <= n; ++k) {
    if (p(k) == i) pos_i = k;
    if (p(k) == j) pos_j = k;
  }
  return pos_i > pos_j;
}

std::uint64_t word_inversion_count(std::span<const int> word) {
  const int n = static_cast<int>(word.size());
  std::vector<int> fenwick(static_cast<std::size_t>(n) + 1, 0);
  auto add = [&](int idx) {
    for (; idx <= n; idx += idx & -idx) ++fenwick[static_cast<std::size_t>(idx)];
  };
  auto prefix = [&](int idx) {
    std::uint64_t s = 0;
    for (; idx > 0; idx -= idx & -idx) s += static_cast<std::uint64_t>(fenwick[static_cast<std::size_t>(idx)]);
    return s;
  };
  // Right-to-left: count already-seen values smaller than the current one.
  std::uint64_t inversions = 0;
  for (int k = n - 1; k >= 0; --k) {
    const int v = word[static_cast<std::size_t>(k)];
    inversions += prefix(v - 1);
    add(v);
  }
  return inversions;
}

std::uint64_t inversion_count(const Permutation& p) {
  // Preimage inversions of p are the word inversions of p^{-1}.
  return word_inversion_count(inverse(p).one_line());
}

std::uint64_t inversion_count_naive(const Permutation& p) {
  const int n = p.size();
  std::vector<int> pos(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 1; k <= n; ++k) pos[static_cast<std::size_t>(p(k))] = k;
  std::uint64_t count = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (pos[static_cast<std::size_t>(i)] > pos[static_cast<std::size_t>(j)]) ++count;
    }
  }
  return count;
}

std::vector<std::pair<int, int>> inversion_set(const Permutation& p) {
  const int n = p.size();
  std::vector<int> pos(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 1; k <= n; ++k) pos[static_cast<std::size_t>(p(k))] = k;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (pos[static_cast<std::size_t>(i)] > pos[static_cast<std::size_t>(j)]) pairs.emplace_back(i, j);
    }
  }
  return pairs;
}

}  // namespace ewens
