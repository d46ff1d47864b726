#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace ewens {

// A permutation of [n] = {1,...,n} in one-line form. All public indices and
// values are 1-based. Immutable after construction.
class Permutation {
 public:
  Permutation() = default;  // size 0; not valid for the operations below

  static Permutation identity(int n);

  // Takes ownership without validating; caller guarantees a bijection of [n].
  static Permutation from_images_unchecked(std::vector<int> images);

  int size() const { return static_cast<int>(images_.size()); }

  // pi(i)
  int operator()(int i) const { return images_[static_cast<std::size_t>(i) - 1]; }

  std::span<const int> one_line() const { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// Cycles of a permutation in canonical form: each cycle starts at its
// minimum element and cycles are sorted by that minimum. A cycle lists
// (a, pi(a), pi(pi(a)), ...).
struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;

  friend bool operator==(const CycleDecomposition&, const CycleDecomposition&) = default;
};

// Validates and builds a permutation from a 1-based one-line word.
// Throws std::invalid_argument naming the offending position for empty
// input, out-of-range values and duplicates.
Permutation make_permutation(std::span<const int> one_line);

Permutation inverse(const Permutation& p);

// Number of cycles, in [1, n].
int cycle_count(const Permutation& p);

CycleDecomposition decompose(const Permutation& p);

// Rotates each cycle to its minimum and sorts cycles by minimum.
CycleDecomposition canonicalized(CycleDecomposition d);

// Removes one label from a decomposition (splicing it out of its cycle,
// dropping the cycle if it was a singleton) and recanonicalizes.
CycleDecomposition delete_label(const CycleDecomposition& d, int label);

int fixed_point_count(const Permutation& p);

// (i,j) with i < j is an inversion iff pi^{-1}(i) > pi^{-1}(j), i.e. i
// appears to the right of j in one-line notation. Preimage convention
// throughout; the image-based variant is only a test identity.
bool is_inversion(const Permutation& p, int i, int j);

// |Inv(p)| in O(n log n) via an order-statistics accumulator over the
// one-line word of pi^{-1}.
std::uint64_t inversion_count(const Permutation& p);

// Quadratic reference counter; contract: equals inversion_count.
std::uint64_t inversion_count_naive(const Permutation& p);

// All inverted pairs, lexicographically sorted.
std::vector<std::pair<int, int>> inversion_set(const Permutation& p);

// #{a < b : word[a] > word[b]} for a word over 1..n with distinct entries.
// Fenwick-tree accumulation, shared by inversion_count and the oracle.
std::uint64_t word_inversion_count(std::span<const int> word);

}  // namespace ewens
