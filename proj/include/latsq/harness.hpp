#pragma once

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "latsq/core.hpp"
#include "latsq/prolong.hpp"

namespace latsq {

inline constexpr int kMaxScanOrder = 6;

// Reduced squares: first row and first column are 1..n in order. Every
// square is isotopic to a reduced one, and the maximum transversal length is
// an isotopy invariant, so scanning reduced squares covers all of them.
// Emission order is lexicographic in the flattened cell array.
void for_each_reduced_square(int n, const std::function<void(const LatinSquare&)>& fn);
std::vector<LatinSquare> enumerate_reduced_squares(int n);

struct ScanReport {
  int order = 0;
  long long squares_scanned = 0;
  int min_max_transversal = 0;
  // Squares whose maximum transversal is shorter than n-1, with the length.
  // A nonempty list would disprove the scanned conjecture.
  std::vector<std::pair<LatinSquare, int>> witnesses;

  friend bool operator==(const ScanReport&, const ScanReport&) = default;
};

// Max-transversal sweep over all reduced squares of the order. threads <= 0
// picks a thread count automatically; the report is identical for every
// thread count (workers own fixed slices of the row-2 prefixes and partial
// reports merge in prefix order).
ScanReport brualdi_scan(int n, int threads = 0);

struct BrualdiCounterexample : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Prolong via a maximum transversal: length n gives the classical
// construction, length n-1 the Deriyenko-Dudek one with the smaller preimage
// as x1. A maximum below n-1 has never been observed; hitting one throws
// BrualdiCounterexample carrying the square.
Prolongation prolong_any(const LatinSquare& square);

}  // namespace latsq
