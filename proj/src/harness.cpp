#include "latsq/harness.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <stdexcept>
#include <thread>

#include "latsq/mappings.hpp"

namespace latsq {

namespace {

void require_scan_order(int n) {
  if (n < 1 || n > kMaxScanOrder)
    throw std::invalid_argument("order " + std::to_string(n) + " out of range 1.." +
                                std::to_string(kMaxScanOrder));
}

// Backtracking filler for reduced squares: row 1 and column 1 are pinned to
// 1..n, the free cells are visited row-major with symbols tried ascending,
// which makes the emission order lexicographic in the flattened array.
struct ReducedFill {
  int n;
  Grid g;
  std::uint32_t row_mask[kMaxScanOrder + 1] = {};
  std::uint32_t col_mask[kMaxScanOrder + 1] = {};
  int stop_row;  // visit() fires when this row is reached instead of n+1

  explicit ReducedFill(int n_, int stop_row_ = INT_MAX) : n(n_), g(n_), stop_row(stop_row_) {
    for (int c = 1; c <= n; ++c) {
      g.at(1, c) = c;
      row_mask[1] |= 1u << c;
      col_mask[c] |= 1u << c;
    }
    for (int r = 2; r <= n; ++r) {
      g.at(r, 1) = r;
      row_mask[r] |= 1u << r;
      col_mask[1] |= 1u << r;
    }
  }

  // Re-seed from a partially filled grid (rows 1..filled complete).
  void seed(const Grid& prefix, int filled) {
    g = prefix;
    for (int r = 1; r <= filled; ++r)
      for (int c = 1; c <= n; ++c) {
        row_mask[r] |= 1u << g.at(r, c);
        col_mask[c] |= 1u << g.at(r, c);
      }
  }

  template <class Visit>
  void run(int r, int c, Visit&& visit) {
    if (r > n || r >= stop_row) {
      visit(g);
      return;
    }
    const int nr = (c == n) ? r + 1 : r;
    const int nc = (c == n) ? 2 : c + 1;
    const std::uint32_t used = row_mask[r] | col_mask[c];
    for (int s = 1; s <= n; ++s) {
      if (used & (1u << s)) continue;
      g.at(r, c) = s;
      row_mask[r] |= 1u << s;
      col_mask[c] |= 1u << s;
      run(nr, nc, visit);
      row_mask[r] &= ~(1u << s);
      col_mask[c] &= ~(1u << s);
    }
  }
};

struct PartialReport {
  long long scanned = 0;
  int min_len = INT_MAX;
  std::vector<std::pair<LatinSquare, int>> witnesses;

  void take(const LatinSquare& square, int n) {
    const int len = max_partial_transversal_length(square);
    ++scanned;
    min_len = std::min(min_len, len);
    if (len < n - 1) witnesses.emplace_back(square, len);
  }

  void merge(PartialReport&& other) {
    scanned += other.scanned;
    min_len = std::min(min_len, other.min_len);
    for (auto& w : other.witnesses) witnesses.push_back(std::move(w));
  }
};

}  // namespace

void for_each_reduced_square(int n, const std::function<void(const LatinSquare&)>& fn) {
  require_scan_order(n);
  ReducedFill fill(n);
  fill.run(2, 2, [&](const Grid& g) {
    Grid copy = g;
    fn(LatinSquare::from_grid(std::move(copy)));
  });
}

std::vector<LatinSquare> enumerate_reduced_squares(int n) {
  std::vector<LatinSquare> out;
  for_each_reduced_square(n, [&](const LatinSquare& sq) { out.push_back(sq); });
  return out;
}

ScanReport brualdi_scan(int n, int threads) {
  require_scan_order(n);

  // Split points: every completed row 2. Workers own fixed prefix slices and
  // the per-prefix results merge in prefix order, so the report does not
  // depend on the thread count.
  std::vector<Grid> prefixes;
  if (n >= 4) {
    ReducedFill fill(n, 3);
    fill.run(2, 2, [&](const Grid& g) { prefixes.push_back(g); });
  }

  if (threads <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    threads = hw ? static_cast<int>(hw) : 1;
  }
  threads = std::max(1, std::min<int>(threads, static_cast<int>(prefixes.size())));

  PartialReport total;
  if (threads <= 1 || prefixes.size() < 2) {
    for_each_reduced_square(n, [&](const LatinSquare& sq) { total.take(sq, n); });
  } else {
    std::vector<PartialReport> per_prefix(prefixes.size());
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&, w]() {
        for (std::size_t k = w; k < prefixes.size(); k += threads) {
          ReducedFill fill(n);
          fill.seed(prefixes[k], 2);
          fill.run(3, 2, [&](const Grid& g) {
            Grid copy = g;
            per_prefix[k].take(LatinSquare::from_grid(std::move(copy)), n);
          });
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& part : per_prefix) total.merge(std::move(part));
  }

  ScanReport report;
  report.order = n;
  report.squares_scanned = total.scanned;
  report.min_max_transversal = (total.min_len == INT_MAX) ? 0 : total.min_len;
  report.witnesses = std::move(total.witnesses);
  return report;
}

Prolongation prolong_any(const LatinSquare& square) {
  const int n = square.order();
  const PartialTransversal t = max_partial_transversal(square);

  if (t.length() == n) return prolong_classical(square, transversal_to_mapping(square, t));
  if (t.length() == n - 1) {
    const Permutation sigma = transversal_to_mapping(square, t);
    // A complete extension would close a full transversal, which the maximum
    // length just ruled out.
    const auto cls = classify(square, sigma);
    if (cls.kind != MappingKind::quasicomplete)
      throw std::logic_error("length n-1 extension failed to be quasicomplete");
    return prolong_deriyenko_dudek(square, sigma, cls.special_preimages->first);
  }
  throw BrualdiCounterexample(
      "maximum partial transversal has length " + std::to_string(t.length()) +
      " < " + std::to_string(n - 1) + " on an order-" + std::to_string(n) +
      " square; this disproves the scanned conjecture. Square:\n" + to_text(square));
}

}  // namespace latsq
