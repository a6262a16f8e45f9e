#include "latsq/mappings.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace latsq {

namespace {

void require_same_order(const LatinSquare& square, const Permutation& sigma) {
  if (sigma.order() != square.order())
    throw std::invalid_argument("order mismatch: square has order " +
                                std::to_string(square.order()) + ", mapping has order " +
                                std::to_string(sigma.order()));
}

// Shared state for the two mapping searches: rows are assigned a column each,
// in increasing row order with columns tried ascending, so results come out
// in lexicographic image order.
struct MappingSearch {
  const LatinSquare& square;
  int n;
  std::optional<int> limit;
  std::vector<Permutation>& out;
  std::vector<int> image;
  std::uint32_t cols_used = 0;
  std::vector<int> hits;  // per-symbol multiplicity along the track
  int doubled = 0;        // symbols currently hit twice

  MappingSearch(const LatinSquare& sq, std::optional<int> lim, std::vector<Permutation>& o)
      : square(sq), n(sq.order()), limit(lim), out(o), image(sq.order()), hits(sq.order() + 1, 0) {}

  bool full() const { return limit && static_cast<int>(out.size()) >= *limit; }

  // Complete mappings: every track symbol must be fresh.
  void complete(int x) {
    if (full()) return;
    if (x > n) {
      out.push_back(Permutation::from_images(image));
      return;
    }
    for (int c = 1; c <= n; ++c) {
      if (cols_used & (1u << c)) continue;
      const int s = square.at(x, c);
      if (hits[s]) continue;
      cols_used |= 1u << c;
      hits[s] = 1;
      image[x - 1] = c;
      complete(x + 1);
      hits[s] = 0;
      cols_used &= ~(1u << c);
      if (full()) return;
    }
  }

  // Quasicomplete mappings: exactly one symbol hit twice, none three times.
  void quasicomplete(int x) {
    if (full()) return;
    if (x > n) {
      if (doubled == 1) out.push_back(Permutation::from_images(image));
      return;
    }
    for (int c = 1; c <= n; ++c) {
      if (cols_used & (1u << c)) continue;
      const int s = square.at(x, c);
      if (hits[s] == 2 || (hits[s] == 1 && doubled == 1)) continue;
      cols_used |= 1u << c;
      if (++hits[s] == 2) ++doubled;
      image[x - 1] = c;
      quasicomplete(x + 1);
      if (hits[s]-- == 2) --doubled;
      cols_used &= ~(1u << c);
      if (full()) return;
    }
  }
};

// Branch and bound over rows: each row either contributes a cell with a fresh
// column and symbol or is skipped. Pass 1 finds the maximum length, pass 2
// re-runs with columns ascending before the skip branch and stops at the
// first leaf reaching it, which is the lexicographically least one.
struct TransversalSearch {
  const LatinSquare& square;
  int n;
  std::uint32_t cols_used = 0, syms_used = 0;
  int best = 0;
  std::vector<PartialTransversal::Entry> chosen;
  PartialTransversal result;

  explicit TransversalSearch(const LatinSquare& sq) : square(sq), n(sq.order()) {}

  void measure(int row, int count) {
    best = std::max(best, count);
    if (row > n || count + (n - row + 1) <= best) return;
    for (int c = 1; c <= n; ++c) {
      if (cols_used & (1u << c)) continue;
      const int s = square.at(row, c);
      if (syms_used & (1u << s)) continue;
      cols_used |= 1u << c;
      syms_used |= 1u << s;
      measure(row + 1, count + 1);
      cols_used &= ~(1u << c);
      syms_used &= ~(1u << s);
    }
    measure(row + 1, count);
  }

  bool collect(int row, int count) {
    if (count == best) {
      result.cells = chosen;
      return true;
    }
    if (row > n || count + (n - row + 1) < best) return false;
    for (int c = 1; c <= n; ++c) {
      if (cols_used & (1u << c)) continue;
      const int s = square.at(row, c);
      if (syms_used & (1u << s)) continue;
      cols_used |= 1u << c;
      syms_used |= 1u << s;
      chosen.push_back({row, c, s});
      if (collect(row + 1, count + 1)) return true;
      chosen.pop_back();
      cols_used &= ~(1u << c);
      syms_used &= ~(1u << s);
    }
    return collect(row + 1, count);
  }
};

}  // namespace

bool ConjugateMap::is_bijection() const {
  std::vector<char> seen(order + 1, 0);
  for (int v : values) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

ConjugateMap conjugate(const LatinSquare& square, const Permutation& sigma) {
  require_same_order(square, sigma);
  ConjugateMap map{square.order(), {}};
  map.values.reserve(square.order());
  for (int x = 1; x <= square.order(); ++x)
    map.values.push_back(square.at(x, sigma.of(x)));
  return map;
}

MappingClassification classify(const LatinSquare& square, const Permutation& sigma) {
  MappingClassification out;
  out.conjugate = conjugate(square, sigma);
  const int n = square.order();

  std::vector<int> hits(n + 1, 0);
  for (int v : out.conjugate.values) ++hits[v];
  for (int s = 1; s <= n; ++s)
    if (hits[s] == 0) out.defect.push_back(s);

  if (out.defect.empty()) {
    out.kind = MappingKind::complete;
    return out;
  }
  if (out.defect.size() == 1) {
    out.kind = MappingKind::quasicomplete;
    int special = 0, doubled = 0;
    bool deeper = false;
    for (int s = 1; s <= n; ++s) {
      if (hits[s] == 2) {
        special = s;
        ++doubled;
      } else if (hits[s] > 2) {
        deeper = true;
      }
    }
    // One miss forces exactly one doubly hit symbol: n values over n-1 symbols.
    if (doubled != 1 || deeper)
      throw std::logic_error("defect of size one without a unique doubled symbol");
    out.special = special;
    int x1 = 0, x2 = 0;
    for (int x = 1; x <= n; ++x) {
      if (out.conjugate.of(x) != special) continue;
      (x1 ? x2 : x1) = x;
    }
    out.special_preimages = {x1, x2};
    return out;
  }
  out.kind = MappingKind::neither;
  return out;
}

std::vector<Permutation> find_complete_mappings(const LatinSquare& square,
                                                std::optional<int> limit) {
  std::vector<Permutation> out;
  if (limit && *limit <= 0) return out;
  MappingSearch search(square, limit, out);
  search.complete(1);
  return out;
}

std::vector<Permutation> find_quasicomplete_mappings(const LatinSquare& square,
                                                     std::optional<int> limit) {
  std::vector<Permutation> out;
  if (limit && *limit <= 0) return out;
  MappingSearch search(square, limit, out);
  search.quasicomplete(1);
  return out;
}

int max_partial_transversal_length(const LatinSquare& square) {
  TransversalSearch search(square);
  search.measure(1, 0);
  return search.best;
}

PartialTransversal max_partial_transversal(const LatinSquare& square) {
  TransversalSearch search(square);
  search.measure(1, 0);
  search.collect(1, 0);
  return search.result;
}

Permutation transversal_to_mapping(const LatinSquare& square,
                                   const PartialTransversal& transversal) {
  const int n = square.order();
  const int len = transversal.length();
  if (len != n && len != n - 1)
    throw std::invalid_argument("transversal length " + std::to_string(len) +
                                " not extendable for order " + std::to_string(n));

  std::vector<char> row_used(n + 1, 0), col_used(n + 1, 0), sym_used(n + 1, 0);
  std::vector<int> image(n, 0);
  for (const auto& e : transversal.cells) {
    if (e.row < 1 || e.row > n || e.col < 1 || e.col > n)
      throw std::invalid_argument("transversal cell out of bounds");
    if (square.at(e.row, e.col) != e.symbol)
      throw std::invalid_argument("transversal symbol does not match its cell");
    if (row_used[e.row] || col_used[e.col] || sym_used[e.symbol])
      throw std::invalid_argument("transversal repeats a row, column or symbol");
    row_used[e.row] = col_used[e.col] = sym_used[e.symbol] = 1;
    image[e.row - 1] = e.col;
  }
  if (len == n - 1) {
    int missing_row = 0, missing_col = 0;
    for (int i = 1; i <= n; ++i) {
      if (!row_used[i]) missing_row = i;
      if (!col_used[i]) missing_col = i;
    }
    image[missing_row - 1] = missing_col;
  }
  return Permutation::from_images(std::move(image));
}

}  // namespace latsq
