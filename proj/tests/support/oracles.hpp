#pragma once

// Brute-force reference implementations used to pin down expected values.
// Everything here trades speed for obviousness; keep orders tiny.

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "latsq/core.hpp"
#include "latsq/mappings.hpp"

namespace latsq::testing {

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

struct OracleClassification {
  MappingKind kind = MappingKind::neither;
  std::vector<int> defect;
  int special = 0;
  int x1 = 0;
  int x2 = 0;
};

// Classifies by counting symbol multiplicities in x -> x * sigma(x).
inline OracleClassification oracle_classify(const LatinSquare& square,
                                            const Permutation& sigma) {
  const int n = square.order();
  std::vector<int> count(n + 1, 0);
  std::vector<std::vector<int>> preimages(n + 1);
  for (int x = 1; x <= n; ++x) {
    const int image = square.at(x, sigma.of(x));
    ++count[image];
    preimages[image].push_back(x);
  }
  OracleClassification out;
  for (int s = 1; s <= n; ++s) {
    if (count[s] == 0) out.defect.push_back(s);
  }
  if (out.defect.empty()) {
    out.kind = MappingKind::complete;
  } else if (out.defect.size() == 1) {
    out.kind = MappingKind::quasicomplete;
    for (int s = 1; s <= n; ++s) {
      if (count[s] == 2) {
        out.special = s;
        out.x1 = preimages[s][0];
        out.x2 = preimages[s][1];
      }
    }
  }
  return out;
}

inline std::vector<Permutation> oracle_complete_mappings(
    const LatinSquare& square) {
  std::vector<Permutation> out;
  for (const auto& sigma : all_permutations(square.order())) {
    if (oracle_classify(square, sigma).kind == MappingKind::complete)
      out.push_back(sigma);
  }
  return out;
}

inline std::vector<Permutation> oracle_quasicomplete_mappings(
    const LatinSquare& square) {
  std::vector<Permutation> out;
  for (const auto& sigma : all_permutations(square.order())) {
    if (oracle_classify(square, sigma).kind == MappingKind::quasicomplete)
      out.push_back(sigma);
  }
  return out;
}

// Any partial transversal lies on some generalized diagonal, so the longest
// one has length max over column permutations of the distinct-symbol count.
inline int oracle_max_partial_transversal_length(const LatinSquare& square) {
  const int n = square.order();
  int best = 0;
  for (const auto& pi : all_permutations(n)) {
    std::set<int> symbols;
    for (int r = 1; r <= n; ++r) symbols.insert(square.at(r, pi.of(r)));
    best = std::max(best, static_cast<int>(symbols.size()));
  }
  return best;
}

// Enumerates every partial transversal (rows ascending, any columns) and
// keeps the lexicographically least cell sequence among the longest ones.
inline std::vector<std::pair<int, int>> oracle_lex_least_max_transversal(
    const LatinSquare& square) {
  const int n = square.order();
  std::vector<std::pair<int, int>> best, current;
  std::vector<bool> col_used(n + 1, false), sym_used(n + 1, false);
  auto better = [&]() {
    if (current.size() != best.size()) return current.size() > best.size();
    return current < best;
  };
  auto rec = [&](auto&& self, int row) -> void {
    if (row > n) {
      if (better()) best = current;
      return;
    }
    for (int c = 1; c <= n; ++c) {
      const int s = square.at(row, c);
      if (col_used[c] || sym_used[s]) continue;
      col_used[c] = sym_used[s] = true;
      current.emplace_back(row, c);
      self(self, row + 1);
      current.pop_back();
      col_used[c] = sym_used[s] = false;
    }
    self(self, row + 1);
  };
  rec(rec, 1);
  return best;
}

inline bool oracle_verify_isotopy(const LatinSquare& l, const LatinSquare& m,
                                  const Permutation& alpha,
                                  const Permutation& beta,
                                  const Permutation& gamma) {
  const int n = l.order();
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      if (m.at(alpha.of(x), beta.of(y)) != gamma.of(l.at(x, y))) return false;
  return true;
}

struct OracleWitness {
  Permutation alpha, beta, gamma;
};

// Full (n!)^3 sweep in lexicographic order; first hit is the least witness.
inline std::optional<OracleWitness> oracle_isotopy_witness(
    const LatinSquare& l, const LatinSquare& m) {
  if (l.order() != m.order()) return std::nullopt;
  const auto perms = all_permutations(l.order());
  for (const auto& alpha : perms)
    for (const auto& beta : perms)
      for (const auto& gamma : perms)
        if (oracle_verify_isotopy(l, m, alpha, beta, gamma))
          return OracleWitness{alpha, beta, gamma};
  return std::nullopt;
}

inline bool oracle_are_isotopic(const LatinSquare& l, const LatinSquare& m) {
  return oracle_isotopy_witness(l, m).has_value();
}

// True when the table has a two-sided identity element.
inline bool has_identity(const LatinSquare& square) {
  const int n = square.order();
  for (int e = 1; e <= n; ++e) {
    bool ok = true;
    for (int x = 1; x <= n && ok; ++x)
      ok = square.at(e, x) == x && square.at(x, e) == x;
    if (ok) return true;
  }
  return false;
}

// Enumerates every Latin square of the given order (keep n <= 4; there are
// 576 of order 4) in row-major lexicographic order.
template <typename Fn>
inline void for_each_square(int n, Fn&& fn) {
  std::vector<std::vector<int>> rows(n, std::vector<int>(n, 0));
  std::vector<unsigned> col_mask(n, 0);
  auto rec = [&](auto&& self, int r, int c) -> void {
    if (r == n) {
      fn(LatinSquare::from_rows(rows));
      return;
    }
    const int nr = c + 1 == n ? r + 1 : r;
    const int nc = c + 1 == n ? 0 : c + 1;
    unsigned row_mask = 0;
    for (int j = 0; j < c; ++j) row_mask |= 1u << rows[r][j];
    for (int s = 1; s <= n; ++s) {
      const unsigned bit = 1u << s;
      if ((row_mask & bit) || (col_mask[c] & bit)) continue;
      rows[r][c] = s;
      col_mask[c] |= bit;
      self(self, nr, nc);
      col_mask[c] &= ~bit;
    }
    rows[r][c] = 0;
  };
  rec(rec, 0, 0);
}

inline Permutation random_permutation(int n, std::mt19937& rng) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(images);
}

// Row-by-row randomized fill with restarts; fine for small orders.
inline LatinSquare random_square(int n, std::mt19937& rng) {
  for (;;) {
    std::vector<std::vector<int>> rows;
    std::vector<unsigned> col_mask(n, 0);
    bool stuck = false;
    for (int r = 0; r < n && !stuck; ++r) {
      std::vector<int> row(n, 0);
      unsigned row_mask = 0;
      for (int c = 0; c < n; ++c) {
        std::vector<int> options;
        for (int s = 1; s <= n; ++s) {
          const unsigned bit = 1u << s;
          if (!(row_mask & bit) && !(col_mask[c] & bit)) options.push_back(s);
        }
        if (options.empty()) {
          stuck = true;
          break;
        }
        const int s =
            options[std::uniform_int_distribution<int>(
                0, static_cast<int>(options.size()) - 1)(rng)];
        row[c] = s;
        row_mask |= 1u << s;
        col_mask[c] |= 1u << s;
      }
      if (!stuck) rows.push_back(std::move(row));
    }
    if (!stuck) return LatinSquare::from_rows(rows);
  }
}

}  // namespace latsq::testing
