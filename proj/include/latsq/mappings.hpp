#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "latsq/core.hpp"

namespace latsq {

// The map x -> x * sigma(x) induced by a permutation sigma of the element
// set. Not a bijection in general; its failure to be one is what the defect
// measures.
struct ConjugateMap {
  int order = 0;
  std::vector<int> values;

  int of(int x) const { return values[x - 1]; }
  bool is_bijection() const;

  friend bool operator==(const ConjugateMap&, const ConjugateMap&) = default;
};

enum class MappingKind {
  complete,       // x -> x * sigma(x) is a bijection
  quasicomplete,  // exactly one element is missed
  neither,
};

struct MappingClassification {
  MappingKind kind = MappingKind::neither;
  ConjugateMap conjugate;
  // Elements missed by the conjugated map, ascending. Empty iff complete.
  std::vector<int> defect;
  // Quasicomplete only: the element hit twice and its two preimages x1 < x2.
  std::optional<int> special;
  std::optional<std::pair<int, int>> special_preimages;
};

// Cells with pairwise distinct rows, columns and symbols.
struct PartialTransversal {
  struct Entry {
    int row = 0;
    int col = 0;
    int symbol = 0;

    friend bool operator==(const Entry&, const Entry&) = default;
  };

  std::vector<Entry> cells;

  int length() const { return static_cast<int>(cells.size()); }

  friend bool operator==(const PartialTransversal&, const PartialTransversal&) = default;
};

ConjugateMap conjugate(const LatinSquare& square, const Permutation& sigma);
MappingClassification classify(const LatinSquare& square, const Permutation& sigma);

// Both searches enumerate in lexicographic order of the image arrays and stop
// after `limit` results when a limit is given.
std::vector<Permutation> find_complete_mappings(const LatinSquare& square,
                                                std::optional<int> limit = {});
std::vector<Permutation> find_quasicomplete_mappings(const LatinSquare& square,
                                                     std::optional<int> limit = {});

// Exact maximum, by branch and bound over rows. Among the maximum-length
// transversals the returned one is least in lexicographic (row, col) order.
PartialTransversal max_partial_transversal(const LatinSquare& square);
// Length of the maximum only; what the order scans iterate.
int max_partial_transversal_length(const LatinSquare& square);

// Length n: the cells read off as sigma(row) = col, a complete mapping.
// Length n-1: the missing row is sent to the missing column. The extension is
// quasicomplete whenever the square has no full transversal (in particular
// for every maximum-length result); if the added cell happens to close a full
// transversal the mapping comes out complete instead.
Permutation transversal_to_mapping(const LatinSquare& square,
                                   const PartialTransversal& transversal);

}  // namespace latsq
