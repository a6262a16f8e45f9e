#pragma once

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "latsq/core.hpp"

namespace latsq::testing {

#ifndef LATSQ_FIXTURE_DIR
#error "LATSQ_FIXTURE_DIR must point at the fixture directory"
#endif

inline std::ifstream open_fixture(const std::string& name) {
  const std::string path = std::string(LATSQ_FIXTURE_DIR) + "/" + name;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing fixture " + path);
  return in;
}

inline LatinSquare load_square(const std::string& name) {
  auto in = open_fixture(name);
  return parse_square(in);
}

inline Grid load_grid(const std::string& name) {
  auto in = open_fixture(name);
  return parse_grid(in);
}

// The two complete mappings of the q5 square and their conjugates.
inline const std::vector<int> kSigmaImages{4, 2, 1, 5, 3};
inline const std::vector<int> kTauImages{3, 1, 2, 5, 4};
inline const std::vector<int> kSigmaConjugate{4, 3, 2, 1, 5};
inline const std::vector<int> kTauConjugate{3, 4, 5, 1, 2};

// The quasicomplete mapping behind the dd golden tables and its conjugate.
inline const std::vector<int> kRhoImages{4, 5, 2, 3, 1};
inline const std::vector<int> kRhoConjugate{4, 2, 5, 2, 3};

// Witness triple printed alongside the loop forms of the two classical
// prolongations of q5.
inline const std::vector<int> kLoopAlpha{2, 4, 1, 6, 5, 3};
inline const std::vector<int> kLoopBeta{4, 1, 6, 3, 5, 2};
inline const std::vector<int> kLoopGamma{1, 2, 4, 5, 3, 6};

// Witness pair relating the cyclic group of order 4 to the belyavskaya
// prolongation of Z_3 (alpha doubles as beta).
inline const std::vector<int> kZ4Alpha{4, 2, 3, 1};
inline const std::vector<int> kZ4Gamma{2, 3, 4, 1};

// Witness pair relating the Klein group to the two non-identity classical
// prolongations of Z_3: Klein(x, y) = M1(alpha(x), beta(y)) = M2(beta(x),
// alpha(y)), with gamma the identity in both.
inline const std::vector<int> kKleinAlpha{1, 4, 3, 2};
inline const std::vector<int> kKleinBeta{1, 2, 4, 3};

// All golden square fixtures, for sweeps over the corpus.
inline const std::vector<std::string> kSquareFixtures{
    "q5.txt",
    "q5_classical_sigma.txt",
    "q5_classical_tau.txt",
    "q5_bel_a2.txt",
    "q5_bel_a3.txt",
    "q5_dd_x1_2.txt",
    "q5_dd_x1_4.txt",
    "q5_loop2.txt",
    "z3_classical_identity.txt",
    "z3_classical_sigma.txt",
    "z3_classical_tau.txt",
    "z3_bel.txt",
};

}  // namespace latsq::testing
