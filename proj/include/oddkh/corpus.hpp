#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oddkh/pd.hpp"

namespace oddkh {

struct CorpusEntry {
  std::string knot;  // isotopy class ("3_1r", "0_1", ...); diagrams sharing it are equivalent
  Diagram diagram;
  std::int64_t determinant = -1;
};

/// Closure of a braid on `strands` strands. Letter +i (-i) is the positive
/// (negative) generator sigma_i, 1-based. Strands no crossing touches become
/// free loops.
Diagram braid_closure(int strands, const std::vector<int>& word, const std::string& name = {});

/// Named knots and links, with several diagrams each of the unknot and the
/// right-handed trefoil.
std::vector<CorpusEntry> standard_corpus();

/// Alternating knots {3_1, 4_1, 5_1, 5_2, 6_1} and the unknot.
std::vector<CorpusEntry> alternating_set();

/// Closures of random braids on 2..4 strands with 1..max_crossings letters.
std::vector<Diagram> random_diagrams(int count, int max_crossings, std::uint64_t seed);

}  // namespace oddkh
