#pragma once

// Spectral sequence of a finite filtered complex over a field.
//
// F^p is spanned by generators of level >= p; d never lowers the level and
// raises the degree by one (and keeps the weight). Pages are indexed with
// E_0 = associated graded and E_1 = H(E_0, d_0); d_r moves the level by r.
// For cube complexes d_0 = 0, so E_1 is the chain groups and E_2 homology.

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "oddkh/complex.hpp"
#include "oddkh/linalg.hpp"

namespace oddkh {

enum class Field { F2, Q };
const char* to_string(Field f);

struct FilteredGenerator {
  int p = 0;
  int degree = 0;
  int weight = 0;
};

struct PageKey {
  int p = 0;
  int degree = 0;
  int weight = 0;
  auto operator<=>(const PageKey&) const = default;
};

using RankMap = std::map<PageKey, int>;

struct FilteredComplex {
  Field field = Field::F2;
  std::vector<FilteredGenerator> gens;
  SparseMatrix d;  // integer entries, read in the field

  PageKey key(int g) const { return {gens[g].p, gens[g].degree, gens[g].weight}; }
};

/// Checks d^2 = 0 and the filtration/degree rules; throws on failure.
void validate(const FilteredComplex& c);

/// Homological filtration of a diagram complex: level = degree = h, weight = q.
FilteredComplex filtered_from(const BigradedComplex& c, Field field);

struct DrEntry {
  int source = 0;  // generator representing the class
  int target = 0;
  PageKey from;
  PageKey to;
};

struct SSPage {
  int r = 1;
  RankMap ranks;  // nonzero only
  std::vector<DrEntry> dr;
  bool dr_nonzero() const { return !dr.empty(); }
};

struct SpectralResult {
  std::vector<SSPage> pages;  // r = 1, 2, ...
  int degeneration_page = 1;
  RankMap einfinity;
};

/// Pages 1..r_max; with r_max <= 0 runs to the degeneration page.
SpectralResult pages(const FilteredComplex& c, int r_max = 0);

/// Associated graded of H(C) under the induced filtration, by dense linear algebra.
RankMap einfinity_oracle(const FilteredComplex& c);

/// E_r from the subquotients Z_r^p / (Z_{r-1}^{p+1} + B_{r-1}^p), r >= 1.
RankMap page_by_subquotients(const FilteredComplex& c, int r);

/// Random filtered complex: a matching conjugated by a random filtered
/// unitriangular basis change.
FilteredComplex random_filtered_complex(std::uint64_t seed, Field field, int max_gens = 20,
                                        int levels = 5);

}  // namespace oddkh
