#pragma once

// Mapping cones and the exact-triangle algebra.
//
// Complexes are plain square matrices d with d^2 = 0; maps go between them as
// rectangular matrices (rows = target). Over F2 every identity is read mod 2.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "oddkh/complex.hpp"
#include "oddkh/linalg.hpp"

namespace oddkh {

enum class Ring { Z, F2 };
const char* to_string(Ring r);

/// Differential of Cone(g) on C (+) C': [[d, 0], [g, d']]. g must satisfy
/// g d + d' g = 0; throws NotAntiChain otherwise.
SparseMatrix cone(const SparseMatrix& d, const SparseMatrix& d_prime, const SparseMatrix& g,
                  Ring ring);

/// Stacks blocks[r][c] into one matrix; row heights and column widths are given.
SparseMatrix block(const std::vector<std::vector<SparseMatrix>>& blocks,
                   const std::vector<int>& heights, const std::vector<int>& widths);

/// Rank of the map on homology induced by an (anti-)chain map f: A -> B, over
/// Q (ring Z) or F2.
int induced_rank(const SparseMatrix& f, const SparseMatrix& d_a, const SparseMatrix& d_b,
                 Ring ring);

/// Total homology dimension dim - 2 rank(d), over Q (ring Z) or F2.
int homology_dimension(const SparseMatrix& d, Ring ring);

// Maps are indexed by their source: g_i : C_i -> C_{i-1}, n_i : C_i -> C_{i-2},
// k_i, q_i : C_i -> C_{i-3}. Missing maps are zero. Identities are checked for
// every i whose indices all lie in [lo, hi].
struct TriangleData {
  Ring ring = Ring::Z;
  int lo = 0;
  int hi = -1;
  std::map<int, int> dim;
  std::map<int, SparseMatrix> d, g, n, k, q;

  int dimension(int i) const;
  SparseMatrix get_d(int i) const;
  SparseMatrix get_g(int i) const;
  SparseMatrix get_n(int i) const;
  SparseMatrix get_k(int i) const;
  SparseMatrix get_q(int i) const;
};

/// Interior block signs found for phi_i psi_{i+3} - M = s (D H + H D).
struct BlockSigns {
  int i = 0;
  // per block (top-left, top-right, bottom-left, bottom-right): +1, -1,
  // 0 when both signs work (zero block), 2 when neither does
  int sign[4] = {0, 0, 0, 0};
};

struct TriangleReport {
  bool holds = false;
  std::string failure;  // first failing identity, e.g. "null-htpy at i=2"
  std::map<int, SparseMatrix> phi;  // phi_i : C_i -> Cone(g_{i-1}) = C_{i-1} (+) C_{i-2}
  std::map<int, SparseMatrix> psi;  // psi_i : Cone(g_{i-1}) -> C_{i-3}
  std::map<int, SparseMatrix> homotopy;  // H_i : Cone(g_{i+2}) -> Cone(g_{i-1})
  std::vector<BlockSigns> signs;
};

/// Throws ShapeMismatch when a matrix does not fit its dimensions.
TriangleReport verify_triangle(const TriangleData& t);

/// 3-periodic data C_{i+3} = C_i on the window [0, 3 * periods - 1]; q is
/// filled in from the q-iso combination.
TriangleData periodic_triangle(Ring ring, const std::vector<int>& dims,
                               const std::vector<SparseMatrix>& d,
                               const std::vector<SparseMatrix>& g,
                               const std::vector<SparseMatrix>& n,
                               const std::vector<SparseMatrix>& k, int periods = 3);

/// C_{3j} = C_{3j+1} = Z, C_{3j+2} = 0, g_{3j+1} = 1, n_{3j} = 1.
TriangleData integral_triangle_example();

/// Random search over F2 matrices of size <= 3 for 3-periodic data satisfying
/// the anti-chain and null-htpy relations with invertible q.
TriangleData random_f2_triangle(std::uint64_t seed, int max_tries = 200000);

struct SkeinRanks {
  Coefficients field = Coefficients::Q;
  int total = 0;     // rank H(D)
  int part0 = 0;     // rank H of the sub-cube with the crossing 0-smoothed
  int part1 = 0;
  int resolved0 = 0;  // rank H(resolve_crossing(D, i, 0))
  int resolved1 = 0;
  bool les_exact = false;  // every (h, q) obeys the long exact sequence count
  bool inequality = false;  // total <= resolved0 + resolved1
};

struct SkeinReport {
  int crossing = 0;
  bool block_structure = false;  // no entries from the 0-part into the 1-part
  bool anti_chain = false;
  bool cone_equal = false;  // assembled d equals cone(g) after reordering
  std::vector<SkeinRanks> ranks;  // Q and F2
  bool ok() const;
};

SkeinReport skein_check(const Diagram& d, int crossing, Flavor flavor = Flavor::X);

}  // namespace oddkh
