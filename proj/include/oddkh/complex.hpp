#pragma once

// Bigraded reduced complex of a diagram. Generators are (vertex, monomial);
// the differential follows cube edges m -> n (one bit cleared) and raises h by
// one while preserving q.
//
//   h      = -|m| + n_-
//   deg_p  = (k - 1) - 2|J|
//   2delta = -deg_p - |m| + n_+
//   q      = 2h - 2delta      (reduced unknot at (0,0); the odd q-grading
//                              q_o = 2(h - delta) + 1 is q + q_offset)

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "oddkh/cube.hpp"
#include "oddkh/edge_assignment.hpp"
#include "oddkh/laurent.hpp"
#include "oddkh/linalg.hpp"

namespace oddkh {

struct GradedGenerator {
  Vertex vertex = 0;
  Mask monomial = 0;
  int h = 0;
  int delta2 = 0;  // twice the delta grading
  int q = 0;

  int q_odd(int offset) const { return q + offset; }
};

struct Bidegree {
  int h = 0;
  int q = 0;
  auto operator<=>(const Bidegree&) const = default;
};

enum class Coefficients { Z, Q, F2 };
const char* to_string(Coefficients c);
Coefficients parse_coefficients(const std::string& s);

struct BigradedComplex {
  std::string name;
  int crossings = 0;
  int n_plus = 0;
  int n_minus = 0;
  int q_offset = 1;
  int shift_h = 0;
  int shift_delta2 = 0;
  std::vector<GradedGenerator> gens;
  std::vector<std::size_t> vertex_offset;  // cube complexes: first generator per vertex
  SparseMatrix d;                          // gens x gens; column j is d(gen j)

  std::size_t size() const { return gens.size(); }
  std::map<Bidegree, std::vector<int>> blocks() const;
};

BigradedComplex assemble(const Diagram& d, const SignAssignment& sigma,
                         const Decoration& deco = {});
BigradedComplex assemble(const Diagram& d, Flavor flavor = Flavor::X);

bool square_zero(const BigradedComplex& c);

/// Submatrix of d from block `from` to block `to` (indices into gens).
SparseMatrix block_matrix(const BigradedComplex& c, const std::vector<int>& from,
                          const std::vector<int>& to);

struct HomologyEntry {
  int rank = 0;
  std::vector<BigInt> torsion;
  bool operator==(const HomologyEntry&) const = default;
};

struct HomologySummary {
  Coefficients coefficients = Coefficients::Z;
  std::map<Bidegree, HomologyEntry> table;  // only nonzero entries
  int total_rank() const;
  /// (h, q) -> rank, dropping torsion
  std::map<Bidegree, int> ranks() const;
};

/// Throws DifferentialNotSquareZero when d^2 != 0.
HomologySummary homology(const BigradedComplex& c, Coefficients coefficients);

/// F2 dimensions from integral homology by universal coefficients.
std::map<Bidegree, int> f2_dimensions_from_integral(const HomologySummary& z);

LaurentPoly euler_characteristic(const BigradedComplex& c);

/// Shifts h down by a and delta down by b; q moves by 2(b - a).
BigradedComplex shift(const BigradedComplex& c, int a, int b);

}  // namespace oddkh
