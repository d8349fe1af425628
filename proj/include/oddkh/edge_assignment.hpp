#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "oddkh/cube.hpp"

namespace oddkh {

enum class Flavor { X, Y };

enum class Relation { Equal, Opposite };

/// Edge values indexed by (vertex, crossing); only meaningful where the vertex
/// has the crossing bit set.
struct SignAssignment {
  Flavor flavor = Flavor::X;
  int n = 0;
  std::vector<std::int8_t> values;

  static std::size_t index(Vertex m, int i, int n) { return static_cast<std::size_t>(m) * n + i; }
  int at(Vertex m, int i) const { return values[index(m, i, n)]; }
  void set(Vertex m, int i, int v) { values[index(m, i, n)] = static_cast<std::int8_t>(v); }
};

/// Required relation between sigma(m,k)sigma(k,n) and sigma(m,k')sigma(k',n).
Relation face_constraint(FaceClass cls, Flavor flavor);

/// Propagating solver. Edges with no lower set bit are free: +1, or random
/// signs when `seed` is given. Throws Unsolvable when some face fails.
SignAssignment solve(const std::vector<CubeFace>& faces, int n, Flavor flavor,
                     std::optional<std::uint64_t> seed = std::nullopt);
SignAssignment solve(const Diagram& d, Flavor flavor,
                     std::optional<std::uint64_t> seed = std::nullopt,
                     const Decoration& deco = {});

/// First face the assignment violates, if any.
std::optional<CubeFace> violated_face(const SignAssignment& s,
                                      const std::vector<CubeFace>& faces);

}  // namespace oddkh
