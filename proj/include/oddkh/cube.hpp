#pragma once

// Cube of resolutions. A vertex is a bitmask: bit i is the smoothing chosen at
// crossing i (0 joins slots (0,1),(2,3); 1 joins (0,3),(1,2)). Edges run
// from m to n = m with one bit cleared.

#include <cstdint>
#include <vector>

#include "oddkh/exterior.hpp"
#include "oddkh/pd.hpp"

namespace oddkh {

using Vertex = std::uint32_t;

/// Passage of a circle through a smoothed crossing.
struct Corner {
  int crossing;
  int s_in;
  int s_out;
};

struct Circle {
  int label;                 // least arc label on the circle
  std::vector<int> arcs;     // in traversal order
  std::vector<Corner> corners;
};

struct Resolution {
  Vertex vertex = 0;
  int n = 0;
  std::vector<Circle> circles;   // sorted by label
  std::vector<int> arc_circle;   // arc label -> circle index
  int pointed_circle = 0;

  int circle_count() const { return static_cast<int>(circles.size()); }
  std::vector<int> labels() const;
};

/// Per-crossing orientation of the decoration arrow.
struct Decoration {
  std::vector<bool> flip;
  bool flipped(int i) const { return i < static_cast<int>(flip.size()) && flip[i]; }
};

Resolution resolve(const Diagram& d, Vertex m);
std::vector<Resolution> resolve_all(const Diagram& d);

Vertex oriented_vertex(const Diagram& d);

/// (-1)^(number of set bits of m below the changed coordinate).
int edge_sign(Vertex m, Vertex n);

enum class EdgeKind { Merge, Split };

struct CubeEdge {
  Vertex from = 0;
  Vertex to = 0;
  int crossing = 0;
  EdgeKind kind = EdgeKind::Merge;
  // circle indices: Merge a,b (in from) -> c (in to); Split c (in from) -> a
  // tail, b head (in to)
  int a = 0;
  int b = 0;
  int c = 0;
  int sgn = 1;
};

CubeEdge cube_edge(const Diagram& d, const Resolution& from, const Resolution& to,
                   const Decoration& deco = {});
CubeEdge cube_edge(const Diagram& d, Vertex m, Vertex n, const Decoration& deco = {});

/// Edge map Lambda(V_from) -> Lambda(V_to) without sign: column per source
/// basis index, entries (target basis index, coefficient).
using SparseColumns = std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>>;
SparseColumns edge_map(const Resolution& from, const Resolution& to, const CubeEdge& e);

enum class FaceClass { Commutative, Anticommutative, TypeX, TypeY };
const char* to_string(FaceClass c);

struct CubeFace {
  Vertex m = 0;  // top corner; bits i and j set
  int i = 0;
  int j = 0;
  FaceClass cls = FaceClass::Commutative;

  Vertex k() const { return m & ~(Vertex{1} << i); }
  Vertex k_prime() const { return m & ~(Vertex{1} << j); }
  Vertex n() const { return m & ~(Vertex{1} << i) & ~(Vertex{1} << j); }
};

/// Faces are given by their corners (m, k, k', n); throws NotAFace.
FaceClass classify_face(const Diagram& d, Vertex m, Vertex k, Vertex k_prime, Vertex n,
                        const Decoration& deco = {});

/// Classification with precomputed resolutions (index = vertex).
FaceClass classify_face(const Diagram& d, const std::vector<Resolution>& res, Vertex m, int i,
                        int j, const Decoration& deco = {});

/// The combinatorial X/Y rule alone (for faces where both routes vanish).
FaceClass arrow_pattern(const Diagram& d, const Resolution& top, int i, int j,
                        const Decoration& deco = {});

std::vector<CubeFace> all_faces(const Diagram& d, const std::vector<Resolution>& res,
                                const Decoration& deco = {});

}  // namespace oddkh
