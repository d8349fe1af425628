#include "oddkh/edge_assignment.hpp"

#include <random>
#include <string>

#include "oddkh/error.hpp"

namespace oddkh {

namespace {

int product_equal(const SignAssignment& s, const CubeFace& f) {
  const Vertex bi = Vertex{1} << f.i;
  const Vertex bj = Vertex{1} << f.j;
  const int route1 = s.at(f.m, f.i) * s.at(f.m & ~bi, f.j);
  const int route2 = s.at(f.m, f.j) * s.at(f.m & ~bj, f.i);
  return route1 == route2;
}

}  // namespace

Relation face_constraint(FaceClass cls, Flavor flavor) {
  switch (cls) {
    case FaceClass::Commutative: return Relation::Opposite;
    case FaceClass::Anticommutative: return Relation::Equal;
    case FaceClass::TypeX: return flavor == Flavor::X ? Relation::Equal : Relation::Opposite;
    case FaceClass::TypeY: return flavor == Flavor::X ? Relation::Opposite : Relation::Equal;
  }
  return Relation::Equal;
}

SignAssignment solve(const std::vector<CubeFace>& faces, int n, Flavor flavor,
                     std::optional<std::uint64_t> seed) {
  SignAssignment s;
  s.flavor = flavor;
  s.n = n;
  s.values.assign((std::size_t{1} << n) * static_cast<std::size_t>(n), 0);
  std::vector<std::vector<const CubeFace*>> by_top(std::size_t{1} << n);
  for (const CubeFace& f : faces) by_top[f.m].push_back(&f);

  std::mt19937_64 rng(seed.value_or(0));
  std::bernoulli_distribution coin(0.5);
  for (int i = 0; i < n; ++i) {
    const Vertex bi = Vertex{1} << i;
    for (Vertex m = 0; m < (Vertex{1} << n); ++m) {
      if (!(m & bi)) continue;
      const Vertex below = m & (bi - 1);
      if (below == 0) {
        s.set(m, i, seed && coin(rng) ? -1 : 1);
        continue;
      }
      const int j = __builtin_ctz(below);
      const Vertex bj = Vertex{1} << j;
      const CubeFace* face = nullptr;
      for (const CubeFace* f : by_top[m]) {
        if (f->i == j && f->j == i) face = f;
      }
      if (!face) {
        throw Error(ErrorKind::Unsolvable, "face list is missing a face of the cube");
      }
      // sigma(m,i) sigma(m-i,j) = +- sigma(m,j) sigma(m-j,i)
      const int other = s.at(m, j) * s.at(m & ~bj, i);
      const int want = face_constraint(face->cls, flavor) == Relation::Equal ? other : -other;
      s.set(m, i, want * s.at(m & ~bi, j));
    }
  }
  if (const auto bad = violated_face(s, faces)) {
    throw Error(ErrorKind::Unsolvable,
                "no edge assignment satisfies face at vertex " + std::to_string(bad->m) +
                    " crossings " + std::to_string(bad->i + 1) + "," + std::to_string(bad->j + 1));
  }
  return s;
}

SignAssignment solve(const Diagram& d, Flavor flavor, std::optional<std::uint64_t> seed,
                     const Decoration& deco) {
  const auto res = resolve_all(d);
  return solve(all_faces(d, res, deco), d.crossing_count(), flavor, seed);
}

std::optional<CubeFace> violated_face(const SignAssignment& s,
                                      const std::vector<CubeFace>& faces) {
  for (const CubeFace& f : faces) {
    const bool equal = product_equal(s, f);
    const bool need_equal = face_constraint(f.cls, s.flavor) == Relation::Equal;
    if (equal != need_equal) return f;
  }
  return std::nullopt;
}

}  // namespace oddkh
