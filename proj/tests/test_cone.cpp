#include <doctest.h>

#include "oddkh/complex.hpp"
#include "oddkh/cone.hpp"
#include "oddkh/corpus.hpp"
#include "oddkh/error.hpp"

using namespace oddkh;

namespace {

// Z -> Z in degrees 0 -> 1 as a 2x2 complex.
SparseMatrix two_term() {
  SparseMatrix d(2, 2);
  d.add(1, 0, 1);
  return d;
}

SparseMatrix one_dim_zero() { return SparseMatrix(1, 1); }

}  // namespace

TEST_CASE("cone of the zero map is the direct sum") {
  const SparseMatrix d = two_term();
  const SparseMatrix z = one_dim_zero();
  const SparseMatrix c = cone(z, z, SparseMatrix(1, 1), Ring::Z);
  CHECK(homology_dimension(c, Ring::Z) == 2);
  const SparseMatrix c2 = cone(d, z, SparseMatrix(1, 2), Ring::Z);
  CHECK(homology_dimension(c2, Ring::Z) == 1);
}

TEST_CASE("cone of an isomorphism is acyclic") {
  for (Ring ring : {Ring::Z, Ring::F2}) {
    const SparseMatrix z = one_dim_zero();
    const SparseMatrix c = cone(z, z, SparseMatrix::identity(1), ring);
    CHECK(homology_dimension(c, ring) == 0);
    CHECK(induced_rank(SparseMatrix::identity(1), z, z, ring) == 1);
  }
}

TEST_CASE("non anti-chain maps are rejected") {
  bool thrown = false;
  try {
    const SparseMatrix d = two_term();
    SparseMatrix g(2, 2);
    g.add(0, 0, 1);
    cone(d, d, g, Ring::Z);
  } catch (const Error& e) {
    thrown = e.kind() == ErrorKind::NotAntiChain;
  }
  CHECK(thrown);
}

TEST_CASE("block assembly") {
  const SparseMatrix m = block({{SparseMatrix::identity(1), SparseMatrix(1, 2)},
                                {SparseMatrix(2, 1), SparseMatrix::identity(2)}},
                               {1, 2}, {1, 2});
  CHECK(m == SparseMatrix::identity(3));
  bool thrown = false;
  try {
    block({{SparseMatrix::identity(2)}}, {1}, {1});
  } catch (const Error& e) {
    thrown = e.kind() == ErrorKind::ShapeMismatch;
  }
  CHECK(thrown);
}

TEST_CASE("integral triangle example") {
  const TriangleReport r = verify_triangle(integral_triangle_example());
  CHECK_MESSAGE(r.holds, r.failure);
  CHECK_FALSE(r.phi.empty());
  for (const BlockSigns& s : r.signs) {
    for (int b : s.sign) CHECK(b != 2);
  }
}

TEST_CASE("zero data holds vacuously") {
  TriangleData t;
  t.ring = Ring::F2;
  t.lo = 0;
  t.hi = 5;
  for (int i = -6; i <= 5; ++i) t.dim[i] = 0;
  const TriangleReport r = verify_triangle(t);
  CHECK(r.holds);
}

TEST_CASE("broken data is reported") {
  TriangleData t = integral_triangle_example();
  for (auto& [i, m] : t.n) m = m.scaled(2);
  TriangleReport r = verify_triangle(t);
  CHECK_FALSE(r.holds);
  MESSAGE(r.failure);
  CHECK(r.failure.rfind("q-", 0) == 0);

  // g o g != 0 with d = 0 breaks the null homotopy
  TriangleData u;
  u.ring = Ring::Z;
  u.lo = 0;
  u.hi = 3;
  for (int i = -6; i <= 3; ++i) u.dim[i] = 1;
  for (int i = -3; i <= 3; ++i) u.g[i] = SparseMatrix::identity(1);
  r = verify_triangle(u);
  CHECK_FALSE(r.holds);
  CHECK(r.failure.rfind("null-htpy at i=", 0) == 0);
}

TEST_CASE("shape mismatch") {
  TriangleData t = integral_triangle_example();
  t.g.begin()->second = SparseMatrix(5, 5);
  bool thrown = false;
  try {
    verify_triangle(t);
  } catch (const Error& e) {
    thrown = e.kind() == ErrorKind::ShapeMismatch;
  }
  CHECK(thrown);
}

TEST_CASE("random F2 triangles and the quasi-isomorphism") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const TriangleData t = random_f2_triangle(seed);
    const TriangleReport r = verify_triangle(t);
    CHECK_MESSAGE(r.holds, "seed ", seed, ": ", r.failure);
  }
}

TEST_CASE("skein decomposition at every crossing") {
  for (const auto& e : standard_corpus()) {
    for (int i = 0; i < e.diagram.crossing_count(); ++i) {
      for (Flavor f : {Flavor::X, Flavor::Y}) {
        const SkeinReport r = skein_check(e.diagram, i, f);
        CHECK_MESSAGE(r.ok(), e.diagram.name, " crossing ", i);
        for (const SkeinRanks& s : r.ranks) CHECK(s.total <= s.resolved0 + s.resolved1);
      }
    }
  }
  const Diagram trefoil = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
  const SkeinReport r = skein_check(trefoil, 0);
  REQUIRE_FALSE(r.ranks.empty());
  CHECK(r.ranks[0].total == 3);
  CHECK(r.ranks[0].part0 == r.ranks[0].resolved0);
  CHECK(r.ranks[0].part1 == r.ranks[0].resolved1);
}
