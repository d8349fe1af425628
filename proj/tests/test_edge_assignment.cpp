#include <doctest.h>


#include "oddkh/complex.hpp"
#include "oddkh/corpus.hpp"
#include "oddkh/edge_assignment.hpp"
#include "oddkh/error.hpp"

using namespace oddkh;

namespace {

// GF(2) system: bit 1 means sign -1. One row per face, one column per edge.
struct System {
  std::vector<std::size_t> var_of;  // SignAssignment index -> column
  std::vector<std::vector<std::uint8_t>> rows;  // last entry is the right side
  int vars = 0;
};

System build_system(const std::vector<CubeFace>& faces, int n, Flavor fl) {
  System s;
  s.var_of.assign((std::size_t{1} << n) * n, SIZE_MAX);
  for (Vertex m = 0; m < (Vertex{1} << n); ++m) {
    for (int i = 0; i < n; ++i) {
      if (m >> i & 1) s.var_of[SignAssignment::index(m, i, n)] = s.vars++;
    }
  }
  for (const CubeFace& f : faces) {
    std::vector<std::uint8_t> row(s.vars + 1, 0);
    row[s.var_of[SignAssignment::index(f.m, f.i, n)]] ^= 1;
    row[s.var_of[SignAssignment::index(f.k(), f.j, n)]] ^= 1;
    row[s.var_of[SignAssignment::index(f.m, f.j, n)]] ^= 1;
    row[s.var_of[SignAssignment::index(f.k_prime(), f.i, n)]] ^= 1;
    row[s.vars] = face_constraint(f.cls, fl) == Relation::Opposite;
    s.rows.push_back(std::move(row));
  }
  return s;
}

// Returns (solvable, rank).
std::pair<bool, int> eliminate(System s) {
  int rank = 0;
  for (int c = 0; c < s.vars; ++c) {
    int p = rank;
    while (p < static_cast<int>(s.rows.size()) && !s.rows[p][c]) ++p;
    if (p == static_cast<int>(s.rows.size())) continue;
    std::swap(s.rows[p], s.rows[rank]);
    for (std::size_t r = 0; r < s.rows.size(); ++r) {
      if (static_cast<int>(r) != rank && s.rows[r][c]) {
        for (int k = c; k <= s.vars; ++k) s.rows[r][k] ^= s.rows[rank][k];
      }
    }
    ++rank;
  }
  for (std::size_t r = rank; r < s.rows.size(); ++r) {
    if (s.rows[r][s.vars]) return {false, rank};
  }
  return {true, rank};
}

bool satisfies(const System& s, const std::vector<std::uint8_t>& bits) {
  for (const auto& row : s.rows) {
    std::uint8_t acc = row[s.vars];
    for (int c = 0; c < s.vars; ++c) acc ^= row[c] & bits[c];
    if (acc) return false;
  }
  return true;
}

std::vector<std::uint8_t> bits_of(const SignAssignment& a, const System& s, int n) {
  std::vector<std::uint8_t> bits(s.vars, 0);
  for (Vertex m = 0; m < (Vertex{1} << n); ++m) {
    for (int i = 0; i < n; ++i) {
      if (m >> i & 1) bits[s.var_of[SignAssignment::index(m, i, n)]] = a.at(m, i) < 0;
    }
  }
  return bits;
}

}  // namespace

TEST_CASE("face constraints") {
  for (Flavor f : {Flavor::X, Flavor::Y}) {
    CHECK(face_constraint(FaceClass::Commutative, f) == Relation::Opposite);
    CHECK(face_constraint(FaceClass::Anticommutative, f) == Relation::Equal);
  }
  CHECK(face_constraint(FaceClass::TypeX, Flavor::X) == Relation::Equal);
  CHECK(face_constraint(FaceClass::TypeX, Flavor::Y) == Relation::Opposite);
  CHECK(face_constraint(FaceClass::TypeY, Flavor::X) == Relation::Opposite);
  CHECK(face_constraint(FaceClass::TypeY, Flavor::Y) == Relation::Equal);
}

TEST_CASE("no faces: all +1") {
  for (const char* pd : {"", "X[1,1,2,2]"}) {
    const Diagram d = parse_pd(pd);
    const SignAssignment s = solve(d, Flavor::X);
    for (auto v : s.values) CHECK((v == 1 || v == 0));
  }
}

TEST_CASE("trefoil: exhaustive check of all 2^12 assignments") {
  const Diagram d = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
  const auto faces = all_faces(d, resolve_all(d));
  for (Flavor fl : {Flavor::X, Flavor::Y}) {
    const System sys = build_system(faces, 3, fl);
    REQUIRE(sys.vars == 12);
    REQUIRE(faces.size() == 6);
    int valid = 0;
    std::vector<std::uint8_t> bits(12);
    for (int mask = 0; mask < 4096; ++mask) {
      for (int c = 0; c < 12; ++c) bits[c] = mask >> c & 1;
      valid += satisfies(sys, bits);
    }
    const auto [ok, rank] = eliminate(sys);
    CHECK(ok);
    CHECK(valid == (1 << (12 - rank)));
    CHECK(satisfies(sys, bits_of(solve(d, fl), sys, 3)));
  }
}

TEST_CASE("solver agrees with Gaussian elimination on the corpus and random diagrams") {
  std::vector<Diagram> all = random_diagrams(40, 7, 17);
  for (auto& e : standard_corpus()) all.push_back(e.diagram);
  for (const Diagram& d : all) {
    const int n = d.crossing_count();
    const auto faces = all_faces(d, resolve_all(d));
    for (Flavor fl : {Flavor::X, Flavor::Y}) {
      const System sys = build_system(faces, n, fl);
      CHECK(eliminate(sys).first);
      for (std::uint64_t seed : {1u, 2u, 3u}) {
        const SignAssignment a = solve(faces, n, fl, seed);
        CHECK_MESSAGE(satisfies(sys, bits_of(a, sys, n)), d.name);
        CHECK(!violated_face(a, faces).has_value());
      }
    }
  }
}

TEST_CASE("contradictory faces are unsolvable") {
  std::vector<CubeFace> faces{{0b11, 0, 1, FaceClass::Commutative},
                              {0b11, 0, 1, FaceClass::Anticommutative}};
  bool thrown = false;
  try {
    solve(faces, 2, Flavor::X);
  } catch (const Error& e) {
    thrown = e.kind() == ErrorKind::Unsolvable;
  }
  CHECK(thrown);
}

TEST_CASE("different solutions give the same homology") {
  const Diagram d = braid_closure(3, {1, 2, 1, 2, 1, 2, 1, 2}, "8_19");
  const auto ref = homology(assemble(d), Coefficients::Z);
  for (Flavor fl : {Flavor::X, Flavor::Y}) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      CHECK(homology(assemble(d, solve(d, fl, seed)), Coefficients::Z).table == ref.table);
    }
  }
}
