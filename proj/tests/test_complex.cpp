#include <doctest.h>

#include <numeric>
#include <random>

#include "oddkh/complex.hpp"
#include "oddkh/corpus.hpp"
#include "oddkh/error.hpp"
#include "oddkh/oracle.hpp"

using namespace oddkh;

namespace {

const Diagram kTrefoil = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");

std::vector<int> random_perm(std::mt19937_64& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("unknot and kinks") {
  const auto c = assemble(parse_pd("O[1]"));
  REQUIRE(c.size() == 1);
  CHECK(c.gens[0].h == 0);
  CHECK(c.gens[0].q == 0);
  const auto h = homology(c, Coefficients::Z);
  CHECK(h.total_rank() == 1);
  CHECK(h.table.count({0, 0}) == 1);

  for (const char* kink : {"X[1,1,2,2]", "X[2,1,1,2]"}) {
    const auto k = assemble(parse_pd(kink));
    CHECK(k.size() == 3);
    const auto hk = homology(k, Coefficients::Z);
    CHECK(hk.total_rank() == 1);
    CHECK(hk.table.begin()->first == Bidegree{0, 0});
  }
}

TEST_CASE("trefoil complex") {
  const auto c = assemble(kTrefoil);
  CHECK(c.size() == 4 + 6 + 3 + 2);
  CHECK(square_zero(c));
  for (const auto& col : c.d.col) {
    for (const auto& [r, v] : col) CHECK((v == 1 || v == -1));
  }
  for (Coefficients k : {Coefficients::Z, Coefficients::Q, Coefficients::F2}) {
    CHECK(homology(c, k).total_rank() == 3);
  }
}

TEST_CASE("gradings: d raises h by one and keeps q; delta parity") {
  for (const auto& e : standard_corpus()) {
    const auto c = assemble(e.diagram);
    for (const auto& g : c.gens) {
      CHECK(g.q == 2 * g.h - g.delta2);
      // reduced complexes: 2 delta and the component count have opposite parity
      CHECK(((g.delta2 % 2) + 2) % 2 == (e.diagram.component_count() - 1) % 2);
    }
    for (int j = 0; j < static_cast<int>(c.size()); ++j) {
      for (const auto& [i, v] : c.d.col[j]) {
        CHECK(c.gens[i].h == c.gens[j].h + 1);
        CHECK(c.gens[i].q == c.gens[j].q);
      }
    }
  }
}

TEST_CASE("shift moves the table and composes") {
  const auto c = assemble(kTrefoil);
  const auto base = homology(c, Coefficients::Z);
  const auto s = shift(c, 2, -1);
  const auto moved = homology(s, Coefficients::Z);
  REQUIRE(moved.table.size() == base.table.size());
  for (const auto& [b, e] : base.table) {
    const Bidegree t{b.h - 2, b.q + 2 * (-1 - 2)};
    REQUIRE(moved.table.count(t) == 1);
    CHECK(moved.table.at(t) == e);
  }
  const auto twice = shift(shift(c, 1, 3), -2, 1);
  const auto once = shift(c, -1, 4);
  for (std::size_t g = 0; g < c.size(); ++g) {
    CHECK(twice.gens[g].h == once.gens[g].h);
    CHECK(twice.gens[g].q == once.gens[g].q);
  }
  const auto zero = shift(c, 0, 0);
  for (std::size_t g = 0; g < c.size(); ++g) CHECK(zero.gens[g].q == c.gens[g].q);
}

TEST_CASE("homology is invariant under relabeling and crossing order") {
  std::mt19937_64 rng(11);
  for (const auto& e : standard_corpus()) {
    const Diagram& d = e.diagram;
    if (d.crossing_count() > 8) continue;
    const auto ref = homology(assemble(d), Coefficients::Z);
    std::vector<int> perm(d.total_arcs() + 1);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin() + 1, perm.begin() + 1 + d.arc_count, rng);
    const auto r1 = homology(assemble(relabel_arcs(d, perm)), Coefficients::Z);
    const auto r2 =
        homology(assemble(permute_crossings(d, random_perm(rng, d.crossing_count()))),
                 Coefficients::Z);
    CHECK_MESSAGE(r1.table == ref.table, d.name);
    CHECK_MESSAGE(r2.table == ref.table, d.name);
  }
}

TEST_CASE("mod 2 reduction is the even complex") {
  for (const auto& e : standard_corpus()) {
    const auto odd = assemble(e.diagram);
    const auto even = even_f2_complex(e.diagram);
    REQUIRE(even.size() == odd.size());
    CHECK_MESSAGE(odd.d.mod2() == even.d.mod2(), e.diagram.name);
    CHECK(homology(odd, Coefficients::F2).ranks() ==
          homology(even, Coefficients::F2).ranks());
  }
}

TEST_CASE("universal coefficients over the corpus") {
  for (const auto& e : standard_corpus()) {
    const auto c = assemble(e.diagram);
    const auto z = homology(c, Coefficients::Z);
    CHECK(f2_dimensions_from_integral(z) == homology(c, Coefficients::F2).ranks());
    int q_rank = 0;
    for (const auto& [b, r] : homology(c, Coefficients::Q).ranks()) q_rank += r;
    int z_rank = 0;
    for (const auto& [b, x] : z.table) z_rank += x.rank;
    CHECK(q_rank == z_rank);
  }
}

TEST_CASE("rank of reduced homology over Q is the determinant for alternating knots") {
  for (const auto& e : alternating_set()) {
    CHECK(homology(assemble(e.diagram), Coefficients::Q).total_rank() == e.determinant);
  }
}

TEST_CASE("non-square-zero differential is rejected") {
  auto c = assemble(kTrefoil);
  // triple an entry on a path of length two
  bool done = false;
  for (auto& col : c.d.col) {
    for (auto& [i, v] : col) {
      if (!done && !c.d.col[i].empty()) {
        v *= 3;
        done = true;
      }
    }
  }
  REQUIRE(done);
  bool thrown = false;
  try {
    homology(c, Coefficients::Q);
  } catch (const Error& e) {
    thrown = e.kind() == ErrorKind::DifferentialNotSquareZero;
  }
  CHECK(thrown);
  CHECK_FALSE(square_zero(c));
}

TEST_CASE("coefficient names") {
  CHECK(parse_coefficients("z") == Coefficients::Z);
  CHECK(parse_coefficients("q") == Coefficients::Q);
  CHECK(parse_coefficients("f2") == Coefficients::F2);
  bool thrown = false;
  try {
    parse_coefficients("r");
  } catch (const Error&) {
    thrown = true;
  }
  CHECK(thrown);
}
