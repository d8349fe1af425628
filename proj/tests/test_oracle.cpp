#include <doctest.h>

#include "oddkh/complex.hpp"
#include "oddkh/corpus.hpp"
#include "oddkh/oracle.hpp"

using namespace oddkh;

TEST_CASE("Jones polynomial examples") {
  CHECK(kauffman_bracket(parse_pd("O[1]")) == LaurentPoly::monomial(0));
  CHECK(kauffman_bracket(parse_pd("X[1,1,2,2]")) == LaurentPoly::monomial(0));
  const Diagram left = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
  const LaurentPoly right = LaurentPoly::monomial(2) + LaurentPoly::monomial(6) -
                            LaurentPoly::monomial(8);
  CHECK(kauffman_bracket(mirror(left)) == right);
  CHECK(kauffman_bracket(left) == right.scale_exponents(-1));
  CHECK(kauffman_bracket(braid_closure(2, {1, 1, 1})) == right);
}

TEST_CASE("determinants") {
  for (const auto& e : standard_corpus()) CHECK_MESSAGE(determinant(e.diagram) == e.determinant, e.diagram.name);
  CHECK(determinant(parse_pd("O[2]")) == 0);
}

TEST_CASE("Jones depends only on the knot type") {
  std::map<std::string, LaurentPoly> seen;
  for (const auto& e : standard_corpus()) {
    const LaurentPoly j = kauffman_bracket(e.diagram);
    auto [it, fresh] = seen.emplace(e.knot, j);
    if (!fresh) CHECK_MESSAGE(it->second == j, e.diagram.name);
  }
}

TEST_CASE("even complex squares to zero mod 2") {
  for (const auto& e : standard_corpus()) {
    const auto c = even_f2_complex(e.diagram);
    CHECK((c.d * c.d).mod2().is_zero());
    for (const auto& col : c.d.col) {
      for (const auto& [r, v] : col) CHECK(v == 1);
    }
  }
}

TEST_CASE("bracket of a crossingless diagram") {
  // <O O> = -A^2 - A^-2
  const LaurentPoly b = bracket_in_a(parse_pd("O[2]"));
  CHECK(b == LaurentPoly::monomial(2, -1) + LaurentPoly::monomial(-2, -1));
}
