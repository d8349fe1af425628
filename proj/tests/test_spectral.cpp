#include <doctest.h>

#include <optional>

#include "oddkh/complex.hpp"
#include "oddkh/corpus.hpp"
#include "oddkh/error.hpp"
#include "oddkh/spectral.hpp"

using namespace oddkh;

namespace {

int total(const RankMap& m) {
  int t = 0;
  for (const auto& [k, r] : m) t += r;
  return t;
}

std::optional<ErrorKind> validate_kind(const FilteredComplex& c) {
  try {
    validate(c);
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("zero differential is constant from the first page") {
  FilteredComplex c;
  c.gens = {{0, 0, 0}, {1, 1, 0}, {1, 1, 2}};
  c.d = SparseMatrix(3, 3);
  const SpectralResult r = pages(c);
  CHECK(r.degeneration_page == 1);
  REQUIRE_FALSE(r.pages.empty());
  CHECK(total(r.pages.front().ranks) == 3);
  CHECK(r.einfinity == r.pages.front().ranks);
}

TEST_CASE("one differential of length two") {
  for (Field f : {Field::F2, Field::Q}) {
    FilteredComplex c;
    c.field = f;
    c.gens = {{0, 0, 0}, {2, 1, 0}};
    c.d = SparseMatrix(2, 2);
    c.d.add(1, 0, 1);
    const SpectralResult r = pages(c);
    REQUIRE(r.pages.size() >= 3);
    CHECK(total(r.pages[0].ranks) == 2);
    CHECK(total(r.pages[1].ranks) == 2);
    CHECK_FALSE(r.pages[0].dr_nonzero());
    CHECK(r.pages[1].dr_nonzero());
    CHECK(total(r.pages[2].ranks) == 0);
    CHECK(r.degeneration_page == 3);
    CHECK(r.einfinity.empty());
  }
}

TEST_CASE("pages agree with subquotients and the E-infinity oracle") {
  for (Field f : {Field::F2, Field::Q}) {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
      const FilteredComplex c = random_filtered_complex(seed, f);
      validate(c);
      const SpectralResult r = pages(c);
      for (const SSPage& p : r.pages) {
        CHECK_MESSAGE(p.ranks == page_by_subquotients(c, p.r), "seed ", seed, " r ", p.r);
      }
      CHECK(r.einfinity == einfinity_oracle(c));
      CHECK(r.pages.back().ranks == r.einfinity);
      // ranks never grow from page to page
      for (std::size_t k = 1; k < r.pages.size(); ++k) {
        CHECK(total(r.pages[k].ranks) <= total(r.pages[k - 1].ranks));
      }
    }
  }
}

TEST_CASE("validation errors") {
  FilteredComplex c;
  c.gens = {{0, 0, 0}, {1, 1, 0}};
  c.d = SparseMatrix(3, 3);
  CHECK(validate_kind(c) == ErrorKind::ShapeMismatch);
  c.d = SparseMatrix(2, 2);
  c.d.add(0, 1, 1);  // lowers the level
  CHECK(validate_kind(c) == ErrorKind::FiltrationViolated);
  c.d = SparseMatrix(2, 2);
  c.gens[1].degree = 2;
  c.d.add(1, 0, 1);
  CHECK(validate_kind(c) == ErrorKind::InvalidArgument);

  FilteredComplex sq;
  sq.field = Field::Q;
  sq.gens = {{0, 0, 0}, {1, 1, 0}, {2, 2, 0}};
  sq.d = SparseMatrix(3, 3);
  sq.d.add(1, 0, 1);
  sq.d.add(2, 1, 1);
  CHECK(validate_kind(sq) == ErrorKind::DifferentialNotSquareZero);
  sq.d = SparseMatrix(3, 3);
  sq.d.add(1, 0, 2);
  sq.d.add(2, 1, 1);
  CHECK(validate_kind(sq) == ErrorKind::DifferentialNotSquareZero);
  sq.field = Field::F2;
  CHECK_NOTHROW(validate(sq));
}

TEST_CASE("homological filtration of diagrams degenerates at the second page") {
  for (const auto& e : standard_corpus()) {
    const auto c = assemble(e.diagram);
    const auto f2 = homology(c, Coefficients::F2).ranks();
    const SpectralResult r = pages(filtered_from(c, Field::F2), 3);
    REQUIRE(r.pages.size() >= 2);
    CHECK(total(r.pages[0].ranks) == static_cast<int>(c.size()));
    std::map<Bidegree, int> e2;
    for (const auto& [k, v] : r.pages[1].ranks) e2[{k.degree, k.weight}] += v;
    CHECK_MESSAGE(e2 == f2, e.diagram.name);
    CHECK(r.degeneration_page <= 2);
    CHECK(total(r.einfinity) == homology(c, Coefficients::F2).total_rank());
  }
}
