#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oddkh/corpus.hpp"
#include "oddkh/error.hpp"
#include "oddkh/pd.hpp"

using namespace oddkh;

namespace {

const char* kTrefoil = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";

ErrorKind kind_of(const std::string& text) {
  try {
    parse_pd(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error for " << text);
  return ErrorKind::Io;
}

std::vector<Diagram> sample() {
  std::vector<Diagram> out;
  for (auto& e : standard_corpus()) out.push_back(e.diagram);
  for (auto& d : random_diagrams(40, 8, 11)) out.push_back(d);
  return out;
}

}  // namespace

TEST_CASE("empty input is the zero-crossing unknot") {
  const Diagram d = parse_pd("");
  CHECK(d.crossing_count() == 0);
  CHECK(d.component_count() == 1);
  CHECK(d.free_loops == 1);
  CHECK(crossing_signs(d).empty());
  CHECK(mirror(d).crossings.empty());
}

TEST_CASE("trefoil code: six arcs, one sign") {
  const Diagram d = parse_pd(kTrefoil);
  CHECK(d.crossing_count() == 3);
  CHECK(d.arc_count == 6);
  CHECK(d.component_count() == 1);
  const auto s = crossing_signs(d);
  CHECK(std::all_of(s.begin(), s.end(), [&](int x) { return x == s[0]; }));
  // this code is the left-handed trefoil
  CHECK(s[0] == -1);
  CHECK(d.basepoint_arc == 1);
}

TEST_CASE("parse errors") {
  CHECK(kind_of("X[1,4,2,5] X[3,6,4,1] X[5,2,6,1]") == ErrorKind::ArcCountViolation);
  CHECK(kind_of("X[1,4,2,5] X[3,6,4,1] X[5,2,6") == ErrorKind::MalformedToken);
  CHECK(kind_of("X[1,2,3]") == ErrorKind::MalformedToken);
  CHECK(kind_of("Y[1,2,3,4]") == ErrorKind::MalformedToken);
  CHECK(kind_of("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3] BP[9]") == ErrorKind::InvalidBasepoint);
  // arc 1 enters both of its crossings
  CHECK(kind_of("X[1,2,3,4] X[1,4,3,2]") == ErrorKind::OrientationInconsistent);
  // two closed strands meeting once
  CHECK(kind_of("X[1,2,1,2]") == ErrorKind::NonPlanar);
}

TEST_CASE("comments, labels and the basepoint token") {
  const Diagram d = parse_pd("# a comment\nmine: X[1,4,2,5] X[3,6,4,1]\n X[5,2,6,3] BP[4] # tail");
  CHECK(d.name == "mine");
  CHECK(d.basepoint_arc == 4);
  CHECK(parse_pd(kTrefoil).name == canonical_hash(parse_pd(kTrefoil)));
}

TEST_CASE("serialize round-trips") {
  for (const Diagram& d : sample()) {
    const Diagram back = parse_pd(serialize(d));
    CHECK_MESSAGE(back == d, d.name);
  }
}

TEST_CASE("mirror negates signs and is an involution") {
  for (const Diagram& d : sample()) {
    const Diagram m = mirror(d);
    const auto a = crossing_signs(d);
    const auto b = crossing_signs(m);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(b[i] == -a[i]);
    CHECK(m.component_count() == d.component_count());
    Diagram mm = mirror(m);
    mm.name = d.name;
    CHECK(mm == d);
  }
}

TEST_CASE("canonical hash ignores arc names and crossing order") {
  std::mt19937_64 rng(5);
  for (const Diagram& d : sample()) {
    if (d.crossing_count() == 0) continue;
    std::vector<int> perm(d.total_arcs() + 1);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin() + 1, perm.begin() + 1 + d.arc_count, rng);
    std::shuffle(perm.begin() + 1 + d.arc_count, perm.end(), rng);
    std::vector<int> order(d.crossing_count());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const Diagram e = permute_crossings(relabel_arcs(d, perm), order);
    CHECK(canonical_hash(e) == canonical_hash(d));
    CHECK(crossing_signs(e).size() == crossing_signs(d).size());
    CHECK(e.writhe() == d.writhe());
  }
  CHECK(canonical_hash(parse_pd(kTrefoil)) != canonical_hash(mirror(parse_pd(kTrefoil))));
}

TEST_CASE("resolving a crossing removes it") {
  const Diagram d = parse_pd(kTrefoil);
  for (int i = 0; i < 3; ++i) {
    for (int s = 0; s < 2; ++s) {
      const Diagram r = resolve_crossing(d, i, s);
      CHECK(r.crossing_count() == 2);
    }
  }
  // the Seifert smoothing of a trefoil crossing leaves a Hopf link
  CHECK(resolve_crossing(d, 0, 1).component_count() == 2);
  CHECK(resolve_crossing(d, 0, 0).component_count() == 1);
}
