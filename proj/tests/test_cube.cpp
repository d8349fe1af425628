#include <doctest.h>

#include "oddkh/corpus.hpp"
#include "oddkh/cube.hpp"
#include "oddkh/error.hpp"

using namespace oddkh;

namespace {

const Diagram& trefoil() {
  static const Diagram d = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
  return d;
}

// two crossings whose top resolution is one circle and whose face has both
// routes zero
const Diagram& clasp() {
  static const Diagram d = parse_pd("X[1,2,3,4] X[3,2,1,4]");
  return d;
}

}  // namespace

TEST_CASE("resolutions") {
  CHECK(resolve(parse_pd(""), 0).circle_count() == 1);
  // this trefoil code is left-handed: its Seifert resolution is m = 111
  CHECK(resolve(trefoil(), 0b000).circle_count() == 3);
  CHECK(resolve(trefoil(), 0b111).circle_count() == 2);
  const Diagram right = mirror(trefoil());
  CHECK(resolve(right, 0b000).circle_count() == 2);
  CHECK(resolve(right, 0b111).circle_count() == 3);
  CHECK(oriented_vertex(right) == 0b000);
  CHECK(oriented_vertex(trefoil()) == 0b111);
  CHECK(oriented_vertex(parse_pd("")) == 0);
}

TEST_CASE("resolutions partition the arcs") {
  for (const auto& e : standard_corpus()) {
    const Diagram& d = e.diagram;
    for (const Resolution& r : resolve_all(d)) {
      std::vector<int> count(d.total_arcs() + 1, 0);
      for (const Circle& c : r.circles) {
        for (int a : c.arcs) ++count[a];
        CHECK(c.label == *std::min_element(c.arcs.begin(), c.arcs.end()));
      }
      for (int a = 1; a <= d.total_arcs(); ++a) CHECK(count[a] == 1);
      CHECK(r.arc_circle[d.basepoint_arc] == r.pointed_circle);
      for (std::size_t k = 1; k < r.circles.size(); ++k) {
        CHECK(r.circles[k - 1].label < r.circles[k].label);
      }
    }
  }
}

TEST_CASE("edge signs") {
  CHECK(edge_sign(0b001, 0b000) == 1);
  CHECK(edge_sign(0b011, 0b001) == -1);
  CHECK(edge_sign(0b111, 0b011) == 1);
  auto bad = [](Vertex m, Vertex n) {
    try {
      edge_sign(m, n);
    } catch (const Error& e) {
      return e.kind() == ErrorKind::NotAnEdge;
    }
    return false;
  };
  CHECK(bad(0b000, 0b001));
  CHECK(bad(0b111, 0b001));
  CHECK(bad(0b101, 0b011));
}

TEST_CASE("edge signs anticommute around every face, circle counts change by one") {
  for (const auto& e : standard_corpus()) {
    const Diagram& d = e.diagram;
    const int n = d.crossing_count();
    const auto res = resolve_all(d);
    for (Vertex m = 0; m < (Vertex{1} << n); ++m) {
      for (int i = 0; i < n; ++i) {
        if (!(m >> i & 1)) continue;
        const Vertex k = m & ~(Vertex{1} << i);
        const CubeEdge edge = cube_edge(d, res[m], res[k]);
        const int delta = res[k].circle_count() - res[m].circle_count();
        CHECK(std::abs(delta) == 1);
        CHECK((edge.kind == EdgeKind::Merge) == (delta == -1));
        for (int j = i + 1; j < n; ++j) {
          if (!(m >> j & 1)) continue;
          const Vertex kp = m & ~(Vertex{1} << j);
          const Vertex bottom = k & ~(Vertex{1} << j);
          CHECK(edge_sign(m, k) * edge_sign(k, bottom) == -edge_sign(m, kp) * edge_sign(kp, bottom));
        }
      }
    }
  }
}

TEST_CASE("face classes") {
  CHECK(classify_face(clasp(), 0b11, 0b10, 0b01, 0b00) == FaceClass::TypeY);
  CHECK(arrow_pattern(clasp(), resolve(clasp(), 0b11), 0, 1) == FaceClass::TypeY);
  CHECK(arrow_pattern(clasp(), resolve(clasp(), 0b11), 1, 0) == FaceClass::TypeY);
  auto flipped = [](std::vector<bool> f) {
    Decoration d;
    d.flip = std::move(f);
    return d;
  };
  CHECK(classify_face(clasp(), 0b11, 0b10, 0b01, 0b00, flipped({true, false})) == FaceClass::TypeX);
  CHECK(classify_face(clasp(), 0b11, 0b10, 0b01, 0b00, flipped({false, true})) == FaceClass::TypeX);
  CHECK(classify_face(clasp(), 0b11, 0b10, 0b01, 0b00, flipped({true, true})) == FaceClass::TypeY);
  // two kinks on one strand
  const Diagram kinks = parse_pd("X[2,1,1,3] X[3,4,4,2]");
  CHECK(classify_face(kinks, 0b11, 0b10, 0b01, 0b00) == FaceClass::Commutative);
  const Diagram turned = parse_pd("X[1,1,2,3] X[4,4,3,2]");
  CHECK(classify_face(turned, 0b11, 0b10, 0b01, 0b00) == FaceClass::Anticommutative);
  auto not_face = [](Vertex m, Vertex k, Vertex kp, Vertex n) {
    try {
      classify_face(trefoil(), m, k, kp, n);
    } catch (const Error& e) {
      return e.kind() == ErrorKind::NotAFace;
    }
    return false;
  };
  CHECK(not_face(0b111, 0b011, 0b101, 0b000));
  CHECK(not_face(0b011, 0b001, 0b001, 0b000));
}

TEST_CASE("classes are symmetric in the crossing order and toggle with one arrow") {
  for (const auto& e : standard_corpus()) {
    const Diagram& d = e.diagram;
    const auto res = resolve_all(d);
    for (const CubeFace& f : all_faces(d, res)) {
      const bool degenerate = f.cls == FaceClass::TypeX || f.cls == FaceClass::TypeY;
      if (!degenerate) continue;
      CHECK(arrow_pattern(d, res[f.m], f.j, f.i) == f.cls);
      Decoration deco;
      deco.flip.assign(d.crossing_count(), false);
      deco.flip[f.i] = true;
      const FaceClass toggled = classify_face(d, res, f.m, f.i, f.j, deco);
      CHECK(toggled == (f.cls == FaceClass::TypeX ? FaceClass::TypeY : FaceClass::TypeX));
    }
  }
}

TEST_CASE("trefoil faces") {
  const auto res = resolve_all(trefoil());
  const auto faces = all_faces(trefoil(), res);
  CHECK(faces.size() == 6);
  for (const CubeFace& f : faces) {
    CHECK(classify_face(trefoil(), f.m, f.k(), f.k_prime(), f.n()) == f.cls);
  }
}
