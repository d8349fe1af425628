#include "oddkh/cube.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "oddkh/error.hpp"

namespace oddkh {

namespace {

int partner(int smoothing, int slot) { return smoothing == 0 ? (slot ^ 1) : (3 - slot); }

int single_bit(Vertex x) {
  if (x == 0 || (x & (x - 1)) != 0) return -1;
  return __builtin_ctz(x);
}

using Column = std::map<std::uint32_t, std::int64_t>;

std::vector<Column> compose(const SparseColumns& second, const SparseColumns& first) {
  std::vector<Column> out(first.size());
  for (std::size_t c = 0; c < first.size(); ++c) {
    for (const auto& [mid, a] : first[c]) {
      for (const auto& [tgt, b] : second[mid]) {
        auto& slot = out[c][tgt];
        slot += a * b;
        if (slot == 0) out[c].erase(tgt);
      }
    }
  }
  return out;
}

bool all_zero(const std::vector<Column>& m) {
  return std::all_of(m.begin(), m.end(), [](const Column& c) { return c.empty(); });
}

bool negated(const std::vector<Column>& x, const std::vector<Column>& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t c = 0; c < x.size(); ++c) {
    if (x[c].size() != y[c].size()) return false;
    for (const auto& [r, v] : x[c]) {
      const auto it = y[c].find(r);
      if (it == y[c].end() || it->second != -v) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<int> Resolution::labels() const {
  std::vector<int> out;
  out.reserve(circles.size());
  for (const auto& c : circles) out.push_back(c.label);
  return out;
}

Resolution resolve(const Diagram& d, Vertex m) {
  const int n = d.crossing_count();
  if (n < 32 && (m >> n) != 0) throw Error(ErrorKind::InvalidArgument, "vertex out of range");
  const int total = d.total_arcs();
  std::vector<int> parent(static_cast<std::size_t>(total) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int c = 0; c < n; ++c) {
    const Quad& q = d.crossings[c];
    const int s = (m >> c) & 1;
    for (int slot = 0; slot < 4; ++slot) parent[find(q[slot])] = find(q[partner(s, slot)]);
  }

  Resolution r;
  r.vertex = m;
  r.n = n;
  r.arc_circle.assign(static_cast<std::size_t>(total) + 1, -1);
  std::vector<int> root_circle(static_cast<std::size_t>(total) + 1, -1);
  for (int a = 1; a <= total; ++a) {
    // labels are visited in increasing order, so the first hit is the least
    const int root = find(a);
    if (root_circle[root] < 0) {
      root_circle[root] = static_cast<int>(r.circles.size());
      r.circles.push_back(Circle{a, {}, {}});
    }
    r.arc_circle[a] = root_circle[root];
  }

  const auto oriented = oriented_arc_ends(d);
  for (Circle& circle : r.circles) {
    const int start = circle.label;
    if (start > d.arc_count) {
      circle.arcs.push_back(start);
      continue;
    }
    int arc = start;
    ArcEnd at = oriented[arc][1];
    while (true) {
      circle.arcs.push_back(arc);
      const int s = (m >> at.crossing) & 1;
      const int out_slot = partner(s, at.slot);
      circle.corners.push_back({at.crossing, at.slot, out_slot});
      arc = d.crossings[at.crossing][out_slot];
      if (arc == start) break;
      const auto& ends = oriented[arc];
      const ArcEnd from{at.crossing, out_slot};
      at = (ends[0] == from) ? ends[1] : ends[0];
    }
  }
  r.pointed_circle = r.arc_circle[d.basepoint_arc];
  return r;
}

std::vector<Resolution> resolve_all(const Diagram& d) {
  const int n = d.crossing_count();
  if (n > 24) throw Error(ErrorKind::InvalidArgument, "too many crossings for a full cube");
  std::vector<Resolution> out;
  out.reserve(std::size_t{1} << n);
  for (Vertex m = 0; m < (Vertex{1} << n); ++m) out.push_back(resolve(d, m));
  return out;
}

Vertex oriented_vertex(const Diagram& d) {
  Vertex o = 0;
  for (int c = 0; c < d.crossing_count(); ++c) {
    if (d.signs[c] < 0) o |= Vertex{1} << c;
  }
  return o;
}

int edge_sign(Vertex m, Vertex n) {
  const int i0 = single_bit(m ^ n);
  if (i0 < 0 || (n & ~m) != 0) {
    throw Error(ErrorKind::NotAnEdge, "vertices do not span a cube edge m > n");
  }
  return (__builtin_popcount(m & ((Vertex{1} << i0) - 1)) & 1) ? -1 : 1;
}

CubeEdge cube_edge(const Diagram& d, const Resolution& from, const Resolution& to,
                   const Decoration& deco) {
  CubeEdge e;
  e.from = from.vertex;
  e.to = to.vertex;
  e.sgn = edge_sign(from.vertex, to.vertex);
  e.crossing = single_bit(from.vertex ^ to.vertex);
  const Quad& q = d.crossings[e.crossing];
  const int f_ad = from.arc_circle[q[0]];
  const int f_bc = from.arc_circle[q[1]];
  const int t_ab = to.arc_circle[q[0]];
  const int t_cd = to.arc_circle[q[2]];
  if (f_ad != f_bc) {
    e.kind = EdgeKind::Merge;
    e.a = f_ad;
    e.b = f_bc;
    e.c = t_ab;
  } else {
    if (t_ab == t_cd) throw Error(ErrorKind::NonPlanar, "edge neither merges nor splits");
    e.kind = EdgeKind::Split;
    e.c = f_ad;
    e.a = t_ab;
    e.b = t_cd;
    if (deco.flipped(e.crossing)) std::swap(e.a, e.b);
  }
  return e;
}

CubeEdge cube_edge(const Diagram& d, Vertex m, Vertex n, const Decoration& deco) {
  edge_sign(m, n);
  return cube_edge(d, resolve(d, m), resolve(d, n), deco);
}

SparseColumns edge_map(const Resolution& from, const Resolution& to, const CubeEdge& e) {
  std::vector<int> pos_map(from.circles.size());
  for (std::size_t j = 0; j < from.circles.size(); ++j) {
    pos_map[j] = to.arc_circle[from.circles[j].label];
  }
  Terms prefix{{0, 1}};
  if (e.kind == EdgeKind::Split) {
    pos_map[e.c] = e.a;
    prefix.clear();
    // e_a - e_b in the target basis
    if (e.a != to.pointed_circle) prefix[Mask{1} << e.a] += 1;
    if (e.b != to.pointed_circle) prefix[Mask{1} << e.b] -= 1;
  }
  const auto images = induced_images(pos_map, from.pointed_circle, to.pointed_circle);
  const std::uint32_t dim = std::uint32_t{1} << (from.circle_count() - 1);
  SparseColumns cols(dim);
  for (std::uint32_t idx = 0; idx < dim; ++idx) {
    const Mask mono = monomial_from_index(idx, from.pointed_circle);
    for (const auto& [tm, c] : wedge_images(mono, images, prefix)) {
      cols[idx].push_back({monomial_index(tm, to.pointed_circle), c});
    }
  }
  return cols;
}

const char* to_string(FaceClass c) {
  switch (c) {
    case FaceClass::Commutative: return "Commutative";
    case FaceClass::Anticommutative: return "Anticommutative";
    case FaceClass::TypeX: return "TypeX";
    case FaceClass::TypeY: return "TypeY";
  }
  return "?";
}

FaceClass arrow_pattern(const Diagram& d, const Resolution& top, int i, int j,
                        const Decoration& deco) {
  (void)d;
  int home = -1;
  for (std::size_t ci = 0; ci < top.circles.size(); ++ci) {
    for (const Corner& k : top.circles[ci].corners) {
      if (k.crossing == i) home = static_cast<int>(ci);
    }
  }
  if (home < 0) throw Error(ErrorKind::ClassificationInconsistent, "crossing not on any circle");
  struct Event {
    int crossing;
    bool tail;
    bool left;
  };
  std::vector<Event> events;
  for (const Corner& k : top.circles[home].corners) {
    if (k.crossing != i && k.crossing != j) continue;
    // the 1-smoothing arrow runs from piece {0,3} to piece {1,2}
    bool tail = (k.s_in == 0 || k.s_in == 3);
    if (deco.flipped(k.crossing)) tail = !tail;
    events.push_back({k.crossing, tail, k.s_out == (k.s_in + 1) % 4});
  }
  if (events.size() != 4) {
    throw Error(ErrorKind::ClassificationInconsistent,
                "both-zero face whose crossings do not share one circle");
  }
  const auto first_i =
      std::find_if(events.begin(), events.end(), [&](const Event& e) { return e.crossing == i; });
  if (!first_i->left) {
    std::reverse(events.begin(), events.end());
  }
  const auto tail_i = std::find_if(events.begin(), events.end(), [&](const Event& e) {
    return e.crossing == i && e.tail;
  });
  if (tail_i == events.end()) {
    throw Error(ErrorKind::ClassificationInconsistent, "crossing without arrow tail");
  }
  std::rotate(events.begin(), tail_i, events.end());
  const Event& x = events[1];
  const Event& h = events[2];
  const Event& y = events[3];
  if (h.crossing != i || x.crossing != j || y.crossing != j || x.tail == y.tail) {
    throw Error(ErrorKind::ClassificationInconsistent,
                "arrow ends of a both-zero face are not interleaved");
  }
  return x.tail ? FaceClass::TypeX : FaceClass::TypeY;
}

FaceClass classify_face(const Diagram& d, const std::vector<Resolution>& res, Vertex m,
                        int i, int j, const Decoration& deco) {
  const Vertex bi = Vertex{1} << i;
  const Vertex bj = Vertex{1} << j;
  if (i == j || !(m & bi) || !(m & bj)) throw Error(ErrorKind::NotAFace, "not a cube face");
  const Vertex k = m & ~bi;
  const Vertex kp = m & ~bj;
  const Vertex n = k & ~bj;
  const auto& rm = res[m];
  const auto& rk = res[k];
  const auto& rkp = res[kp];
  const auto& rn = res[n];
  const auto route1 = compose(edge_map(rk, rn, cube_edge(d, rk, rn, deco)),
                              edge_map(rm, rk, cube_edge(d, rm, rk, deco)));
  const auto route2 = compose(edge_map(rkp, rn, cube_edge(d, rkp, rn, deco)),
                              edge_map(rm, rkp, cube_edge(d, rm, rkp, deco)));
  const bool z1 = all_zero(route1);
  const bool z2 = all_zero(route2);
  if (z1 && z2) return arrow_pattern(d, rm, i, j, deco);
  if (route1 == route2) return FaceClass::Commutative;
  if (negated(route1, route2)) return FaceClass::Anticommutative;
  throw Error(ErrorKind::ClassificationInconsistent,
              "face routes are neither equal, opposite, nor both zero");
}

FaceClass classify_face(const Diagram& d, Vertex m, Vertex k, Vertex k_prime, Vertex n,
                        const Decoration& deco) {
  const int i = single_bit(m ^ k);
  const int j = single_bit(m ^ k_prime);
  if (i < 0 || j < 0 || i == j || (k & ~m) || (k_prime & ~m) || n != (k & k_prime) ||
      (n | (Vertex{1} << i) | (Vertex{1} << j)) != m) {
    throw Error(ErrorKind::NotAFace, "corners do not form a cube face");
  }
  const int cn = d.crossing_count();
  if (cn < 32 && (m >> cn) != 0) throw Error(ErrorKind::NotAFace, "vertex out of range");
  std::vector<Resolution> res(static_cast<std::size_t>(m) + 1);
  for (Vertex v : {m, k, k_prime, n}) res[v] = resolve(d, v);
  return classify_face(d, res, m, i, j, deco);
}

std::vector<CubeFace> all_faces(const Diagram& d, const std::vector<Resolution>& res,
                                const Decoration& deco) {
  std::vector<CubeFace> out;
  const int n = d.crossing_count();
  for (Vertex m = 0; m < (Vertex{1} << n); ++m) {
    for (int i = 0; i < n; ++i) {
      if (!(m >> i & 1)) continue;
      for (int j = i + 1; j < n; ++j) {
        if (!(m >> j & 1)) continue;
        out.push_back({m, i, j, classify_face(d, res, m, i, j, deco)});
      }
    }
  }
  return out;
}

}  // namespace oddkh
