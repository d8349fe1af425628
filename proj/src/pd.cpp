#include "oddkh/pd.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

#include "oddkh/error.hpp"

namespace oddkh {

namespace {

// Parity union-find: value(x) = value(root) ^ parity(x).
class ParityUnionFind {
 public:
  explicit ParityUnionFind(int n) : parent_(n), parity_(n, 0), fixed_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::pair<int, int> find(int x) {
    int p = 0;
    int r = x;
    while (parent_[r] != r) {
      p ^= parity_[r];
      r = parent_[r];
    }
    // path compression
    int cur = x;
    int cur_p = p;
    while (parent_[cur] != cur) {
      const int next = parent_[cur];
      const int next_p = cur_p ^ parity_[cur];
      parent_[cur] = r;
      parity_[cur] = static_cast<std::uint8_t>(cur_p);
      cur = next;
      cur_p = next_p;
    }
    return {r, p};
  }

  // Requires value(x) ^ value(y) == rel.
  bool relate(int x, int y, int rel) {
    auto [rx, px] = find(x);
    auto [ry, py] = find(y);
    if (rx == ry) return (px ^ py) == rel;
    const int link = px ^ py ^ rel;
    if (fixed_[rx] && fixed_[ry] && ((*fixed_[rx] ^ *fixed_[ry]) != link)) return false;
    parent_[ry] = rx;
    parity_[ry] = static_cast<std::uint8_t>(link);
    if (fixed_[ry] && !fixed_[rx]) fixed_[rx] = *fixed_[ry] ^ link;
    return true;
  }

  bool fix(int x, int value) {
    auto [r, p] = find(x);
    const int root_value = value ^ p;
    if (fixed_[r]) return *fixed_[r] == root_value;
    fixed_[r] = root_value;
    return true;
  }

  std::optional<int> root_value(int root) const { return fixed_[root]; }

 private:
  std::vector<int> parent_;
  std::vector<std::uint8_t> parity_;
  std::vector<std::optional<int>> fixed_;
};

struct Orientation {
  std::vector<int> over_backward;  // 1 when the over-strand runs b -> d
  std::vector<int> free_roots;     // lowest crossing of each unconstrained class
};

// "Enters the crossing" indicator of a slot: (variable or -1, constant).
std::pair<int, int> entering(int crossing, int slot) {
  switch (slot) {
    case 0: return {-1, 1};
    case 2: return {-1, 0};
    case 1: return {crossing, 0};
    default: return {crossing, 1};
  }
}

std::vector<std::vector<ArcEnd>> collect_ends(const std::vector<Quad>& crossings, int arc_count) {
  std::vector<std::vector<ArcEnd>> ends(static_cast<std::size_t>(arc_count) + 1);
  for (int c = 0; c < static_cast<int>(crossings.size()); ++c) {
    for (int s = 0; s < 4; ++s) ends[crossings[c][s]].push_back({c, s});
  }
  return ends;
}

Orientation solve_orientation(const std::vector<Quad>& crossings, int arc_count,
                              const std::vector<int>& forced_negative) {
  const int n = static_cast<int>(crossings.size());
  ParityUnionFind uf(std::max(n, 1));
  const auto ends = collect_ends(crossings, arc_count);
  for (int arc = 1; arc <= arc_count; ++arc) {
    const auto [v1, k1] = entering(ends[arc][0].crossing, ends[arc][0].slot);
    const auto [v2, k2] = entering(ends[arc][1].crossing, ends[arc][1].slot);
    // exactly one end enters: in1 ^ in2 == 1
    const int rel = 1 ^ k1 ^ k2;
    bool ok = true;
    if (v1 < 0 && v2 < 0) {
      ok = rel == 0;
    } else if (v1 < 0) {
      ok = uf.fix(v2, rel);
    } else if (v2 < 0) {
      ok = uf.fix(v1, rel);
    } else {
      ok = uf.relate(v1, v2, rel);
    }
    if (!ok) {
      throw Error(ErrorKind::OrientationInconsistent,
                  "no consistent strand orientation through arc " + std::to_string(arc));
    }
  }
  for (int c : forced_negative) {
    if (c < 0 || c >= n) throw Error(ErrorKind::MalformedToken, "OV index out of range");
    if (!uf.fix(c, 1)) {
      throw Error(ErrorKind::OrientationInconsistent,
                  "forced over-strand direction at crossing " + std::to_string(c + 1) +
                      " contradicts the orientation");
    }
  }
  Orientation out;
  out.over_backward.assign(n, 0);
  std::vector<int> seen_root(std::max(n, 1), 0);
  for (int c = 0; c < n; ++c) {
    auto [r, p] = uf.find(c);
    auto rv = uf.root_value(r);
    if (!rv) {
      // unconstrained class: lowest crossing (visited first) is positive
      uf.fix(c, 0);
      out.free_roots.push_back(c);
      rv = uf.root_value(r);
    }
    (void)seen_root;
    out.over_backward[c] = *rv ^ p;
  }
  return out;
}

void check_planar(const std::vector<Quad>& crossings, int arc_count) {
  const int n = static_cast<int>(crossings.size());
  if (n == 0) return;
  const auto ends = collect_ends(crossings, arc_count);
  auto other = [&](int c, int s) {
    const auto& e = ends[crossings[c][s]];
    return (e[0].crossing == c && e[0].slot == s) ? e[1] : e[0];
  };
  std::vector<char> seen(static_cast<std::size_t>(4 * n), 0);
  int faces = 0;
  for (int start = 0; start < 4 * n; ++start) {
    if (seen[start]) continue;
    ++faces;
    int cur = start;
    while (!seen[cur]) {
      seen[cur] = 1;
      const ArcEnd e = other(cur / 4, cur % 4);
      cur = 4 * e.crossing + (e.slot + 1) % 4;
    }
  }
  std::vector<int> comp(n);
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (int arc = 1; arc <= arc_count; ++arc) {
    comp[find(ends[arc][0].crossing)] = find(ends[arc][1].crossing);
  }
  int pieces = 0;
  for (int c = 0; c < n; ++c) pieces += find(c) == c;
  // Euler characteristic of each connected piece is 2: V - E + F = 2 * pieces
  if (n - 2 * n + faces != 2 * pieces) {
    throw Error(ErrorKind::NonPlanar, "diagram does not embed in the plane (genus " +
                                          std::to_string((2 * pieces - (faces - n)) / 2) + ")");
  }
}

std::string strip_comments(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool in_comment = false;
  for (char ch : text) {
    if (ch == '#') in_comment = true;
    if (ch == '\n') in_comment = false;
    if (!in_comment) out.push_back(ch);
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void malformed(std::string_view near) {
  throw Error(ErrorKind::MalformedToken, "unparseable token near '" +
                                             std::string(near.substr(0, 24)) + "'");
}

std::string mirror_name(const std::string& name) {
  static constexpr std::string_view prefix = "mirror(";
  if (name.size() > prefix.size() + 1 && name.compare(0, prefix.size(), prefix) == 0 &&
      name.back() == ')') {
    return name.substr(prefix.size(), name.size() - prefix.size() - 1);
  }
  return std::string(prefix) + name + ")";
}

std::vector<int> negative_crossings(const Diagram& d) {
  std::vector<int> out;
  for (int c = 0; c < d.crossing_count(); ++c) {
    if (d.signs[c] < 0) out.push_back(c);
  }
  return out;
}

}  // namespace

int Diagram::n_plus() const {
  return static_cast<int>(std::count(signs.begin(), signs.end(), 1));
}

int Diagram::n_minus() const {
  return static_cast<int>(std::count(signs.begin(), signs.end(), -1));
}

int Diagram::component_count() const {
  std::vector<int> parent(static_cast<std::size_t>(arc_count) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& q : crossings) {
    parent[find(q[0])] = find(q[2]);
    parent[find(q[1])] = find(q[3]);
  }
  int count = free_loops;
  for (int a = 1; a <= arc_count; ++a) count += find(a) == a;
  return count;
}

std::vector<std::array<ArcEnd, 2>> oriented_arc_ends(const Diagram& d) {
  const auto ends = collect_ends(d.crossings, d.arc_count);
  std::vector<std::array<ArcEnd, 2>> out(static_cast<std::size_t>(d.arc_count) + 1);
  for (int arc = 1; arc <= d.arc_count; ++arc) {
    const ArcEnd e0 = ends[arc][0];
    const ArcEnd e1 = ends[arc][1];
    auto enters = [&](ArcEnd e) {
      const bool backward = d.signs[e.crossing] < 0;
      switch (e.slot) {
        case 0: return true;
        case 2: return false;
        case 1: return backward;
        default: return !backward;
      }
    };
    out[arc] = enters(e1) ? std::array<ArcEnd, 2>{e0, e1} : std::array<ArcEnd, 2>{e1, e0};
  }
  return out;
}

Diagram make_diagram(std::vector<Quad> crossings, int free_loops, int basepoint_arc,
                     std::string name, const std::vector<int>& forced_negative) {
  if (free_loops < 0) throw Error(ErrorKind::InvalidArgument, "negative loop count");
  int max_label = 0;
  for (const auto& q : crossings) {
    for (int a : q) {
      if (a <= 0) throw Error(ErrorKind::MalformedToken, "arc labels must be positive");
      max_label = std::max(max_label, a);
    }
  }
  std::vector<int> count(static_cast<std::size_t>(max_label) + 1, 0);
  for (const auto& q : crossings) {
    for (int a : q) ++count[a];
  }
  for (int a = 1; a <= max_label; ++a) {
    if (count[a] != 2) {
      throw Error(ErrorKind::ArcCountViolation, "arc " + std::to_string(a) + " appears " +
                                                    std::to_string(count[a]) +
                                                    " times (expected exactly 2)");
    }
  }
  if (crossings.empty() && free_loops == 0) {
    throw Error(ErrorKind::InvalidArgument, "a diagram needs at least one component");
  }

  Diagram d;
  d.arc_count = max_label;
  d.free_loops = free_loops;
  const Orientation orient = solve_orientation(crossings, max_label, forced_negative);
  check_planar(crossings, max_label);
  d.crossings = std::move(crossings);
  d.signs.resize(d.crossings.size());
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    d.signs[c] = orient.over_backward[c] ? -1 : 1;
  }
  d.basepoint_arc = basepoint_arc == 0 ? 1 : basepoint_arc;
  if (d.basepoint_arc < 1 || d.basepoint_arc > d.total_arcs()) {
    throw Error(ErrorKind::InvalidBasepoint,
                "basepoint arc " + std::to_string(d.basepoint_arc) + " is not an arc label");
  }
  d.name = name.empty() ? canonical_hash(d) : std::move(name);
  return d;
}

Diagram parse_pd(std::string_view raw) {
  std::string text = strip_comments(raw);
  std::string_view body = trim(text);
  std::string name;
  if (const auto colon = body.find(':'); colon != std::string_view::npos) {
    const auto head = body.substr(0, colon);
    if (head.find('[') == std::string_view::npos) {
      name = std::string(trim(head));
      body = trim(body.substr(colon + 1));
    }
  }
  if (body.size() >= 3 && body.substr(0, 3) == "PD[") {
    if (body.back() != ']') malformed(body);
    body = trim(body.substr(3, body.size() - 4));
  }

  std::vector<Quad> crossings;
  std::optional<int> loops;
  std::optional<int> basepoint;
  std::vector<int> forced;
  std::size_t pos = 0;
  auto skip_separators = [&] {
    while (pos < body.size() &&
           (std::isspace(static_cast<unsigned char>(body[pos])) || body[pos] == ',')) {
      ++pos;
    }
  };
  while (true) {
    skip_separators();
    if (pos >= body.size()) break;
    const std::size_t start = pos;
    while (pos < body.size() && std::isalpha(static_cast<unsigned char>(body[pos]))) ++pos;
    const std::string_view tag = body.substr(start, pos - start);
    if (tag.empty() || pos >= body.size() || body[pos] != '[') malformed(body.substr(start));
    ++pos;
    std::vector<int> values;
    while (true) {
      while (pos < body.size() && std::isspace(static_cast<unsigned char>(body[pos]))) ++pos;
      int v = 0;
      const auto [ptr, ec] = std::from_chars(body.data() + pos, body.data() + body.size(), v);
      if (ec != std::errc()) malformed(body.substr(start));
      values.push_back(v);
      pos = static_cast<std::size_t>(ptr - body.data());
      while (pos < body.size() && std::isspace(static_cast<unsigned char>(body[pos]))) ++pos;
      if (pos < body.size() && body[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < body.size() && body[pos] == ']') {
        ++pos;
        break;
      }
      malformed(body.substr(start));
    }
    if (tag == "X" && values.size() == 4) {
      crossings.push_back({values[0], values[1], values[2], values[3]});
    } else if (tag == "BP" && values.size() == 1 && !basepoint) {
      basepoint = values[0];
    } else if (tag == "O" && values.size() == 1 && !loops && values[0] >= 0) {
      loops = values[0];
    } else if (tag == "OV" && values.size() == 1) {
      forced.push_back(values[0] - 1);
    } else {
      malformed(body.substr(start));
    }
  }
  const int free_loops = loops.value_or(crossings.empty() ? 1 : 0);
  const int bp = basepoint.value_or(0);
  if (basepoint && bp < 1) throw Error(ErrorKind::InvalidBasepoint, "basepoint must be positive");
  return make_diagram(std::move(crossings), free_loops, bp, std::move(name), forced);
}

std::string serialize(const Diagram& d) {
  std::ostringstream out;
  if (!d.name.empty()) out << d.name << ": ";
  for (const auto& q : d.crossings) {
    out << "X[" << q[0] << ',' << q[1] << ',' << q[2] << ',' << q[3] << "] ";
  }
  if (d.free_loops > 0 || d.crossings.empty()) out << "O[" << d.free_loops << "] ";
  // over-only components keep their orientation through an explicit hint
  const Orientation orient = solve_orientation(d.crossings, d.arc_count, {});
  for (int root : orient.free_roots) {
    if (d.signs[root] < 0) out << "OV[" << root + 1 << "] ";
  }
  out << "BP[" << d.basepoint_arc << "]";
  return out.str();
}

std::vector<int> crossing_signs(const Diagram& d) { return d.signs; }

Diagram mirror(const Diagram& d) {
  std::vector<Quad> quads;
  quads.reserve(d.crossings.size());
  std::vector<int> forced;
  for (int c = 0; c < d.crossing_count(); ++c) {
    const Quad& q = d.crossings[c];
    // the old over-strand becomes the under-strand; start at its incoming arc
    if (d.signs[c] > 0) {
      quads.push_back({q[3], q[0], q[1], q[2]});
      forced.push_back(c);
    } else {
      quads.push_back({q[1], q[2], q[3], q[0]});
    }
  }
  return make_diagram(std::move(quads), d.free_loops, d.basepoint_arc, mirror_name(d.name),
                      forced);
}

Diagram resolve_crossing(const Diagram& d, int index, int smoothing) {
  if (index < 0 || index >= d.crossing_count() || (smoothing != 0 && smoothing != 1)) {
    throw Error(ErrorKind::InvalidArgument, "invalid crossing/smoothing");
  }
  const int total = d.total_arcs();
  std::vector<int> parent(static_cast<std::size_t>(total) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const Quad& r = d.crossings[index];
  if (smoothing == 0) {
    parent[find(r[0])] = find(r[1]);
    parent[find(r[2])] = find(r[3]);
  } else {
    parent[find(r[0])] = find(r[3]);
    parent[find(r[1])] = find(r[2]);
  }
  // new label for each class: ordered by least old label
  std::map<int, int> class_min;
  for (int a = 1; a <= total; ++a) {
    auto [it, inserted] = class_min.emplace(find(a), a);
    if (!inserted) it->second = std::min(it->second, a);
  }

  // Keep the remaining crossings, then orient each strand of the new diagram by
  // walking it, starting along the old direction of its least arc.
  std::vector<Quad> kept;
  for (int c = 0; c < d.crossing_count(); ++c) {
    if (c != index) kept.push_back(d.crossings[c]);
  }
  const int m = static_cast<int>(kept.size());
  std::vector<std::vector<ArcEnd>> class_ends(static_cast<std::size_t>(total) + 1);
  for (int c = 0; c < m; ++c) {
    for (int s = 0; s < 4; ++s) class_ends[find(kept[c][s])].push_back({c, s});
  }
  const auto old_ends = oriented_arc_ends(d);
  auto old_crossing = [&](int c) { return c < index ? c : c + 1; };

  std::vector<std::array<int, 4>> enters(m, {-1, -1, -1, -1});
  std::vector<char> class_done(static_cast<std::size_t>(total) + 1, 0);
  int loops = 0;
  std::vector<int> loop_classes;
  for (const auto& [root, least] : class_min) {
    if (class_done[root]) continue;
    const auto& ce = class_ends[root];
    if (ce.empty()) {
      class_done[root] = 1;
      ++loops;
      loop_classes.push_back(root);
      continue;
    }
    // preferred start: the crossing end the least old arc runs into
    ArcEnd start = ce[0];
    if (least <= d.arc_count) {
      const ArcEnd head = old_ends[least][1];
      for (const ArcEnd& e : ce) {
        if (old_crossing(e.crossing) == head.crossing && e.slot == head.slot) start = e;
      }
      if (!(old_crossing(start.crossing) == head.crossing && start.slot == head.slot)) {
        // head lies on the removed crossing; then the tail end leaves a kept crossing
        const ArcEnd tail = old_ends[least][0];
        for (const ArcEnd& e : ce) {
          if (old_crossing(e.crossing) == tail.crossing && e.slot == tail.slot) {
            start = (ce[0] == e) ? ce[1] : ce[0];
          }
        }
      }
    }
    // walk: enter at `cur`, leave through the opposite slot, follow its class
    ArcEnd cur = start;
    while (enters[cur.crossing][cur.slot] < 0) {
      enters[cur.crossing][cur.slot] = 1;
      const int out_slot = (cur.slot + 2) % 4;
      enters[cur.crossing][out_slot] = 0;
      const int cls = find(kept[cur.crossing][out_slot]);
      class_done[cls] = 1;
      const auto& ends = class_ends[cls];
      const ArcEnd from{cur.crossing, out_slot};
      cur = (ends[0] == from) ? ends[1] : ends[0];
    }
    class_done[root] = 1;
  }

  std::map<int, int> relabel;  // class root -> new label
  {
    std::vector<std::pair<int, int>> order;  // (least old label, root)
    for (const auto& [root, least] : class_min) {
      if (!class_ends[root].empty()) order.push_back({least, root});
    }
    std::sort(order.begin(), order.end());
    int next = 1;
    for (const auto& [least, root] : order) relabel[root] = next++;
    std::vector<std::pair<int, int>> lorder;
    for (int root : loop_classes) lorder.push_back({class_min[root], root});
    std::sort(lorder.begin(), lorder.end());
    for (const auto& [least, root] : lorder) relabel[root] = next++;
  }

  std::vector<Quad> quads;
  std::vector<int> forced;
  for (int c = 0; c < m; ++c) {
    Quad q;
    for (int s = 0; s < 4; ++s) q[s] = relabel[find(kept[c][s])];
    const int under_in = enters[c][0] == 1 ? 0 : 2;
    if (under_in == 2) q = {q[2], q[3], q[0], q[1]};
    const int over_in = enters[c][1] == 1 ? 1 : 3;
    // after rotating by two the over slots swap roles
    const bool over_backward = (under_in == 0) ? (over_in == 1) : (over_in == 3);
    if (over_backward) forced.push_back(c);
    quads.push_back(q);
  }
  const int bp = relabel[find(d.basepoint_arc)];
  return make_diagram(std::move(quads), loops, bp,
                      d.name + "|" + std::to_string(index + 1) + ":" + std::to_string(smoothing),
                      forced);
}

Diagram relabel_arcs(const Diagram& d, const std::vector<int>& perm) {
  const int total = d.total_arcs();
  if (static_cast<int>(perm.size()) != total + 1) {
    throw Error(ErrorKind::InvalidArgument, "relabeling has wrong size");
  }
  std::vector<char> hit(static_cast<std::size_t>(total) + 1, 0);
  for (int a = 1; a <= total; ++a) {
    const int b = perm[a];
    if (b < 1 || b > total || hit[b] || ((a <= d.arc_count) != (b <= d.arc_count))) {
      throw Error(ErrorKind::InvalidArgument, "relabeling is not a valid bijection");
    }
    hit[b] = 1;
  }
  std::vector<Quad> quads = d.crossings;
  for (auto& q : quads) {
    for (int& a : q) a = perm[a];
  }
  return make_diagram(std::move(quads), d.free_loops, perm[d.basepoint_arc], d.name,
                      negative_crossings(d));
}

Diagram permute_crossings(const Diagram& d, const std::vector<int>& order) {
  const int n = d.crossing_count();
  if (static_cast<int>(order.size()) != n) {
    throw Error(ErrorKind::InvalidArgument, "crossing order has wrong size");
  }
  std::vector<Quad> quads;
  std::vector<int> forced;
  for (int j = 0; j < n; ++j) {
    quads.push_back(d.crossings.at(order[j]));
    if (d.signs[order[j]] < 0) forced.push_back(j);
  }
  return make_diagram(std::move(quads), d.free_loops, d.basepoint_arc, d.name, forced);
}

Diagram with_basepoint(const Diagram& d, int arc) {
  if (arc < 1 || arc > d.total_arcs()) {
    throw Error(ErrorKind::InvalidBasepoint, "basepoint arc out of range");
  }
  Diagram out = d;
  out.basepoint_arc = arc;
  return out;
}

namespace {

struct PieceForm {
  std::vector<int> order;                // crossings in visiting order
  std::vector<std::pair<int, int>> arcs;  // (old label, local label)
  std::string text;
};

// Breadth-first walk from `start`: arcs are numbered when their crossing is
// visited, neighbours are queued in slot order.
PieceForm walk(const Diagram& d, const std::vector<std::vector<int>>& touching, int start) {
  PieceForm f;
  std::vector<int> local(static_cast<std::size_t>(d.arc_count) + 1, 0);
  std::vector<char> seen(d.crossings.size(), 0);
  std::vector<int> queue{start};
  seen[start] = 1;
  int next = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int c = queue[head];
    f.order.push_back(c);
    for (int a : d.crossings[c]) {
      if (local[a] == 0) {
        local[a] = next++;
        f.arcs.push_back({a, local[a]});
      }
    }
    for (int a : d.crossings[c]) {
      for (int o : touching[a]) {
        if (!seen[o]) {
          seen[o] = 1;
          queue.push_back(o);
        }
      }
    }
  }
  std::ostringstream out;
  for (int c : f.order) {
    const Quad& q = d.crossings[c];
    out << "X[" << local[q[0]] << ',' << local[q[1]] << ',' << local[q[2]] << ','
        << local[q[3]] << ']' << (d.signs[c] > 0 ? '+' : '-');
  }
  if (d.basepoint_arc <= d.arc_count && local[d.basepoint_arc]) {
    out << "*" << local[d.basepoint_arc];
  }
  f.text = out.str();
  return f;
}

}  // namespace

std::string canonical_form(const Diagram& d) {
  std::vector<std::vector<int>> touching(static_cast<std::size_t>(d.arc_count) + 1);
  for (int c = 0; c < d.crossing_count(); ++c) {
    for (int a : d.crossings[c]) touching[a].push_back(c);
  }
  std::vector<PieceForm> pieces;
  std::vector<char> done(d.crossings.size(), 0);
  for (int c = 0; c < d.crossing_count(); ++c) {
    if (done[c]) continue;
    PieceForm best = walk(d, touching, c);
    for (int x : best.order) done[x] = 1;
    for (int s : std::vector<int>(best.order)) {
      PieceForm f = walk(d, touching, s);
      if (f.text < best.text) best = std::move(f);
    }
    pieces.push_back(std::move(best));
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const PieceForm& a, const PieceForm& b) { return a.text < b.text; });
  std::vector<int> label(static_cast<std::size_t>(d.total_arcs()) + 1, 0);
  int offset = 0;
  std::ostringstream out;
  for (const PieceForm& f : pieces) {
    for (const auto& [a, l] : f.arcs) label[a] = offset + l;
    for (int c : f.order) {
      const Quad& q = d.crossings[c];
      out << "X[" << label[q[0]] << ',' << label[q[1]] << ',' << label[q[2]] << ','
          << label[q[3]] << ']' << (d.signs[c] > 0 ? '+' : '-');
    }
    offset += static_cast<int>(f.arcs.size());
  }
  // free loops are interchangeable
  const int bp = d.basepoint_arc > d.arc_count ? d.arc_count + 1 : label[d.basepoint_arc];
  out << "O[" << d.free_loops << "]BP[" << bp << ']';
  return out.str();
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  static constexpr char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::string canonical_hash(const Diagram& d) { return fnv1a_hex(canonical_form(d)); }

}  // namespace oddkh
