#include "oddkh/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

#include "oddkh/complex.hpp"
#include "oddkh/cone.hpp"
#include "oddkh/corpus.hpp"
#include "oddkh/error.hpp"
#include "oddkh/oracle.hpp"
#include "oddkh/spectral.hpp"

namespace oddkh {

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail.str("");
      detail << "first failure: " << what;
    }
  }
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::map<Bidegree, int> e2_table(const BigradedComplex& c) {
  const SpectralResult r = pages(filtered_from(c, Field::F2), 2);
  std::map<Bidegree, int> out;
  for (const auto& [key, rank] : r.pages.at(1).ranks) out[{key.degree, key.weight}] += rank;
  return out;
}

void c1_square_zero(Outcome& o, std::uint64_t seed) {
  const auto t0 = Clock::now();
  std::vector<Diagram> all = random_diagrams(100, 8, seed);
  for (auto& e : standard_corpus()) all.push_back(e.diagram);
  int checked = 0;
  for (const Diagram& d : all) {
    for (Flavor f : {Flavor::X, Flavor::Y}) {
      o.require(square_zero(assemble(d, f)), "d^2 != 0 for " + d.name);
    }
    ++checked;
  }
  const double t = since(t0);
  o.require(t < 10.0, "took " + std::to_string(t) + "s, limit 10s");
  if (o.pass) o.detail << checked << " diagrams, both flavors, d^2 = 0 over Z";
}

void c2_rank_determinant(Outcome& o, std::uint64_t) {
  const std::map<std::string, int> expected{{"unknot", 1}, {"3_1", 3}, {"4_1", 5},
                                           {"5_1", 5},    {"5_2", 7}, {"6_1", 9}};
  std::ostringstream ranks;
  for (const auto& e : alternating_set()) {
    const auto t0 = Clock::now();
    const int rank = homology(assemble(e.diagram), Coefficients::Q).total_rank();
    const std::int64_t det = determinant(e.diagram);
    const double t = since(t0);
    o.require(rank == det, e.diagram.name + ": rank " + std::to_string(rank) + " != det " +
                               std::to_string(det));
    o.require(rank == expected.at(e.diagram.name),
              e.diagram.name + ": rank " + std::to_string(rank) + " != expected");
    o.require(t < 1.0, e.diagram.name + " took " + std::to_string(t) + "s");
    ranks << " " << e.diagram.name << "=" << rank;
  }
  o.require(alternating_set().size() == expected.size(), "alternating set incomplete");
  if (o.pass) o.detail << "Q-rank = det:" << ranks.str();
}

void c3_invariance(Outcome& o, std::uint64_t seed) {
  std::map<std::string, HomologySummary> by_knot;
  std::map<std::string, int> diagrams;
  int variants = 0;
  for (const auto& e : standard_corpus()) {
    const Diagram& d = e.diagram;
    const HomologySummary ref = homology(assemble(d), Coefficients::Z);
    for (int arc = 1; arc <= d.total_arcs(); ++arc) {
      const HomologySummary h = homology(assemble(with_basepoint(d, arc)), Coefficients::Z);
      o.require(h.table == ref.table, d.name + ": basepoint " + std::to_string(arc));
      ++variants;
    }
    for (Flavor f : {Flavor::X, Flavor::Y}) {
      for (std::uint64_t s = 0; s < 3; ++s) {
        const SignAssignment sigma = solve(d, f, seed * 7919 + s);
        const HomologySummary h = homology(assemble(d, sigma), Coefficients::Z);
        o.require(h.table == ref.table, d.name + ": flavor/free-variable choice");
        ++variants;
      }
    }
    const auto [it, fresh] = by_knot.emplace(e.knot, ref);
    if (!fresh) o.require(it->second.table == ref.table, d.name + " differs from its class");
    ++diagrams[e.knot];
  }
  o.require(diagrams["0_1"] >= 3, "fewer than 3 unknot diagrams");
  o.require(diagrams["3_1r"] >= 3, "fewer than 3 trefoil diagrams");
  if (o.pass) {
    o.detail << variants << " variants; " << diagrams["0_1"] << " unknot and " << diagrams["3_1r"]
             << " trefoil diagrams agree";
  }
}

void c4_second_page(Outcome& o, std::uint64_t) {
  int count = 0;
  for (const auto& e : standard_corpus()) {
    const auto e2 = e2_table(assemble(e.diagram));
    const auto even = homology(even_f2_complex(e.diagram), Coefficients::F2).ranks();
    o.require(e2 == even, e.diagram.name + ": E2 differs from even F2 homology");
    ++count;
  }
  if (o.pass) o.detail << count << " diagrams, E2 = even F2 homology at every bidegree";
}

void c5_integral_lift(Outcome& o, std::uint64_t) {
  int torsion = 0;
  for (const auto& e : standard_corpus()) {
    const HomologySummary z = homology(assemble(e.diagram), Coefficients::Z);
    for (const auto& [b, entry] : z.table) torsion += static_cast<int>(entry.torsion.size());
    const auto even = homology(even_f2_complex(e.diagram), Coefficients::F2).ranks();
    o.require(f2_dimensions_from_integral(z) == even,
              e.diagram.name + ": universal coefficients disagree with F2 table");
  }
  if (o.pass) o.detail << "UCT over the corpus matches; " << torsion << " torsion summands seen";
}

void c6_spectral_engine(Outcome& o, std::uint64_t seed) {
  const auto t0 = Clock::now();
  int complexes = 0, longest = 0;
  for (Field field : {Field::F2, Field::Q}) {
    for (int t = 0; t < 200; ++t) {
      const FilteredComplex c = random_filtered_complex(seed * 100003 + t, field, 20, 5);
      const SpectralResult r = pages(c, 6);
      longest = std::max(longest, r.degeneration_page);
      const std::string tag = std::string(to_string(field)) + " #" + std::to_string(t);
      o.require(r.einfinity == einfinity_oracle(c), tag + ": E_inf differs from oracle");
      for (std::size_t k = 0; k + 1 < r.pages.size(); ++k) {
        for (const auto& [key, rank] : r.pages[k + 1].ranks) {
          const auto it = r.pages[k].ranks.find(key);
          o.require(it != r.pages[k].ranks.end() && it->second >= rank,
                    tag + ": rank grows at r=" + std::to_string(k + 2));
        }
      }
      o.require(r.pages.back().ranks == r.einfinity, tag + ": last page is not E_inf");
      ++complexes;
    }
  }
  const double t = since(t0);
  o.require(t < 5.0, "took " + std::to_string(t) + "s, limit 5s");
  if (o.pass) {
    o.detail << complexes << " complexes, E_inf = oracle, ranks monotone; longest degeneration E_"
             << longest;
  }
}

// Both routes of a face through the exterior-algebra maps themselves.
ExteriorElement apply_edge(const Resolution& from, const Resolution& to, const CubeEdge& e,
                           const ExteriorElement& x) {
  auto label = [](const Resolution& r, int idx) { return r.circles[idx].label; };
  if (e.kind == EdgeKind::Merge) {
    return merge_map(x, label(from, e.a), label(from, e.b), label(to, e.c));
  }
  const int tail = label(to, e.a), head = label(to, e.b);
  const int pointed = label(to, to.pointed_circle);
  return split_map(x, label(from, e.c), tail, head,
                   (pointed == tail || pointed == head) ? std::optional<int>(pointed)
                                                        : std::nullopt);
}

void c7_face_dichotomy(Outcome& o, std::uint64_t) {
  std::map<FaceClass, int> seen;
  for (const auto& e : standard_corpus()) {
    const Diagram& d = e.diagram;
    const auto res = resolve_all(d);
    const auto faces = all_faces(d, res);
    for (const CubeFace& f : faces) {
      const Resolution& m = res[f.m];
      const Resolution& k = res[f.k()];
      const Resolution& kp = res[f.k_prime()];
      const Resolution& n = res[f.n()];
      const CubeEdge mk = cube_edge(d, m, k), kn = cube_edge(d, k, n);
      const CubeEdge mkp = cube_edge(d, m, kp), kpn = cube_edge(d, kp, n);
      bool zero1 = true, zero2 = true, same = true, opposite = true;
      for (Mask mono : basis_monomials(m.circle_count(), m.pointed_circle)) {
        const ExteriorElement x = ExteriorElement::monomial(m.labels(), m.circles[m.pointed_circle].label, mono);
        const ExteriorElement r1 = apply_edge(k, n, kn, apply_edge(m, k, mk, x));
        const ExteriorElement r2 = apply_edge(kp, n, kpn, apply_edge(m, kp, mkp, x));
        zero1 = zero1 && r1.is_zero();
        zero2 = zero2 && r2.is_zero();
        same = same && r1 == r2;
        opposite = opposite && r1 == -r2;
      }
      const std::string where = d.name + " face m=" + std::to_string(f.m) + " (" +
                                std::to_string(f.i) + "," + std::to_string(f.j) + ")";
      ++seen[f.cls];
      if (zero1 && zero2) {
        o.require(f.cls == FaceClass::TypeX || f.cls == FaceClass::TypeY,
                  where + ": both routes vanish but class is " + to_string(f.cls));
      } else {
        o.require(!zero1 && !zero2, where + ": exactly one route vanishes");
        o.require((f.cls == FaceClass::Commutative && same && !opposite) ||
                      (f.cls == FaceClass::Anticommutative && opposite && !same),
                  where + ": routes do not match class " + to_string(f.cls));
      }
    }
    for (Flavor fl : {Flavor::X, Flavor::Y}) {
      try {
        const SignAssignment s = solve(faces, d.crossing_count(), fl);
        o.require(!violated_face(s, faces).has_value(), d.name + ": assignment violates a face");
      } catch (const Error& err) {
        o.require(false, d.name + ": " + err.what());
      }
    }
  }
  if (o.pass) {
    o.detail << "commutative " << seen[FaceClass::Commutative] << ", anticommutative "
             << seen[FaceClass::Anticommutative] << ", type X " << seen[FaceClass::TypeX]
             << ", type Y " << seen[FaceClass::TypeY] << "; both flavors solvable";
  }
}

void c8_exterior(Outcome& o, std::uint64_t) {
  int checked = 0;
  for (int k = 1; k <= 5; ++k) {
    std::vector<int> circles;
    for (int c = 1; c <= k; ++c) circles.push_back(c);
    const int fresh = k + 1;
    for (int p = 1; p <= k; ++p) {
      for (Mask mono : basis_monomials(k, p - 1)) {
        const ExteriorElement x = ExteriorElement::monomial(circles, p, mono);
        const ExteriorElement capped = cap_map(x, fresh);
        const std::string tag = "k=" + std::to_string(k) + " pointed " + std::to_string(p) +
                                " monomial " + std::to_string(mono);
        o.require(cup_map(capped, fresh).is_zero(), tag + ": cup o cap != 0");
        for (int b = 1; b <= k; ++b) {
          o.require(merge_map(capped, b, fresh, b) == x, tag + ": merge o cap != id");
          // c = b splits into the new circle (tail) and b (head)
          const ExteriorElement split = split_map(x, b, fresh, b, b == p ? std::optional<int>(b)
                                                                         : std::nullopt);
          o.require(cup_map(split, fresh) == x, tag + ": cup o split != id");
          o.require(merge_map(split, fresh, b, b).is_zero(), tag + ": merge o split != 0");
          ++checked;
        }
      }
    }
  }
  if (o.pass) {
    o.detail << checked << " cases, k <= 5: merge o cap = id, cup o split = id, "
             << "merge o split = 0, cup o cap = 0";
  }
}

void c9_skein(Outcome& o, std::uint64_t) {
  int checked = 0;
  for (const auto& e : standard_corpus()) {
    for (int i = 0; i < e.diagram.crossing_count(); ++i) {
      const SkeinReport r = skein_check(e.diagram, i);
      o.require(r.ok(), e.diagram.name + " crossing " + std::to_string(i));
      ++checked;
    }
  }
  if (o.pass) o.detail << checked << " (diagram, crossing) pairs: cone blocks exact, LES over Q and F2";
}

void c10_euler(Outcome& o, std::uint64_t) {
  int count = 0;
  for (const auto& e : standard_corpus()) {
    const LaurentPoly chi = euler_characteristic(assemble(e.diagram));
    const LaurentPoly jones = kauffman_bracket(mirror(e.diagram));
    o.require(chi == jones, e.diagram.name + ": chi " + chi.to_string("q") + " vs " +
                                jones.to_string("q"));
    ++count;
  }
  if (o.pass) o.detail << count << " diagrams: Euler characteristic = Jones of the mirror";
}

struct Entry {
  const char* name;
  std::function<void(Outcome&, std::uint64_t)> run;
};

const std::vector<Entry>& table() {
  static const std::vector<Entry> t{
      {"square-zero", c1_square_zero},   {"rank-determinant", c2_rank_determinant},
      {"invariance", c3_invariance},     {"second-page", c4_second_page},
      {"integral-lift", c5_integral_lift}, {"spectral-engine", c6_spectral_engine},
      {"face-dichotomy", c7_face_dichotomy}, {"exterior-identities", c8_exterior},
      {"skein-cone", c9_skein},          {"euler-jones", c10_euler},
  };
  return t;
}

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  if (id < 1 || id > kCriterionCount) throw Error(ErrorKind::InvalidArgument, "no such criterion");
  const Entry& e = table()[id - 1];
  CriterionResult r;
  r.id = id;
  r.name = e.name;
  Outcome o;
  const auto t0 = Clock::now();
  try {
    e.run(o, seed);
  } catch (const std::exception& err) {
    o.require(false, std::string("exception: ") + err.what());
  }
  r.seconds = since(t0);
  r.pass = o.pass;
  r.detail = o.detail.str();
  return r;
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, seed));
  return out;
}

std::string format_line(const CriterionResult& r) {
  char head[96];
  std::snprintf(head, sizeof head, "%s %2d %-20s (%.2fs) ", r.pass ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.seconds);
  return head + r.detail;
}

}  // namespace oddkh
