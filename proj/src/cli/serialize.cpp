#include "oddkh/serialize.hpp"

#include <sstream>

#include "oddkh/edge_assignment.hpp"
#include "oddkh/oracle.hpp"

namespace oddkh {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

Json big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

const char* kind_name(EdgeKind k) { return k == EdgeKind::Merge ? "merge" : "split"; }

}  // namespace

Json diagram_json(const Diagram& d) {
  Json j;
  j["name"] = d.name;
  j["pd"] = serialize(d);
  j["hash"] = canonical_hash(d);
  j["crossings"] = d.crossing_count();
  j["components"] = d.component_count();
  return j;
}

Json normalization_json(const BigradedComplex& c) {
  Json j;
  j["unknot"] = {{"h", 0}, {"q", 0}};
  j["q_offset"] = c.q_offset;
  j["n_plus"] = c.n_plus;
  j["n_minus"] = c.n_minus;
  j["shift_h"] = c.shift_h;
  j["shift_delta2"] = c.shift_delta2;
  return j;
}

Json laurent_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"q", e}, {"coefficient", c}});
  return {{"terms", terms}, {"text", p.to_string("q")}};
}

Json homology_json(const Diagram& d, const BigradedComplex& c, const HomologySummary& h) {
  Json j;
  j["diagram"] = diagram_json(d);
  j["normalization"] = normalization_json(c);
  j["coefficients"] = to_string(h.coefficients);
  Json table = Json::array();
  for (const auto& [b, e] : h.table) {
    Json t = Json::array();
    for (const BigInt& x : e.torsion) t.push_back(big(x));
    table.push_back({{"h", b.h}, {"q", b.q}, {"rank", e.rank}, {"torsion", t}});
  }
  j["table"] = table;
  j["total_rank"] = h.total_rank();
  j["euler"] = laurent_json(euler_characteristic(c));
  return j;
}

std::string homology_csv(const Diagram& d, const HomologySummary& h, bool header) {
  std::ostringstream out;
  if (header) out << "diagram,h,q,rank,torsion\n";
  for (const auto& [b, e] : h.table) {
    out << csv_field(d.name) << ',' << b.h << ',' << b.q << ',' << e.rank << ',';
    for (std::size_t k = 0; k < e.torsion.size(); ++k) {
      out << (k ? ";" : "") << e.torsion[k].str();
    }
    out << '\n';
  }
  return out.str();
}

Json page_json(const SSPage& page) {
  Json entries = Json::array();
  for (const auto& [key, rank] : page.ranks) {
    entries.push_back({{"p", key.p}, {"degree", key.degree}, {"q", key.weight}, {"rank", rank}});
  }
  return {{"r", page.r}, {"entries", entries}, {"dr_nonzero", page.dr_nonzero()}};
}

Json pages_json(const Diagram& d, Field field, const SpectralResult& r) {
  Json j;
  j["diagram"] = diagram_json(d);
  j["field"] = to_string(field);
  j["degeneration_page"] = r.degeneration_page;
  Json pages = Json::array();
  for (const SSPage& p : r.pages) pages.push_back(page_json(p));
  j["pages"] = pages;
  return j;
}

std::string pages_csv(const Diagram& d, const SpectralResult& r, bool header) {
  std::ostringstream out;
  if (header) out << "diagram,r,p,degree,q,rank\n";
  for (const SSPage& p : r.pages) {
    for (const auto& [key, rank] : p.ranks) {
      out << csv_field(d.name) << ',' << p.r << ',' << key.p << ',' << key.degree << ','
          << key.weight << ',' << rank << '\n';
    }
  }
  return out.str();
}

Json validate_json(const Diagram& d) {
  Json j;
  j["diagram"] = diagram_json(d);
  j["valid"] = true;
  j["canonical"] = canonical_form(d);
  j["writhe"] = d.writhe();
  j["n_plus"] = d.n_plus();
  j["n_minus"] = d.n_minus();
  j["basepoint"] = d.basepoint_arc;
  return j;
}

std::string validate_csv(const Diagram& d, bool header) {
  std::ostringstream out;
  if (header) out << "diagram,crossings,components,writhe,hash\n";
  out << csv_field(d.name) << ',' << d.crossing_count() << ',' << d.component_count() << ','
      << d.writhe() << ',' << canonical_hash(d) << '\n';
  return out.str();
}

Json euler_json(const Diagram& d, const LaurentPoly& chi, const LaurentPoly& jones_mirror,
                std::int64_t det) {
  Json j;
  j["diagram"] = diagram_json(d);
  j["euler"] = laurent_json(chi);
  j["jones_mirror"] = laurent_json(jones_mirror);
  j["determinant"] = det;
  j["match"] = chi == jones_mirror;
  return j;
}

std::string euler_csv(const Diagram& d, const LaurentPoly& chi, bool header) {
  std::ostringstream out;
  if (header) out << "diagram,q,coefficient\n";
  for (const auto& [e, c] : chi.terms()) out << csv_field(d.name) << ',' << e << ',' << c << '\n';
  return out.str();
}

Json skein_json(const Diagram& d, const SkeinReport& r) {
  Json j;
  j["diagram"] = diagram_json(d);
  j["crossing"] = r.crossing + 1;
  j["block_structure"] = r.block_structure;
  j["anti_chain"] = r.anti_chain;
  j["cone_equal"] = r.cone_equal;
  Json ranks = Json::array();
  for (const SkeinRanks& s : r.ranks) {
    ranks.push_back({{"field", to_string(s.field)},
                     {"total", s.total},
                     {"part0", s.part0},
                     {"part1", s.part1},
                     {"resolved0", s.resolved0},
                     {"resolved1", s.resolved1},
                     {"les_exact", s.les_exact},
                     {"inequality", s.inequality}});
  }
  j["ranks"] = ranks;
  j["ok"] = r.ok();
  return j;
}

std::string skein_csv(const Diagram& d, const SkeinReport& r, bool header) {
  std::ostringstream out;
  if (header) {
    out << "diagram,crossing,field,total,part0,part1,resolved0,resolved1,les_exact,inequality\n";
  }
  for (const SkeinRanks& s : r.ranks) {
    out << csv_field(d.name) << ',' << r.crossing + 1 << ',' << to_string(s.field) << ','
        << s.total << ',' << s.part0 << ',' << s.part1 << ',' << s.resolved0 << ','
        << s.resolved1 << ',' << s.les_exact << ',' << s.inequality << '\n';
  }
  return out.str();
}

Json cube_json(const Diagram& d) {
  const auto res = resolve_all(d);
  Json vertices = Json::array();
  for (const Resolution& r : res) {
    Json circles = Json::array();
    for (const Circle& c : r.circles) circles.push_back({{"label", c.label}, {"arcs", c.arcs}});
    vertices.push_back(
        {{"vertex", r.vertex}, {"circles", circles}, {"pointed", r.pointed_circle}});
  }
  Json edges = Json::array();
  for (Vertex m = 0; m < static_cast<Vertex>(res.size()); ++m) {
    for (int i = 0; i < d.crossing_count(); ++i) {
      if (!(m >> i & 1)) continue;
      const CubeEdge e = cube_edge(d, res[m], res[m & ~(Vertex{1} << i)]);
      edges.push_back({{"from", e.from},
                       {"to", e.to},
                       {"crossing", e.crossing + 1},
                       {"kind", kind_name(e.kind)},
                       {"a", e.a},
                       {"b", e.b},
                       {"c", e.c},
                       {"sign", e.sgn}});
    }
  }
  Json faces = Json::array();
  for (const CubeFace& f : all_faces(d, res)) {
    faces.push_back({{"m", f.m}, {"i", f.i + 1}, {"j", f.j + 1}, {"class", to_string(f.cls)}});
  }
  Json j;
  j["diagram"] = diagram_json(d);
  j["vertices"] = vertices;
  j["edges"] = edges;
  j["faces"] = faces;
  return j;
}

Json error_json(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace oddkh
