#include "oddkh/complex.hpp"

#include <algorithm>

#include "oddkh/error.hpp"

namespace oddkh {

const char* to_string(Coefficients c) {
  switch (c) {
    case Coefficients::Z: return "z";
    case Coefficients::Q: return "q";
    case Coefficients::F2: return "f2";
  }
  return "?";
}

Coefficients parse_coefficients(const std::string& s) {
  if (s == "z" || s == "Z") return Coefficients::Z;
  if (s == "q" || s == "Q") return Coefficients::Q;
  if (s == "f2" || s == "F2") return Coefficients::F2;
  throw Error(ErrorKind::InvalidArgument, "unknown coefficients '" + s + "'");
}

std::map<Bidegree, std::vector<int>> BigradedComplex::blocks() const {
  std::map<Bidegree, std::vector<int>> out;
  for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
    out[{gens[g].h, gens[g].q}].push_back(g);
  }
  return out;
}

BigradedComplex assemble(const Diagram& d, const SignAssignment& sigma, const Decoration& deco) {
  const int n = d.crossing_count();
  if (sigma.n != n) throw Error(ErrorKind::InvalidArgument, "assignment is for another cube");
  const auto res = resolve_all(d);
  BigradedComplex c;
  c.name = d.name;
  c.crossings = n;
  c.n_plus = d.n_plus();
  c.n_minus = d.n_minus();
  c.vertex_offset.resize(res.size() + 1, 0);
  for (std::size_t m = 0; m < res.size(); ++m) {
    c.vertex_offset[m + 1] = c.vertex_offset[m] + (std::size_t{1} << (res[m].circle_count() - 1));
  }
  c.gens.reserve(c.vertex_offset.back());
  for (std::size_t m = 0; m < res.size(); ++m) {
    const int k = res[m].circle_count();
    const int weight = __builtin_popcount(static_cast<Vertex>(m));
    for (Mask mono : basis_monomials(k, res[m].pointed_circle)) {
      GradedGenerator g;
      g.vertex = static_cast<Vertex>(m);
      g.monomial = mono;
      g.h = -weight + c.n_minus;
      const int deg_p = (k - 1) - 2 * __builtin_popcount(mono);
      g.delta2 = -deg_p - weight + c.n_plus;
      g.q = 2 * g.h - g.delta2;
      c.gens.push_back(g);
    }
  }
  const int total = static_cast<int>(c.gens.size());
  c.d = SparseMatrix(total, total);
  for (Vertex m = 0; m < static_cast<Vertex>(res.size()); ++m) {
    for (int i = 0; i < n; ++i) {
      if (!(m >> i & 1)) continue;
      const Vertex to = m & ~(Vertex{1} << i);
      const CubeEdge e = cube_edge(d, res[m], res[to], deco);
      const SparseColumns cols = edge_map(res[m], res[to], e);
      const int s = sigma.at(m, i);
      for (std::size_t src = 0; src < cols.size(); ++src) {
        auto& column = c.d.col[c.vertex_offset[m] + src];
        for (const auto& [tgt, coef] : cols[src]) {
          column.push_back({static_cast<int>(c.vertex_offset[to] + tgt), s * coef});
        }
      }
    }
  }
  c.d.canonicalize();
  return c;
}

BigradedComplex assemble(const Diagram& d, Flavor flavor) {
  return assemble(d, solve(d, flavor));
}

bool square_zero(const BigradedComplex& c) { return (c.d * c.d).is_zero(); }

SparseMatrix block_matrix(const BigradedComplex& c, const std::vector<int>& from,
                          const std::vector<int>& to) {
  std::vector<int> row_of(c.gens.size(), -1);
  for (std::size_t r = 0; r < to.size(); ++r) row_of[to[r]] = static_cast<int>(r);
  SparseMatrix out(static_cast<int>(to.size()), static_cast<int>(from.size()));
  for (std::size_t j = 0; j < from.size(); ++j) {
    for (const auto& [r, v] : c.d.col[from[j]]) {
      if (row_of[r] >= 0) out.col[j].push_back({row_of[r], v});
    }
  }
  out.canonicalize();
  return out;
}

int HomologySummary::total_rank() const {
  int total = 0;
  for (const auto& [b, e] : table) total += e.rank;
  return total;
}

std::map<Bidegree, int> HomologySummary::ranks() const {
  std::map<Bidegree, int> out;
  for (const auto& [b, e] : table) {
    if (e.rank) out[b] = e.rank;
  }
  return out;
}

HomologySummary homology(const BigradedComplex& c, Coefficients coefficients) {
  const SparseMatrix dd = c.d * c.d;
  if (!(coefficients == Coefficients::F2 ? dd.mod2() : dd).is_zero()) {
    throw Error(ErrorKind::DifferentialNotSquareZero, "d o d is nonzero");
  }
  const auto blocks = c.blocks();
  for (int j = 0; j < static_cast<int>(c.gens.size()); ++j) {
    for (const auto& [r, v] : c.d.col[j]) {
      if (c.gens[r].h != c.gens[j].h + 1 || c.gens[r].q != c.gens[j].q) {
        throw Error(ErrorKind::InvalidArgument, "differential is not bihomogeneous");
      }
    }
  }
  // d out of each block, computed once
  struct Out {
    std::size_t rank = 0;
    std::vector<BigInt> torsion;
  };
  std::map<Bidegree, Out> outgoing;
  static const std::vector<int> empty;
  for (const auto& [b, gens] : blocks) {
    const auto it = blocks.find({b.h + 1, b.q});
    const auto& target = it == blocks.end() ? empty : it->second;
    const SparseMatrix m = block_matrix(c, gens, target);
    Out o;
    if (coefficients == Coefficients::F2) {
      o.rank = rank_f2(m);
    } else {
      SmithResult s = smith_normal_form(m);
      o.rank = s.rank;
      if (coefficients == Coefficients::Z) o.torsion = std::move(s.torsion);
    }
    outgoing[b] = std::move(o);
  }
  HomologySummary out;
  out.coefficients = coefficients;
  for (const auto& [b, gens] : blocks) {
    HomologyEntry e;
    std::size_t rank_in = 0;
    if (const auto it = outgoing.find({b.h - 1, b.q}); it != outgoing.end()) {
      rank_in = it->second.rank;
      e.torsion = it->second.torsion;
    }
    e.rank = static_cast<int>(gens.size() - outgoing[b].rank - rank_in);
    if (e.rank != 0 || !e.torsion.empty()) out.table[b] = e;
  }
  return out;
}

std::map<Bidegree, int> f2_dimensions_from_integral(const HomologySummary& z) {
  std::map<Bidegree, int> out;
  auto even_count = [](const HomologyEntry& e) {
    int n = 0;
    for (const auto& t : e.torsion) n += (t % 2 == 0);
    return n;
  };
  for (const auto& [b, e] : z.table) {
    out[b] += e.rank + even_count(e);
    // Tor(H^{h+1}, F2) lands in degree h
    const int t = even_count(e);
    if (t) out[{b.h - 1, b.q}] += t;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

LaurentPoly euler_characteristic(const BigradedComplex& c) {
  LaurentPoly p;
  for (const auto& g : c.gens) p.add(g.q, (g.h % 2 == 0) ? 1 : -1);
  return p;
}

BigradedComplex shift(const BigradedComplex& c, int a, int b) {
  BigradedComplex out = c;
  out.shift_h += a;
  out.shift_delta2 += 2 * b;
  for (auto& g : out.gens) {
    g.h -= a;
    g.delta2 -= 2 * b;
    g.q = 2 * g.h - g.delta2;
  }
  return out;
}

}  // namespace oddkh
