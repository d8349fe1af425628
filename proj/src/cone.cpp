#include "oddkh/cone.hpp"

#include <random>
#include <set>

#include "oddkh/error.hpp"

namespace oddkh {

namespace {

SparseMatrix reduce(const SparseMatrix& m, Ring ring) { return ring == Ring::F2 ? m.mod2() : m; }

bool zero_in(const SparseMatrix& m, Ring ring) { return reduce(m, ring).is_zero(); }

bool equal_in(const SparseMatrix& a, const SparseMatrix& b, Ring ring) {
  return zero_in(a - b, ring);
}

std::size_t field_rank(const SparseMatrix& m, Ring ring) {
  return ring == Ring::F2 ? rank_f2(m) : rank_q(m);
}

SparseMatrix zero(int r, int c) { return SparseMatrix(r, c); }

void expect_shape(const SparseMatrix& m, int rows, int cols, const char* what, int i) {
  if (m.rows != rows || m.cols != cols) {
    throw Error(ErrorKind::ShapeMismatch,
                std::string(what) + "_" + std::to_string(i) + " has shape " +
                    std::to_string(m.rows) + "x" + std::to_string(m.cols) + ", expected " +
                    std::to_string(rows) + "x" + std::to_string(cols));
  }
}

SparseMatrix lookup(const std::map<int, SparseMatrix>& maps, int i, int rows, int cols) {
  const auto it = maps.find(i);
  return it == maps.end() ? zero(rows, cols) : it->second;
}

// Submatrix of m with the given columns (sources) and rows (targets).
SparseMatrix extract(const SparseMatrix& m, const std::vector<int>& from,
                     const std::vector<int>& to) {
  std::vector<int> row_of(m.rows, -1);
  for (std::size_t r = 0; r < to.size(); ++r) row_of[to[r]] = static_cast<int>(r);
  SparseMatrix out(static_cast<int>(to.size()), static_cast<int>(from.size()));
  for (std::size_t j = 0; j < from.size(); ++j) {
    for (const auto& [r, v] : m.col[from[j]]) {
      if (row_of[r] >= 0) out.col[j].push_back({row_of[r], v});
    }
  }
  out.canonicalize();
  return out;
}

bool invertible(const SparseMatrix& q, Ring ring) {
  if (q.rows != q.cols) return false;
  if (ring == Ring::F2) return rank_f2(q) == static_cast<std::size_t>(q.rows);
  const SmithResult s = smith_normal_form(q);
  return s.rank == static_cast<std::size_t>(q.rows) && s.torsion.empty();
}

}  // namespace

const char* to_string(Ring r) { return r == Ring::F2 ? "f2" : "z"; }

SparseMatrix block(const std::vector<std::vector<SparseMatrix>>& blocks,
                   const std::vector<int>& heights, const std::vector<int>& widths) {
  int rows = 0, cols = 0;
  for (int h : heights) rows += h;
  for (int w : widths) cols += w;
  SparseMatrix out(rows, cols);
  int r0 = 0;
  for (std::size_t br = 0; br < heights.size(); ++br) {
    int c0 = 0;
    for (std::size_t bc = 0; bc < widths.size(); ++bc) {
      const SparseMatrix& b = blocks[br][bc];
      expect_shape(b, heights[br], widths[bc], "block", static_cast<int>(br * widths.size() + bc));
      for (int c = 0; c < b.cols; ++c) {
        for (const auto& [r, v] : b.col[c]) out.col[c0 + c].push_back({r0 + r, v});
      }
      c0 += widths[bc];
    }
    r0 += heights[br];
  }
  out.canonicalize();
  return out;
}

SparseMatrix cone(const SparseMatrix& d, const SparseMatrix& d_prime, const SparseMatrix& g,
                  Ring ring) {
  expect_shape(d, d.cols, d.cols, "d", 0);
  expect_shape(d_prime, d_prime.cols, d_prime.cols, "d'", 0);
  expect_shape(g, d_prime.rows, d.cols, "g", 0);
  if (!zero_in(g * d + d_prime * g, ring)) {
    throw Error(ErrorKind::NotAntiChain, "g d + d' g is nonzero");
  }
  return block({{d, zero(d.rows, d_prime.cols)}, {g, d_prime}}, {d.rows, d_prime.rows},
               {d.cols, d_prime.cols});
}

int induced_rank(const SparseMatrix& f, const SparseMatrix& d_a, const SparseMatrix& d_b,
                 Ring ring) {
  const SparseMatrix m =
      block({{f, d_b}, {d_a, zero(d_a.rows, d_b.cols)}}, {f.rows, d_a.rows}, {f.cols, d_b.cols});
  return static_cast<int>(field_rank(m, ring)) - static_cast<int>(field_rank(d_a, ring)) -
         static_cast<int>(field_rank(d_b, ring));
}

int homology_dimension(const SparseMatrix& d, Ring ring) {
  return d.cols - 2 * static_cast<int>(field_rank(d, ring));
}

int TriangleData::dimension(int i) const {
  const auto it = dim.find(i);
  return it == dim.end() ? 0 : it->second;
}
SparseMatrix TriangleData::get_d(int i) const { return lookup(d, i, dimension(i), dimension(i)); }
SparseMatrix TriangleData::get_g(int i) const { return lookup(g, i, dimension(i - 1), dimension(i)); }
SparseMatrix TriangleData::get_n(int i) const { return lookup(n, i, dimension(i - 2), dimension(i)); }
SparseMatrix TriangleData::get_k(int i) const { return lookup(k, i, dimension(i - 3), dimension(i)); }
SparseMatrix TriangleData::get_q(int i) const { return lookup(q, i, dimension(i - 3), dimension(i)); }

TriangleReport verify_triangle(const TriangleData& t) {
  for (const auto& [i, m] : t.d) expect_shape(m, t.dimension(i), t.dimension(i), "d", i);
  for (const auto& [i, m] : t.g) expect_shape(m, t.dimension(i - 1), t.dimension(i), "g", i);
  for (const auto& [i, m] : t.n) expect_shape(m, t.dimension(i - 2), t.dimension(i), "n", i);
  for (const auto& [i, m] : t.k) expect_shape(m, t.dimension(i - 3), t.dimension(i), "k", i);
  for (const auto& [i, m] : t.q) expect_shape(m, t.dimension(i - 3), t.dimension(i), "q", i);

  TriangleReport rep;
  const Ring ring = t.ring;
  auto fail = [&](const std::string& what, int i) {
    rep.holds = false;
    rep.failure = what + " at i=" + std::to_string(i);
    return rep;
  };
  auto in = [&](int a, int b) { return a >= t.lo && b <= t.hi; };

  for (int i = t.lo; i <= t.hi; ++i) {
    if (!zero_in(t.get_d(i) * t.get_d(i), ring)) return fail("d-square", i);
  }
  for (int i = t.lo; i <= t.hi; ++i) {
    if (in(i - 1, i) && !zero_in(t.get_g(i) * t.get_d(i) + t.get_d(i - 1) * t.get_g(i), ring)) {
      return fail("anti-chain", i);
    }
  }
  for (int i = t.lo; i <= t.hi; ++i) {
    if (!in(i - 2, i)) continue;
    const SparseMatrix e =
        t.get_g(i - 1) * t.get_g(i) + t.get_d(i - 2) * t.get_n(i) + t.get_n(i) * t.get_d(i);
    if (!zero_in(e, ring)) return fail("null-htpy", i);
  }
  for (int i = t.lo; i <= t.hi; ++i) {
    if (!in(i - 3, i)) continue;
    const SparseMatrix e = t.get_n(i - 1) * t.get_g(i) + t.get_g(i - 2) * t.get_n(i) +
                           t.get_d(i - 3) * t.get_k(i) + t.get_k(i) * t.get_d(i);
    if (!equal_in(e, t.get_q(i), ring)) return fail("q-iso", i);
    if (!invertible(reduce(t.get_q(i), ring), ring)) return fail("q-invertible", i);
  }

  // phi_i = (g_i ; n_i), psi_i = (n_{i-1}, g_{i-2})
  for (int i = t.lo; i <= t.hi; ++i) {
    if (!in(i - 2, i)) continue;
    rep.phi[i] = block({{t.get_g(i)}, {t.get_n(i)}}, {t.dimension(i - 1), t.dimension(i - 2)},
                       {t.dimension(i)});
  }
  for (int i = t.lo; i <= t.hi; ++i) {
    if (!in(i - 3, i - 1)) continue;
    rep.psi[i] = block({{t.get_n(i - 1), t.get_g(i - 2)}}, {t.dimension(i - 3)},
                       {t.dimension(i - 1), t.dimension(i - 2)});
  }
  auto cone_d = [&](int j) {  // differential of Cone(g_j) on C_j (+) C_{j-1}
    return block({{t.get_d(j), zero(t.dimension(j), t.dimension(j - 1))},
                  {t.get_g(j), t.get_d(j - 1)}},
                 {t.dimension(j), t.dimension(j - 1)}, {t.dimension(j), t.dimension(j - 1)});
  };
  // psi_i phi_i - q_i = -(d k_i + k_i d)
  for (int i = t.lo; i <= t.hi; ++i) {
    if (!rep.phi.count(i) || !rep.psi.count(i)) continue;
    const SparseMatrix lhs = rep.psi[i] * rep.phi[i] - t.get_q(i);
    const SparseMatrix rhs = t.get_d(i - 3) * t.get_k(i) + t.get_k(i) * t.get_d(i);
    if (!zero_in(lhs + rhs, ring)) return fail("psi-phi", i);
  }
  // phi_i psi_{i+3} - M = -(D H + H D) on Cone(g_{i+2}) -> Cone(g_{i-1})
  for (int i = t.lo; i <= t.hi; ++i) {
    if (!rep.phi.count(i) || !rep.psi.count(i + 3)) continue;
    const int s0 = t.dimension(i + 2), s1 = t.dimension(i + 1);
    const int t0 = t.dimension(i - 1), t1 = t.dimension(i - 2);
    const SparseMatrix lower = t.get_n(i) * t.get_n(i + 2) + t.get_k(i + 1) * t.get_g(i + 2) +
                               t.get_g(i - 1) * t.get_k(i + 2);
    const SparseMatrix M =
        block({{t.get_q(i + 2), zero(t0, s1)}, {lower, t.get_q(i + 1)}}, {t0, t1}, {s0, s1});
    const SparseMatrix H =
        block({{t.get_k(i + 2), t.get_n(i + 1)}, {zero(t1, s0), t.get_k(i + 1)}}, {t0, t1},
              {s0, s1});
    rep.homotopy[i] = H;
    const SparseMatrix lhs = rep.phi[i] * rep.psi[i + 3] - M;
    const SparseMatrix rhs = cone_d(i - 1) * H + H * cone_d(i + 2);
    BlockSigns bs;
    bs.i = i;
    const std::vector<int> src_rows{0, s0};
    const std::vector<int> tgt_rows{0, t0};
    bool exact = true;
    for (int b = 0; b < 4; ++b) {
      const int br = b / 2, bc = b % 2;
      std::vector<int> from, to;
      for (int c = 0; c < (bc ? s1 : s0); ++c) from.push_back(src_rows[bc] + c);
      for (int r = 0; r < (br ? t1 : t0); ++r) to.push_back(tgt_rows[br] + r);
      const SparseMatrix l = extract(lhs, from, to);
      const SparseMatrix r = extract(rhs, from, to);
      const bool minus = zero_in(l + r, ring);
      const bool plus = zero_in(l - r, ring);
      bs.sign[b] = plus && minus ? 0 : minus ? -1 : plus ? 1 : 2;
      if (!minus) exact = false;
    }
    rep.signs.push_back(bs);
    if (!exact) return fail("phi-psi", i);
  }
  rep.holds = true;
  return rep;
}

TriangleData periodic_triangle(Ring ring, const std::vector<int>& dims,
                               const std::vector<SparseMatrix>& d,
                               const std::vector<SparseMatrix>& g,
                               const std::vector<SparseMatrix>& n,
                               const std::vector<SparseMatrix>& k, int periods) {
  if (dims.size() != 3 || d.size() != 3 || g.size() != 3 || n.size() != 3 || k.size() != 3) {
    throw Error(ErrorKind::InvalidArgument, "periodic data needs three of each map");
  }
  TriangleData t;
  t.ring = ring;
  t.lo = 0;
  t.hi = 3 * periods - 1;
  auto mod3 = [](int i) { return ((i % 3) + 3) % 3; };
  for (int i = t.lo - 6; i <= t.hi; ++i) t.dim[i] = dims[mod3(i)];
  for (int i = t.lo - 3; i <= t.hi; ++i) {
    t.d[i] = d[mod3(i)];
    t.g[i] = g[mod3(i)];
    t.n[i] = n[mod3(i)];
    t.k[i] = k[mod3(i)];
  }
  for (int i = t.lo; i <= t.hi; ++i) {
    const SparseMatrix e = t.get_n(i - 1) * t.get_g(i) + t.get_g(i - 2) * t.get_n(i) +
                           t.get_d(i - 3) * t.get_k(i) + t.get_k(i) * t.get_d(i);
    t.q[i] = reduce(e, ring);
  }
  return t;
}

TriangleData integral_triangle_example() {
  const std::vector<int> dims{1, 1, 0};
  std::vector<SparseMatrix> d{zero(1, 1), zero(1, 1), zero(0, 0)};
  // g_i : C_i -> C_{i-1}; n_i : C_i -> C_{i-2}; k_i : C_i -> C_{i-3} = C_i
  std::vector<SparseMatrix> g{zero(0, 1), SparseMatrix::identity(1), zero(1, 0)};
  std::vector<SparseMatrix> n{SparseMatrix::identity(1), zero(0, 1), zero(1, 0)};
  std::vector<SparseMatrix> k{zero(1, 1), zero(1, 1), zero(0, 0)};
  return periodic_triangle(Ring::Z, dims, d, g, n, k);
}

TriangleData random_f2_triangle(std::uint64_t seed, int max_tries) {
  std::mt19937_64 rng(seed);
  auto bit = [&] { return static_cast<std::int64_t>(rng() & 1); };
  auto random_matrix = [&](int r, int c) {
    SparseMatrix m(r, c);
    for (int j = 0; j < c; ++j) {
      for (int i = 0; i < r; ++i) {
        if (bit()) m.add(i, j, 1);
      }
    }
    return m;
  };
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    std::vector<int> dims(3);
    for (int& x : dims) x = static_cast<int>(rng() % 3) + 1;
    auto dim = [&](int i) { return dims[((i % 3) + 3) % 3]; };
    std::vector<SparseMatrix> d, g, n, k;
    bool square_zero = true;
    for (int i = 0; i < 3; ++i) {
      d.push_back(random_matrix(dim(i), dim(i)));
      if (!(d.back() * d.back()).mod2().is_zero()) square_zero = false;
    }
    if (!square_zero) continue;
    for (int i = 0; i < 3; ++i) {
      g.push_back(random_matrix(dim(i - 1), dim(i)));
      n.push_back(random_matrix(dim(i - 2), dim(i)));
      k.push_back(random_matrix(dim(i - 3), dim(i)));
    }
    TriangleData t = periodic_triangle(Ring::F2, dims, d, g, n, k, 3);
    if (verify_triangle(t).holds) return t;
  }
  throw Error(ErrorKind::InvalidArgument, "no triangle found within the search budget");
}

bool SkeinReport::ok() const {
  if (!block_structure || !anti_chain || !cone_equal) return false;
  for (const auto& r : ranks) {
    if (!r.les_exact || !r.inequality || r.part0 != r.resolved0 || r.part1 != r.resolved1) {
      return false;
    }
  }
  return true;
}

SkeinReport skein_check(const Diagram& diagram, int crossing, Flavor flavor) {
  if (crossing < 0 || crossing >= diagram.crossing_count()) {
    throw Error(ErrorKind::InvalidArgument, "crossing index out of range");
  }
  const BigradedComplex c = assemble(diagram, flavor);
  std::vector<int> one, zero_part;
  for (int g = 0; g < static_cast<int>(c.gens.size()); ++g) {
    (c.gens[g].vertex >> crossing & 1 ? one : zero_part).push_back(g);
  }
  SkeinReport rep;
  rep.crossing = crossing;
  const SparseMatrix d1 = extract(c.d, one, one);
  const SparseMatrix d0 = extract(c.d, zero_part, zero_part);
  const SparseMatrix g = extract(c.d, one, zero_part);
  rep.block_structure = extract(c.d, zero_part, one).is_zero();
  rep.anti_chain = (g * d1 + d0 * g).is_zero();
  if (rep.anti_chain) {
    std::vector<int> order = one;
    order.insert(order.end(), zero_part.begin(), zero_part.end());
    rep.cone_equal = rep.block_structure && cone(d1, d0, g, Ring::Z) == extract(c.d, order, order);
  }

  // (h, q) pieces of each part
  using Pieces = std::map<Bidegree, std::vector<int>>;
  auto pieces = [&](const std::vector<int>& part) {
    Pieces p;
    for (int j = 0; j < static_cast<int>(part.size()); ++j) {
      p[{c.gens[part[j]].h, c.gens[part[j]].q}].push_back(j);
    }
    return p;
  };
  const Pieces p1 = pieces(one), p0 = pieces(zero_part);
  auto at = [](const Pieces& p, Bidegree b) {
    const auto it = p.find(b);
    return it == p.end() ? std::vector<int>{} : it->second;
  };

  for (Coefficients field : {Coefficients::Q, Coefficients::F2}) {
    const Ring ring = field == Coefficients::F2 ? Ring::F2 : Ring::Z;
    auto dims = [&](const SparseMatrix& d, const Pieces& p) {
      std::map<Bidegree, int> out;
      for (const auto& [b, idx] : p) {
        const auto next = at(p, {b.h + 1, b.q});
        const auto prev = at(p, {b.h - 1, b.q});
        const int r_out = static_cast<int>(field_rank(extract(d, idx, next), ring));
        const int r_in = static_cast<int>(field_rank(extract(d, prev, idx), ring));
        out[b] = static_cast<int>(idx.size()) - r_out - r_in;
      }
      return out;
    };
    const auto h1 = dims(d1, p1);
    const auto h0 = dims(d0, p0);
    // rank of g_* from (h, q) of the 1-part into (h + 1, q) of the 0-part
    std::map<Bidegree, int> gstar;
    for (const auto& [b, src] : p1) {
      const auto tgt = at(p0, {b.h + 1, b.q});
      const auto src_next = at(p1, {b.h + 1, b.q});
      const auto tgt_same = at(p0, b);
      gstar[b] = induced_rank(extract(g, src, tgt), extract(d1, src, src_next),
                              extract(d0, tgt_same, tgt), ring);
    }
    const HomologySummary full = homology(c, field);
    const auto full_ranks = full.ranks();
    std::set<Bidegree> all;
    for (const auto& [b, v] : full_ranks) all.insert(b);
    for (const auto& [b, v] : h0) all.insert(b);
    for (const auto& [b, v] : h1) all.insert(b);
    auto get = [](const std::map<Bidegree, int>& m, Bidegree b) {
      const auto it = m.find(b);
      return it == m.end() ? 0 : it->second;
    };
    SkeinRanks r;
    r.field = field;
    r.les_exact = true;
    for (const Bidegree b : all) {
      const int expect = get(h0, b) - get(gstar, {b.h - 1, b.q}) + get(h1, b) - get(gstar, b);
      if (get(full_ranks, b) != expect) r.les_exact = false;
      r.part0 += get(h0, b);
      r.part1 += get(h1, b);
    }
    r.total = full.total_rank();
    r.resolved0 = homology(assemble(resolve_crossing(diagram, crossing, 0), flavor), field)
                      .total_rank();
    r.resolved1 = homology(assemble(resolve_crossing(diagram, crossing, 1), flavor), field)
                      .total_rank();
    r.inequality = r.total <= r.resolved0 + r.resolved1;
    rep.ranks.push_back(r);
  }
  return rep;
}

}  // namespace oddkh
