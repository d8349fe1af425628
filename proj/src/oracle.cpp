#include "oddkh/oracle.hpp"

#include <cmath>

#include "oddkh/cube.hpp"
#include "oddkh/error.hpp"

namespace oddkh {

LaurentPoly bracket_in_a(const Diagram& d) {
  const int n = d.crossing_count();
  const LaurentPoly loop = LaurentPoly::monomial(2, -1) + LaurentPoly::monomial(-2, -1);
  std::vector<LaurentPoly> loop_pow{LaurentPoly::monomial(0)};
  LaurentPoly total;
  for (Vertex m = 0; m < (Vertex{1} << n); ++m) {
    const int k = resolve(d, m).circle_count();
    while (static_cast<int>(loop_pow.size()) < k) loop_pow.push_back(loop_pow.back() * loop);
    const int ones = __builtin_popcount(m);
    total += loop_pow[k - 1].shifted((n - ones) - ones);
  }
  return total;
}

LaurentPoly kauffman_bracket(const Diagram& d) {
  const int w = d.writhe();
  // (-A^3)^{-w}
  LaurentPoly f = bracket_in_a(d).shifted(-3 * w);
  if (w % 2 != 0) f = f * LaurentPoly::monomial(0, -1);
  // A^{2e} -> (-1)^e q^{-e}
  LaurentPoly out;
  for (const auto& [e, c] : f.terms()) {
    if (e % 2 != 0) throw Error(ErrorKind::InvalidArgument, "odd A-exponent in normalized bracket");
    const int half = e / 2;
    out.add(-half, (half % 2 == 0) ? c : -c);
  }
  return out;
}

std::int64_t determinant(const Diagram& d) {
  const auto [re, im] = kauffman_bracket(d).at_i();
  const long double mag = std::sqrt(static_cast<long double>(re) * re +
                                    static_cast<long double>(im) * im);
  const auto r = static_cast<std::int64_t>(std::llround(mag));
  if (r * r != re * re + im * im) {
    throw Error(ErrorKind::InvalidArgument, "determinant is not an integer");
  }
  return r;
}

BigradedComplex even_f2_complex(const Diagram& d) {
  const Diagram e = mirror(d);
  const int n = e.crossing_count();
  const Vertex full = n == 0 ? 0 : ((Vertex{1} << n) - 1);
  const int ep = e.n_plus();
  const int em = e.n_minus();
  // vertex m of d is vertex ~m of the mirror
  std::vector<Resolution> res;
  res.reserve(std::size_t{1} << n);
  for (Vertex m = 0; m < (Vertex{1} << n); ++m) res.push_back(resolve(e, full & ~m));

  BigradedComplex c;
  c.name = d.name;
  c.crossings = n;
  c.n_plus = d.n_plus();
  c.n_minus = d.n_minus();
  c.vertex_offset.resize(res.size() + 1, 0);
  for (std::size_t m = 0; m < res.size(); ++m) {
    const int k = res[m].circle_count();
    c.vertex_offset[m + 1] = c.vertex_offset[m] + (std::size_t{1} << (k - 1));
    const int s_weight = n - __builtin_popcount(static_cast<Vertex>(m));
    const int marked = res[m].pointed_circle;
    for (Mask xs : basis_monomials(k, marked)) {
      const int x_count = __builtin_popcount(xs) + 1;
      const int label_degree = (k - x_count) - x_count;
      GradedGenerator g;
      g.vertex = static_cast<Vertex>(m);
      g.monomial = xs;
      g.h = s_weight - em;
      g.q = label_degree + s_weight + ep - 2 * em + 1;
      g.delta2 = 2 * g.h - g.q;
      c.gens.push_back(g);
    }
  }
  const int total = static_cast<int>(c.gens.size());
  c.d = SparseMatrix(total, total);
  for (Vertex m = 0; m < static_cast<Vertex>(res.size()); ++m) {
    const Resolution& from = res[m];
    const int kf = from.circle_count();
    for (int i = 0; i < n; ++i) {
      if (!(m >> i & 1)) continue;
      const Vertex to_v = m & ~(Vertex{1} << i);
      const Resolution& to = res[to_v];
      // circle correspondence through arcs
      std::vector<int> image(kf);
      for (int j = 0; j < kf; ++j) image[j] = to.arc_circle[from.circles[j].label];
      const Quad& q = e.crossings[i];
      const bool merge = to.circle_count() == kf - 1;
      const int cu = from.arc_circle[q[0]];
      const int t0 = to.arc_circle[q[0]];
      const int t1 = to.arc_circle[q[1]] == t0 ? to.arc_circle[q[2]] : to.arc_circle[q[1]];
      for (std::uint32_t idx = 0; idx < (std::uint32_t{1} << (kf - 1)); ++idx) {
        const Mask xs = monomial_from_index(idx, from.pointed_circle);
        const Mask labels = xs | (Mask{1} << from.pointed_circle);  // bit set: x
        std::vector<Mask> outs;
        if (merge) {
          Mask out = 0;
          int xs_on_merged = 0;
          for (int j = 0; j < kf; ++j) {
            if (!(labels >> j & 1)) continue;
            if (image[j] == t0) {
              ++xs_on_merged;
            }
            out |= Mask{1} << image[j];
          }
          if (xs_on_merged <= 1) outs.push_back(out);  // x * x = 0
        } else {
          Mask rest = 0;
          for (int j = 0; j < kf; ++j) {
            if (j != cu && (labels >> j & 1)) rest |= Mask{1} << image[j];
          }
          if (labels >> cu & 1) {
            outs.push_back(rest | (Mask{1} << t0) | (Mask{1} << t1));
          } else {
            outs.push_back(rest | (Mask{1} << t0));
            outs.push_back(rest | (Mask{1} << t1));
          }
        }
        for (Mask out : outs) {
          // the marked circle keeps its x in the reduced subcomplex
          if (!(out >> to.pointed_circle & 1)) continue;
          const Mask mono = out & ~(Mask{1} << to.pointed_circle);
          c.d.col[c.vertex_offset[m] + idx].push_back(
              {static_cast<int>(c.vertex_offset[to_v] + monomial_index(mono, to.pointed_circle)),
               1});
        }
      }
    }
  }
  c.d.canonicalize();
  c.d = c.d.mod2();
  return c;
}

}  // namespace oddkh
