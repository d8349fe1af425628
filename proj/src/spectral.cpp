#include "oddkh/spectral.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "oddkh/error.hpp"

namespace oddkh {

namespace {

using F2 = std::uint8_t;

template <class T>
struct Ops;

template <>
struct Ops<F2> {
  static F2 from(std::int64_t v) { return static_cast<F2>(v & 1); }
  static bool zero(F2 a) { return a == 0; }
  static F2 sub(F2 a, F2 b) { return a ^ b; }
  static F2 mul(F2 a, F2 b) { return a & b; }
  static F2 div(F2 a, F2) { return a; }
};

template <>
struct Ops<Rational> {
  static Rational from(std::int64_t v) { return Rational(v); }
  static bool zero(const Rational& a) { return a == 0; }
  static Rational sub(const Rational& a, const Rational& b) { return a - b; }
  static Rational mul(const Rational& a, const Rational& b) { return a * b; }
  static Rational div(const Rational& a, const Rational& b) { return a / b; }
};

template <class T>
using Dense = std::vector<std::vector<T>>;

// Row reduction in place; returns pivot columns.
template <class T>
std::vector<int> row_reduce(Dense<T>& a, int cols) {
  using O = Ops<T>;
  std::vector<int> pivots;
  std::size_t rank = 0;
  for (int c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && O::zero(a[p][c])) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    const T inv_piv = a[rank][c];
    for (int k = 0; k < cols; ++k) a[rank][k] = O::div(a[rank][k], inv_piv);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || O::zero(a[r][c])) continue;
      const T f = a[r][c];
      for (int k = c; k < cols; ++k) a[r][k] = O::sub(a[r][k], O::mul(f, a[rank][k]));
    }
    pivots.push_back(c);
    ++rank;
  }
  return pivots;
}

template <class T>
int dense_rank(Dense<T> a, int cols) {
  return static_cast<int>(row_reduce(a, cols).size());
}

// Basis of the kernel of a (rows x cols), as vectors of length cols.
template <class T>
Dense<T> kernel(Dense<T> a, int cols) {
  using O = Ops<T>;
  const auto pivots = row_reduce(a, cols);
  std::vector<char> is_pivot(cols, 0);
  for (int c : pivots) is_pivot[c] = 1;
  Dense<T> out;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(cols, O::from(0));
    v[f] = O::from(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = O::sub(O::from(0), a[r][f]);
    out.push_back(std::move(v));
  }
  return out;
}

template <class T>
Dense<T> to_dense(const FilteredComplex& c) {
  const int n = static_cast<int>(c.gens.size());
  Dense<T> a(n, std::vector<T>(n, Ops<T>::from(0)));
  for (int j = 0; j < n; ++j) {
    for (const auto& [r, v] : c.d.col[j]) a[r][j] = Ops<T>::from(v);
  }
  return a;
}

// Persistence pairs (birth, death) with d(death) reducing onto birth.
template <class T>
std::vector<std::pair<int, int>> pairing(const FilteredComplex& c) {
  using O = Ops<T>;
  const int n = static_cast<int>(c.gens.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (c.gens[a].p != c.gens[b].p) return c.gens[a].p > c.gens[b].p;
    if (c.gens[a].degree != c.gens[b].degree) return c.gens[a].degree > c.gens[b].degree;
    return a < b;
  });
  std::vector<int> pos(n);
  for (int k = 0; k < n; ++k) pos[order[k]] = k;

  using Col = std::vector<std::pair<int, T>>;
  std::vector<Col> cols(n);
  for (int k = 0; k < n; ++k) {
    for (const auto& [r, v] : c.d.col[order[k]]) {
      T x = O::from(v);
      if (!O::zero(x)) cols[k].push_back({pos[r], x});
    }
    std::sort(cols[k].begin(), cols[k].end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  std::vector<int> owner(n, -1);  // low position -> reduced column
  std::vector<std::pair<int, int>> out;
  Col merged;
  for (int k = 0; k < n; ++k) {
    while (!cols[k].empty()) {
      const int low = cols[k].back().first;
      const int j = owner[low];
      if (j < 0) break;
      const T f = O::div(cols[k].back().second, cols[j].back().second);
      merged.clear();
      std::size_t x = 0, y = 0;
      const Col& a = cols[k];
      const Col& b = cols[j];
      while (x < a.size() || y < b.size()) {
        if (y == b.size() || (x < a.size() && a[x].first < b[y].first)) {
          merged.push_back(a[x++]);
        } else if (x == a.size() || b[y].first < a[x].first) {
          merged.push_back({b[y].first, O::sub(O::from(0), O::mul(f, b[y].second))});
          ++y;
        } else {
          T v = O::sub(a[x].second, O::mul(f, b[y].second));
          if (!O::zero(v)) merged.push_back({a[x].first, std::move(v)});
          ++x;
          ++y;
        }
      }
      cols[k].swap(merged);
    }
    if (!cols[k].empty()) {
      owner[cols[k].back().first] = k;
      out.push_back({order[cols[k].back().first], order[k]});
    }
  }
  return out;
}

template <class T>
RankMap einfinity_dense(const FilteredComplex& c) {
  const int n = static_cast<int>(c.gens.size());
  const Dense<T> d = to_dense<T>(c);
  // group generators by (degree, weight)
  std::map<std::pair<int, int>, std::vector<int>> klass;
  for (int g = 0; g < n; ++g) klass[{c.gens[g].degree, c.gens[g].weight}].push_back(g);
  RankMap out;
  for (const auto& [dw, members] : klass) {
    const auto up = klass.find({dw.first + 1, dw.second});
    const auto down = klass.find({dw.first - 1, dw.second});
    std::vector<int> levels;
    for (int g : members) levels.push_back(c.gens[g].p);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    // boundaries into this class: columns from the class below
    Dense<T> bmat;
    if (down != klass.end()) {
      for (int src : down->second) {
        std::vector<T> v;
        for (int g : members) v.push_back(d[g][src]);
        bmat.push_back(std::move(v));
      }
    }
    const int m = static_cast<int>(members.size());
    const int rank_b = bmat.empty() ? 0 : dense_rank(bmat, m);
    auto filtered_dim = [&](int p) {
      // dim(Z cap F^p) - dim(B cap F^p)
      std::vector<int> cols_in;
      for (int t = 0; t < m; ++t) {
        if (c.gens[members[t]].p >= p) cols_in.push_back(t);
      }
      int rank_d = 0;
      if (up != klass.end() && !cols_in.empty()) {
        Dense<T> a;
        for (int t : cols_in) {
          std::vector<T> v;
          for (int r : up->second) v.push_back(d[r][members[t]]);
          a.push_back(std::move(v));
        }
        rank_d = dense_rank(a, static_cast<int>(up->second.size()));
      }
      const int z = static_cast<int>(cols_in.size()) - rank_d;
      // projection of B onto the coordinates below p
      int rank_proj = 0;
      if (!bmat.empty()) {
        Dense<T> proj;
        for (const auto& v : bmat) {
          std::vector<T> w;
          for (int t = 0; t < m; ++t) {
            if (c.gens[members[t]].p < p) w.push_back(v[t]);
          }
          proj.push_back(std::move(w));
        }
        const int width = proj.empty() ? 0 : static_cast<int>(proj[0].size());
        rank_proj = width ? dense_rank(proj, width) : 0;
      }
      return z - (rank_b - rank_proj);
    };
    for (std::size_t li = 0; li < levels.size(); ++li) {
      const int p = levels[li];
      const int next = li + 1 < levels.size() ? levels[li + 1] : p + 1;
      const int r = filtered_dim(p) - filtered_dim(next);
      if (r) out[{p, dw.first, dw.second}] = r;
    }
  }
  return out;
}

template <class T>
RankMap subquotient_dense(const FilteredComplex& c, int r) {
  using O = Ops<T>;
  const int n = static_cast<int>(c.gens.size());
  const Dense<T> d = to_dense<T>(c);
  std::map<std::pair<int, int>, std::vector<int>> klass;
  for (int g = 0; g < n; ++g) klass[{c.gens[g].degree, c.gens[g].weight}].push_back(g);

  // Z_s^p inside class (deg, w), as full-length vectors over that class.
  auto z_space = [&](const std::vector<int>& members, const std::vector<int>* up, int p, int s) {
    std::vector<int> cols_in;
    for (std::size_t t = 0; t < members.size(); ++t) {
      if (c.gens[members[t]].p >= p) cols_in.push_back(static_cast<int>(t));
    }
    Dense<T> out;
    if (cols_in.empty()) return out;
    // equations: components of dx at levels below p + s vanish
    Dense<T> eq;
    if (up) {
      for (int row : *up) {
        if (c.gens[row].p >= p + s) continue;
        std::vector<T> v;
        for (int t : cols_in) v.push_back(d[row][members[t]]);
        eq.push_back(std::move(v));
      }
    }
    Dense<T> ker;
    const int width = static_cast<int>(cols_in.size());
    if (eq.empty()) {
      for (int t = 0; t < width; ++t) {
        std::vector<T> v(width, O::from(0));
        v[t] = O::from(1);
        ker.push_back(std::move(v));
      }
    } else {
      ker = kernel(eq, width);
    }
    for (const auto& kv : ker) {
      std::vector<T> full(members.size(), O::from(0));
      for (int t = 0; t < width; ++t) full[cols_in[t]] = kv[t];
      out.push_back(std::move(full));
    }
    return out;
  };

  RankMap out;
  for (const auto& [dw, members] : klass) {
    const auto up_it = klass.find({dw.first + 1, dw.second});
    const auto down_it = klass.find({dw.first - 1, dw.second});
    const std::vector<int>* up = up_it == klass.end() ? nullptr : &up_it->second;
    std::vector<int> levels;
    for (int g : members) levels.push_back(c.gens[g].p);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    const int m = static_cast<int>(members.size());
    for (int p : levels) {
      const Dense<T> zr = z_space(members, up, p, r);
      if (zr.empty()) continue;
      Dense<T> denom = z_space(members, up, p + 1, r - 1);
      if (down_it != klass.end()) {
        const auto& lower = down_it->second;
        const Dense<T> src = z_space(lower, &members, p - r + 1, r - 1);
        for (const auto& x : src) {
          std::vector<T> img(m, O::from(0));
          for (int t = 0; t < m; ++t) {
            T acc = O::from(0);
            for (std::size_t u = 0; u < lower.size(); ++u) {
              if (O::zero(x[u]) || O::zero(d[members[t]][lower[u]])) continue;
              acc = O::sub(acc, O::mul(O::sub(O::from(0), d[members[t]][lower[u]]), x[u]));
            }
            img[t] = acc;
          }
          denom.push_back(std::move(img));
        }
      }
      const int dim_z = dense_rank(zr, m);
      const int dim_den = denom.empty() ? 0 : dense_rank(denom, m);
      if (dim_z - dim_den) out[{p, dw.first, dw.second}] = dim_z - dim_den;
    }
  }
  return out;
}

template <class T>
SpectralResult run_pages(const FilteredComplex& c, int r_max) {
  const auto pairs = pairing<T>(c);
  std::vector<int> length(c.gens.size(), -1);  // pair length at both ends
  int max_len = 0;
  for (const auto& [birth, death] : pairs) {
    const int len = c.gens[birth].p - c.gens[death].p;
    length[birth] = length[death] = len;
    if (len >= 1) max_len = std::max(max_len, len);
  }
  SpectralResult out;
  out.degeneration_page = 1 + max_len;
  const int last = r_max > 0 ? r_max : out.degeneration_page;
  for (int r = 1; r <= last; ++r) {
    SSPage page;
    page.r = r;
    for (int g = 0; g < static_cast<int>(c.gens.size()); ++g) {
      if (length[g] < 0 || length[g] >= r) page.ranks[c.key(g)] += 1;
    }
    for (const auto& [birth, death] : pairs) {
      if (c.gens[birth].p - c.gens[death].p == r) {
        page.dr.push_back({death, birth, c.key(death), c.key(birth)});
      }
    }
    out.pages.push_back(std::move(page));
  }
  for (int g = 0; g < static_cast<int>(c.gens.size()); ++g) {
    if (length[g] < 0) out.einfinity[c.key(g)] += 1;
  }
  return out;
}

}  // namespace

const char* to_string(Field f) { return f == Field::F2 ? "f2" : "q"; }

void validate(const FilteredComplex& c) {
  const int n = static_cast<int>(c.gens.size());
  if (c.d.rows != n || c.d.cols != n) throw Error(ErrorKind::ShapeMismatch, "d is not square");
  const SparseMatrix dd = c.d * c.d;
  const bool zero = c.field == Field::F2 ? dd.mod2().is_zero() : dd.is_zero();
  if (!zero) throw Error(ErrorKind::DifferentialNotSquareZero, "d o d is nonzero");
  for (int j = 0; j < n; ++j) {
    for (const auto& [r, v] : c.d.col[j]) {
      if (c.field == Field::F2 && (v & 1) == 0) continue;
      if (c.gens[r].p < c.gens[j].p) {
        throw Error(ErrorKind::FiltrationViolated, "d lowers the filtration level");
      }
      if (c.gens[r].degree != c.gens[j].degree + 1 || c.gens[r].weight != c.gens[j].weight) {
        throw Error(ErrorKind::InvalidArgument, "d must raise the degree by one");
      }
    }
  }
}

FilteredComplex filtered_from(const BigradedComplex& c, Field field) {
  FilteredComplex f;
  f.field = field;
  f.d = field == Field::F2 ? c.d.mod2() : c.d;
  f.gens.reserve(c.gens.size());
  for (const auto& g : c.gens) f.gens.push_back({g.h, g.h, g.q});
  return f;
}

SpectralResult pages(const FilteredComplex& c, int r_max) {
  validate(c);
  return c.field == Field::F2 ? run_pages<F2>(c, r_max) : run_pages<Rational>(c, r_max);
}

RankMap einfinity_oracle(const FilteredComplex& c) {
  validate(c);
  return c.field == Field::F2 ? einfinity_dense<F2>(c) : einfinity_dense<Rational>(c);
}

RankMap page_by_subquotients(const FilteredComplex& c, int r) {
  if (r < 1) throw Error(ErrorKind::InvalidArgument, "page index must be at least 1");
  validate(c);
  return c.field == Field::F2 ? subquotient_dense<F2>(c, r) : subquotient_dense<Rational>(c, r);
}

FilteredComplex random_filtered_complex(std::uint64_t seed, Field field, int max_gens,
                                        int levels) {
  std::mt19937_64 rng(seed);
  auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int n = uni(0, max_gens);
  FilteredComplex c;
  c.field = field;
  for (int g = 0; g < n; ++g) c.gens.push_back({uni(0, levels - 1), uni(0, 3), 0});
  // matching
  SparseMatrix d0(n, n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<char> used(n, 0);
  for (int a : perm) {
    if (used[a]) continue;
    for (int b : perm) {
      if (used[b] || b == a) continue;
      if (c.gens[b].degree == c.gens[a].degree + 1 && c.gens[b].p >= c.gens[a].p && uni(0, 2)) {
        used[a] = used[b] = 1;
        d0.add(b, a, field == Field::F2 ? 1 : (uni(0, 1) ? uni(1, 3) : -uni(1, 3)));
        break;
      }
    }
  }
  // filtered unitriangular change of basis P, in (p desc, index) order
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (c.gens[a].p != c.gens[b].p) return c.gens[a].p > c.gens[b].p;
    return a < b;
  });
  std::vector<std::vector<std::int64_t>> P(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) P[i][i] = 1;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      const int i = order[x];
      const int j = order[y];
      if (c.gens[i].degree == c.gens[j].degree && uni(0, 3) == 0) P[i][j] = uni(-1, 1);
    }
  }
  // inverse by back substitution along the order (unitriangular, integral)
  std::vector<std::vector<std::int64_t>> Pinv(n, std::vector<std::int64_t>(n, 0));
  for (int y = 0; y < n; ++y) {
    const int j = order[y];
    Pinv[j][j] = 1;
    for (int x = y - 1; x >= 0; --x) {
      const int i = order[x];
      std::int64_t acc = 0;
      for (int z = x + 1; z <= y; ++z) acc += P[i][order[z]] * Pinv[order[z]][j];
      Pinv[i][j] = -acc;
    }
  }
  c.d = SparseMatrix::from_dense(P) * d0 * SparseMatrix::from_dense(Pinv);
  return c;
}

}  // namespace oddkh
