#include "oddkh/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "oddkh/error.hpp"

namespace oddkh {

namespace {

struct Overflow {};

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw Overflow{};
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(a, b, &out)) throw Overflow{};
  return out;
}

using Row = std::vector<std::pair<int, std::int64_t>>;

// Invariant factors of a dense matrix; entries are consumed.
void dense_smith(std::vector<std::vector<BigInt>>& a, SmithResult& out) {
  const std::size_t R = a.size();
  const std::size_t C = R ? a[0].size() : 0;
  std::vector<BigInt> diag;
  for (std::size_t t = 0; t < std::min(R, C); ++t) {
    while (true) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t pr = R, pc = C;
      BigInt best = 0;
      for (std::size_t i = t; i < R; ++i) {
        for (std::size_t j = t; j < C; ++j) {
          if (a[i][j] == 0) continue;
          const BigInt v = abs(a[i][j]);
          if (pr == R || v < best) {
            best = v;
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == R) {
        std::sort(diag.begin(), diag.end());
        for (auto& d : diag) {
          if (d > 1) out.torsion.push_back(d);
        }
        out.rank += diag.size();
        return;
      }
      std::swap(a[t], a[pr]);
      for (std::size_t i = 0; i < R; ++i) std::swap(a[i][t], a[i][pc]);
      const BigInt p = a[t][t];
      bool clean = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (a[i][t] == 0) continue;
        const BigInt q = a[i][t] / p;
        for (std::size_t j = t; j < C; ++j) {
          if (a[t][j] != 0) a[i][j] -= q * a[t][j];
        }
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (a[t][j] == 0) continue;
        const BigInt q = a[t][j] / p;
        for (std::size_t i = t; i < R; ++i) {
          if (a[i][t] != 0) a[i][j] -= q * a[i][t];
        }
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility of the trailing block by the pivot
      bool divides = true;
      for (std::size_t i = t + 1; i < R && divides; ++i) {
        for (std::size_t j = t + 1; j < C; ++j) {
          if (a[i][j] % p != 0) {
            for (std::size_t jj = t; jj < C; ++jj) a[t][jj] += a[i][jj];
            divides = false;
            break;
          }
        }
      }
      if (!divides) continue;
      diag.push_back(abs(p));
      break;
    }
  }
  std::sort(diag.begin(), diag.end());
  for (auto& d : diag) {
    if (d > 1) out.torsion.push_back(d);
  }
  out.rank += diag.size();
}

SmithResult dense_smith_of(const SparseMatrix& m) {
  std::vector<std::vector<BigInt>> a(m.rows, std::vector<BigInt>(m.cols));
  for (int c = 0; c < m.cols; ++c) {
    for (const auto& [r, v] : m.col[c]) a[r][c] = v;
  }
  SmithResult out;
  dense_smith(a, out);
  return out;
}

// Eliminates unit pivots (Markowitz order) and hands the rest to dense SNF.
SmithResult sparse_smith(const SparseMatrix& m) {
  std::vector<Row> rows(m.rows);
  std::vector<std::set<int>> col_rows(m.cols);
  for (int c = 0; c < m.cols; ++c) {
    for (const auto& [r, v] : m.col[c]) {
      rows[r].push_back({c, v});
      col_rows[c].insert(r);
    }
  }
  for (auto& r : rows) std::sort(r.begin(), r.end());

  SmithResult out;
  Row merged;
  while (true) {
    int best_row = -1;
    int best_col = -1;
    std::size_t best_cost = SIZE_MAX;
    for (int r = 0; r < m.rows && best_cost > 0; ++r) {
      if (rows[r].empty()) continue;
      for (const auto& [c, v] : rows[r]) {
        if (v != 1 && v != -1) continue;
        const std::size_t cost = (rows[r].size() - 1) * (col_rows[c].size() - 1);
        if (cost < best_cost) {
          best_cost = cost;
          best_row = r;
          best_col = c;
        }
      }
    }
    if (best_row < 0) break;
    const Row pivot = rows[best_row];
    std::int64_t u = 0;
    for (const auto& [c, v] : pivot) {
      if (c == best_col) u = v;
    }
    const std::vector<int> targets(col_rows[best_col].begin(), col_rows[best_col].end());
    for (int r : targets) {
      if (r == best_row) continue;
      std::int64_t a = 0;
      for (const auto& [c, v] : rows[r]) {
        if (c == best_col) a = v;
      }
      const std::int64_t f = a * u;  // row_r -= f * pivot
      merged.clear();
      std::size_t x = 0, y = 0;
      const Row& lhs = rows[r];
      while (x < lhs.size() || y < pivot.size()) {
        if (y == pivot.size() || (x < lhs.size() && lhs[x].first < pivot[y].first)) {
          merged.push_back(lhs[x++]);
        } else if (x == lhs.size() || pivot[y].first < lhs[x].first) {
          const int c = pivot[y].first;
          merged.push_back({c, checked_mul(-f, pivot[y].second)});
          col_rows[c].insert(r);
          ++y;
        } else {
          const int c = lhs[x].first;
          const std::int64_t v = checked_sub(lhs[x].second, checked_mul(f, pivot[y].second));
          if (v != 0) {
            merged.push_back({c, v});
          } else {
            col_rows[c].erase(r);
          }
          ++x;
          ++y;
        }
      }
      rows[r].swap(merged);
    }
    for (const auto& [c, v] : pivot) col_rows[c].erase(best_row);
    rows[best_row].clear();
    ++out.rank;
  }

  std::vector<int> live_rows;
  std::map<int, int> live_cols;
  for (int r = 0; r < m.rows; ++r) {
    if (rows[r].empty()) continue;
    live_rows.push_back(r);
    for (const auto& [c, v] : rows[r]) live_cols.emplace(c, 0);
  }
  if (live_rows.empty()) return out;
  int next = 0;
  for (auto& [c, idx] : live_cols) idx = next++;
  std::vector<std::vector<BigInt>> a(live_rows.size(), std::vector<BigInt>(live_cols.size()));
  for (std::size_t i = 0; i < live_rows.size(); ++i) {
    for (const auto& [c, v] : rows[live_rows[i]]) a[i][live_cols[c]] = v;
  }
  dense_smith(a, out);
  return out;
}

}  // namespace

void SparseMatrix::add(int r, int c, std::int64_t v) {
  if (r < 0 || r >= rows || c < 0 || c >= cols) {
    throw Error(ErrorKind::ShapeMismatch, "matrix index out of range");
  }
  if (v == 0) return;
  auto& column = col[c];
  auto it = std::lower_bound(column.begin(), column.end(), std::pair<int, std::int64_t>{r, INT64_MIN});
  if (it != column.end() && it->first == r) {
    it->second += v;
    if (it->second == 0) column.erase(it);
  } else {
    column.insert(it, {r, v});
  }
}

std::int64_t SparseMatrix::at(int r, int c) const {
  const auto& column = col.at(c);
  auto it = std::lower_bound(column.begin(), column.end(), std::pair<int, std::int64_t>{r, INT64_MIN});
  return (it != column.end() && it->first == r) ? it->second : 0;
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : col) n += c.size();
  return n;
}

void SparseMatrix::canonicalize() {
  for (auto& column : col) {
    std::sort(column.begin(), column.end());
    std::vector<std::pair<int, std::int64_t>> out;
    for (const auto& e : column) {
      if (!out.empty() && out.back().first == e.first) {
        out.back().second += e.second;
      } else {
        out.push_back(e);
      }
    }
    std::erase_if(out, [](const auto& e) { return e.second == 0; });
    column.swap(out);
  }
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols, rows);
  for (int c = 0; c < cols; ++c) {
    for (const auto& [r, v] : col[c]) t.col[r].push_back({c, v});
  }
  return t;
}

SparseMatrix SparseMatrix::scaled(std::int64_t s) const {
  SparseMatrix out(rows, cols);
  if (s == 0) return out;
  for (int c = 0; c < cols; ++c) {
    for (const auto& [r, v] : col[c]) out.col[c].push_back({r, v * s});
  }
  return out;
}

SparseMatrix SparseMatrix::mod2() const {
  SparseMatrix out(rows, cols);
  for (int c = 0; c < cols; ++c) {
    for (const auto& [r, v] : col[c]) {
      if (v & 1) out.col[c].push_back({r, 1});
    }
  }
  return out;
}

std::vector<std::vector<std::int64_t>> SparseMatrix::dense() const {
  std::vector<std::vector<std::int64_t>> out(rows, std::vector<std::int64_t>(cols, 0));
  for (int c = 0; c < cols; ++c) {
    for (const auto& [r, v] : col[c]) out[r][c] = v;
  }
  return out;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<std::int64_t>>& m) {
  const int r = static_cast<int>(m.size());
  const int c = r ? static_cast<int>(m[0].size()) : 0;
  SparseMatrix out(r, c);
  for (int j = 0; j < c; ++j) {
    for (int i = 0; i < r; ++i) {
      if (m[i][j] != 0) out.col[j].push_back({i, m[i][j]});
    }
  }
  return out;
}

SparseMatrix SparseMatrix::identity(int n) {
  SparseMatrix out(n, n);
  for (int i = 0; i < n; ++i) out.col[i].push_back({i, 1});
  return out;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols != b.rows) throw Error(ErrorKind::ShapeMismatch, "matrix product shape mismatch");
  SparseMatrix out(a.rows, b.cols);
  std::map<int, std::int64_t> acc;
  for (int c = 0; c < b.cols; ++c) {
    acc.clear();
    for (const auto& [k, v] : b.col[c]) {
      for (const auto& [r, w] : a.col[k]) acc[r] += v * w;
    }
    for (const auto& [r, v] : acc) {
      if (v != 0) out.col[c].push_back({r, v});
    }
  }
  return out;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) {
    throw Error(ErrorKind::ShapeMismatch, "matrix sum shape mismatch");
  }
  SparseMatrix out = a;
  for (int c = 0; c < b.cols; ++c) {
    for (const auto& e : b.col[c]) out.col[c].push_back(e);
  }
  out.canonicalize();
  return out;
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return a + b.scaled(-1); }

SmithResult smith_normal_form(const SparseMatrix& m) {
  try {
    return sparse_smith(m);
  } catch (const Overflow&) {
    return dense_smith_of(m);
  }
}

std::size_t rank_q(const SparseMatrix& m) { return smith_normal_form(m).rank; }

std::size_t rank_f2(const SparseMatrix& m) { return BitMatrix::from_sparse(m.mod2()).rank(); }

BitMatrix::BitMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_((static_cast<std::size_t>(cols) + 63) / 64),
      data_(static_cast<std::size_t>(rows) * words_, 0) {}

void BitMatrix::set(int r, int c, bool v) {
  simd::Word& w = row(r)[c >> 6];
  const simd::Word bit = simd::Word{1} << (c & 63);
  w = v ? (w | bit) : (w & ~bit);
}

BitMatrix BitMatrix::from_sparse(const SparseMatrix& m) {
  BitMatrix out(m.rows, m.cols);
  for (int c = 0; c < m.cols; ++c) {
    for (const auto& [r, v] : m.col[c]) {
      if (v & 1) out.flip(r, c);
    }
  }
  return out;
}

std::size_t BitMatrix::rank(const simd::F2Kernels& k) const {
  BitMatrix a = *this;
  std::size_t rank = 0;
  for (int c = 0; c < cols_ && static_cast<int>(rank) < rows_; ++c) {
    int pivot = -1;
    for (int r = static_cast<int>(rank); r < rows_; ++r) {
      if (a.get(r, c)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != static_cast<int>(rank)) {
      std::swap_ranges(a.row(pivot), a.row(pivot) + words_, a.row(static_cast<int>(rank)));
    }
    const std::size_t from = static_cast<std::size_t>(c) >> 6;
    const simd::Word* prow = a.row(static_cast<int>(rank)) + from;
    for (int r = static_cast<int>(rank) + 1; r < rows_; ++r) {
      if (a.get(r, c)) k.xor_into(a.row(r) + from, prow, words_ - from);
    }
    ++rank;
  }
  return rank;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if (get(r, c)) t.flip(c, r);
    }
  }
  return t;
}

BitMatrix BitMatrix::multiply(const BitMatrix& other, const simd::F2Kernels& k) const {
  if (cols_ != other.rows_) throw Error(ErrorKind::ShapeMismatch, "bit matrix product shape");
  const BitMatrix t = other.transpose();
  BitMatrix out(rows_, other.cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < other.cols_; ++c) {
      if (k.and_parity(row(r), t.row(c), words_)) out.flip(r, c);
    }
  }
  return out;
}

bool BitMatrix::is_zero(const simd::F2Kernels& k) const {
  return !k.any_nonzero(data_.data(), data_.size());
}

}  // namespace oddkh
