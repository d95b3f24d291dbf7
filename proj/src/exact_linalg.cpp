#include "torusobs/exact_linalg.hpp"

#include <algorithm>
#include <sstream>

namespace torusobs {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<IntVector> tmp;
  std::size_t cols = rows.size() ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    IntVector row;
    for (long x : r) row.emplace_back(x);
    tmp.push_back(std::move(row));
  }
  return from_rows(tmp, cols);
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

std::vector<IntVector> IntMatrix::row_list() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::select_columns(const IndexSet& cols) const {
  IntMatrix out(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (cols[k] >= cols_) throw std::out_of_range("select_columns: index out of range");
      out(r, k) = (*this)(r, cols[k]);
    }
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return x == 0; });
}

IntVector IntMatrix::apply(std::span<const Integer> v) const {
  if (v.size() != cols_) throw std::invalid_argument("IntMatrix::apply: dimension mismatch");
  IntVector out(rows_, Integer(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (v[c] != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

IntVector IntMatrix::apply(std::span<const std::int64_t> v) const {
  if (v.size() != cols_) throw std::invalid_argument("IntMatrix::apply: dimension mismatch");
  IntVector out(rows_, Integer(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (v[c] != 0) out[r] += (*this)(r, c) * Integer(static_cast<long>(v[c]));
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix product: dimension mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(target, c) += factor * (*this)(source, c);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

std::string format_matrix(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? "," : "") << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer trunc_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HermiteResult hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < h.cols() && pivot_row < h.rows(); ++c) {
    for (;;) {
      // smallest nonzero |entry| at or below pivot_row, lowest index on ties
      std::size_t best = h.rows();
      for (std::size_t i = pivot_row; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        if (best == h.rows() || abs(h(i, c)) < abs(h(best, c))) best = i;
      }
      if (best == h.rows()) break;
      h.swap_rows(pivot_row, best);
      u.swap_rows(pivot_row, best);
      bool clean = true;
      for (std::size_t i = pivot_row + 1; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        Integer q = trunc_div(h(i, c), h(pivot_row, c));
        h.add_row_multiple(i, pivot_row, -q);
        u.add_row_multiple(i, pivot_row, -q);
        if (h(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(pivot_row, c) == 0) continue;
    if (h(pivot_row, c) < 0) {
      h.negate_row(pivot_row);
      u.negate_row(pivot_row);
    }
    for (std::size_t i = 0; i < pivot_row; ++i) {
      Integer q = floor_div(h(i, c), h(pivot_row, c));
      h.add_row_multiple(i, pivot_row, -q);
      u.add_row_multiple(i, pivot_row, -q);
    }
    ++pivot_row;
  }
  return {std::move(h), std::move(u)};
}

bool is_hermite_normal_form(const IntMatrix& h) {
  std::size_t last_pivot = 0;
  bool seen_zero_row = false;
  bool first = true;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    std::size_t p = 0;
    while (p < h.cols() && h(r, p) == 0) ++p;
    if (p == h.cols()) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row) return false;
    if (!first && p <= last_pivot) return false;
    if (h(r, p) <= 0) return false;
    for (std::size_t i = 0; i < r; ++i)
      if (h(i, p) < 0 || h(i, p) >= h(r, p)) return false;
    for (std::size_t i = r + 1; i < h.rows(); ++i)
      if (h(i, p) != 0) return false;
    last_pivot = p;
    first = false;
  }
  return true;
}

SmithResult smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);
  IntMatrix vinv = IntMatrix::identity(cols);

  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows; ++r) std::swap(d(r, a), d(r, b));
    for (std::size_t r = 0; r < cols; ++r) std::swap(v(r, a), v(r, b));
    vinv.swap_rows(a, b);
  };
  // col_target += f * col_source
  auto add_col_multiple = [&](std::size_t target, std::size_t source, const Integer& f) {
    if (f == 0) return;
    for (std::size_t r = 0; r < rows; ++r) d(r, target) += f * d(r, source);
    for (std::size_t r = 0; r < cols; ++r) v(r, target) += f * v(r, source);
    vinv.add_row_multiple(source, target, -f);
  };

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    bool exhausted = false;
    for (;;) {
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (d(i, j) == 0) continue;
          if (bi == rows || abs(d(i, j)) < abs(d(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      if (bi == rows) {
        exhausted = true;
        break;
      }
      d.swap_rows(t, bi);
      u.swap_rows(t, bi);
      swap_cols(t, bj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        Integer q = trunc_div(d(i, t), d(t, t));
        d.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        Integer q = trunc_div(d(t, j), d(t, t));
        add_col_multiple(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      std::size_t bad_row = rows;
      for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (bad_row == rows) break;
      d.add_row_multiple(t, bad_row, 1);
      u.add_row_multiple(t, bad_row, 1);
    }
    if (exhausted) break;
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(d), std::move(u), std::move(v), std::move(vinv)};
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& m) {
  const auto h = hermite_normal_form(m).h;
  std::size_t r = 0;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    bool zero = true;
    for (std::size_t c = 0; c < h.cols() && zero; ++c) zero = h(i, c) == 0;
    if (!zero) ++r;
  }
  return r;
}

Lattice::Lattice(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

Lattice Lattice::from_generators(std::size_t ambient_dim, const std::vector<IntVector>& gens) {
  Lattice l(ambient_dim);
  if (gens.empty()) return l;
  const auto h = hermite_normal_form(IntMatrix::from_rows(gens, ambient_dim)).h;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    IntVector row = h.row(r);
    if (std::all_of(row.begin(), row.end(), [](const Integer& x) { return x == 0; })) break;
    l.basis_.push_back(std::move(row));
  }
  return l;
}

Lattice Lattice::full(std::size_t ambient_dim) {
  return from_generators(ambient_dim, IntMatrix::identity(ambient_dim).row_list());
}

IntMatrix Lattice::basis_matrix() const { return IntMatrix::from_rows(basis_, ambient_dim_); }

IntVector Lattice::reduce(IntVector v) const {
  if (v.size() != ambient_dim_) throw std::invalid_argument("Lattice::reduce: dimension mismatch");
  for (const auto& b : basis_) {
    std::size_t p = 0;
    while (b[p] == 0) ++p;
    Integer q = floor_div(v[p], b[p]);
    if (q == 0) continue;
    for (std::size_t c = p; c < ambient_dim_; ++c) v[c] -= q * b[c];
  }
  return v;
}

bool Lattice::contains(const IntVector& v) const {
  const auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Integer& x) { return x == 0; });
}

Lattice kernel_lattice(const IntMatrix& m) {
  const std::size_t n = m.cols();
  const auto [h, u] = hermite_normal_form(m.transpose());
  std::vector<IntVector> gens;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    bool zero = true;
    for (std::size_t c = 0; c < h.cols() && zero; ++c) zero = h(r, c) == 0;
    if (zero) gens.push_back(u.row(r));
  }
  return Lattice::from_generators(n, gens);
}

bool lattice_equal(const Lattice& a, const Lattice& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("lattice_equal: ambient dimension mismatch");
  return a == b;
}

Lattice saturate(const Lattice& l) {
  if (l.rank() == 0) return l;
  // rows(B) = rows(D * V^{-1}) up to a unimodular left factor, so the first
  // rank rows of V^{-1} span the rational hull intersected with Z^n.
  const auto snf = smith_normal_form(l.basis_matrix());
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < l.rank(); ++i) gens.push_back(snf.right_inverse.row(i));
  return Lattice::from_generators(l.ambient_dim(), gens);
}

}  // namespace torusobs
