#include "rbl/matrix.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace rbl {

Rational parse_rational(const std::string& text) {
  auto bad = [&] { throw SchemaError("not a rational string: '" + text + "'"); };
  if (text.empty()) bad();
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  std::size_t start = pos, digits = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    ++pos;
    ++digits;
  }
  if (digits == 0) bad();
  Int num(text.substr(start, digits));
  if (negative) num = -num;
  Int den = 1;
  if (pos < text.size()) {
    if (text[pos] != '/') bad();
    std::string dtext = text.substr(pos + 1);
    if (dtext.empty() ||
        !std::all_of(dtext.begin(), dtext.end(),
                     [](unsigned char ch) { return std::isdigit(ch); }))
      bad();
    den = Int(dtext);
    if (den == 0) bad();
  }
  return Rational(num, den);
}

std::string to_string(const Rational& value) {
  std::string s = numerator(value).str();
  if (denominator(value) != 1) s += "/" + denominator(value).str();
  return s;
}

Vec operator+(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec operator*(const Rational& s, const Vec& v) {
  Vec r(v);
  for (auto& x : r) x *= s;
  return r;
}

Vec& operator+=(Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

Matrix Matrix::block_diag(const std::vector<Matrix>& blocks) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Matrix m(r, c);
  std::size_t ro = 0, co = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(ro + i, co + j) = b(i, j);
    ro += b.rows();
    co += b.cols();
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols) {
  std::size_t r = cols.empty() ? 0 : cols.front().size();
  Matrix m(r, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != r) throw std::invalid_argument("ragged column set");
    for (std::size_t i = 0; i < r; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Vec Matrix::column(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vec Matrix::row(std::size_t i) const {
  return Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix m(*this);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  Matrix m(*this);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
  return m;
}

Matrix Matrix::operator-() const {
  Matrix m(*this);
  for (auto& x : m.a_) x = -x;
  return m;
}

Matrix operator*(const Rational& s, const Matrix& m) {
  Matrix r(m);
  for (auto& x : r.a_) x *= s;
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix m(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& aik = (*this)(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) m(i, j) += aik * o(k, j);
    }
  return m;
}

Vec Matrix::operator*(const Vec& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  Vec r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0) r[i] += (*this)(i, j) * v[j];
  return r;
}

Matrix Matrix::transposed() const {
  Matrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return x == 0; });
}

std::size_t rank(const Matrix& m) {
  // Scale each row to integers (rank is invariant), then run Bareiss
  // fraction-free elimination so intermediate entries stay integral.
  std::size_t R = m.rows(), C = m.cols();
  std::vector<std::vector<Int>> a(R, std::vector<Int>(C));
  for (std::size_t i = 0; i < R; ++i) {
    Int lcm = 1;
    for (std::size_t j = 0; j < C; ++j)
      lcm = boost::multiprecision::lcm(lcm, denominator(m(i, j)));
    for (std::size_t j = 0; j < C; ++j)
      a[i][j] = numerator(m(i, j)) * (lcm / denominator(m(i, j)));
  }
  std::size_t r = 0;
  Int prev = 1;
  for (std::size_t col = 0; col < C && r < R; ++col) {
    std::size_t piv = r;
    while (piv < R && a[piv][col] == 0) ++piv;
    if (piv == R) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < R; ++i) {
      for (std::size_t j = col + 1; j < C; ++j)
        a[i][j] = (a[r][col] * a[i][j] - a[i][col] * a[r][j]) / prev;
      a[i][col] = 0;
    }
    prev = a[r][col];
    ++r;
  }
  return r;
}

namespace {

struct Echelon {
  Matrix m;                        // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column per pivot row
};

Echelon rref(Matrix m) {
  std::size_t R = m.rows(), C = m.cols();
  Echelon e{Matrix(0, 0), {}};
  std::size_t r = 0;
  for (std::size_t col = 0; col < C && r < R; ++col) {
    std::size_t piv = r;
    while (piv < R && m(piv, col) == 0) ++piv;
    if (piv == R) continue;
    if (piv != r)
      for (std::size_t j = 0; j < C; ++j) std::swap(m(piv, j), m(r, j));
    Rational inv = Rational(1) / m(r, col);
    for (std::size_t j = col; j < C; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r || m(i, col) == 0) continue;
      Rational f = m(i, col);
      for (std::size_t j = col; j < C; ++j) m(i, j) -= f * m(r, j);
    }
    e.pivots.push_back(col);
    ++r;
  }
  e.m = std::move(m);
  return e;
}

}  // namespace

std::vector<Vec> kernel_basis(const Matrix& m) {
  std::size_t C = m.cols();
  Echelon e = rref(m);
  std::vector<bool> is_pivot(C, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < C; ++free) {
    if (is_pivot[free]) continue;
    Vec v(C);
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      v[e.pivots[r]] = -e.m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  std::size_t R = m.rows(), C = m.cols();
  Matrix aug(R, C + 1);
  for (std::size_t i = 0; i < R; ++i) {
    for (std::size_t j = 0; j < C; ++j) aug(i, j) = m(i, j);
    aug(i, C) = b[i];
  }
  Echelon e = rref(std::move(aug));
  Vec x(C);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == C) return std::nullopt;  // pivot in the rhs column
    x[e.pivots[r]] = e.m(r, C);
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = rref(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] >= n) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.m(i, n + j);
  return inv;
}

ColumnSpace::ColumnSpace(const Matrix& columns) : ambient_(columns.rows()) {
  for (std::size_t j = 0; j < columns.cols(); ++j) insert(columns.column(j));
}

Vec ColumnSpace::reduce(Vec v) const {
  if (v.size() != ambient_) throw std::invalid_argument("ColumnSpace: dim mismatch");
  for (const auto& [pivot, w] : basis_) {
    if (v[pivot] == 0) continue;
    Rational f = v[pivot];  // basis vectors are normalized at their pivot
    for (std::size_t i = 0; i < ambient_; ++i) v[i] -= f * w[i];
  }
  return v;
}

bool ColumnSpace::insert(Vec v) {
  v = reduce(std::move(v));
  std::size_t pivot = 0;
  while (pivot < ambient_ && v[pivot] == 0) ++pivot;
  if (pivot == ambient_) return false;
  Rational inv = Rational(1) / v[pivot];
  for (auto& x : v) x *= inv;
  basis_.emplace_back(pivot, std::move(v));
  return true;
}

}  // namespace rbl
