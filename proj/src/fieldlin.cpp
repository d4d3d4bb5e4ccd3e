#include "liecheck/fieldlin.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <tuple>
#include <utility>

namespace liecheck {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(Residue p) : p_(p) {
  if (p >= (Residue{1} << 31) || !is_prime(p))
    throw PreconditionError("modulus " + std::to_string(p) + " is not a prime below 2^31");
}

Residue PrimeField::pow(Residue a, std::uint64_t e) const noexcept {
  Residue result = 1 % p_;
  Residue base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Residue PrimeField::inv(Residue a) const {
  if (a % p_ == 0) throw DivisionByZero();
  // extended Euclid on (a, p)
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  return reduce(t);
}

FpScalar::FpScalar(std::int64_t value, Residue p) : value_(PrimeField(p).reduce(value)), p_(p) {}

void FpScalar::check_same(const FpScalar& o) const {
  if (p_ != o.p_)
    throw ModulusMismatch("mixing F_" + std::to_string(p_) + " and F_" + std::to_string(o.p_));
}

FpScalar FpScalar::operator+(const FpScalar& o) const {
  check_same(o);
  Residue s = value_ + o.value_;
  return {s >= p_ ? s - p_ : s, p_, Unchecked{}};
}

FpScalar FpScalar::operator-(const FpScalar& o) const {
  check_same(o);
  return {value_ >= o.value_ ? value_ - o.value_ : value_ + (p_ - o.value_), p_, Unchecked{}};
}

FpScalar FpScalar::operator*(const FpScalar& o) const {
  check_same(o);
  return {static_cast<Residue>(static_cast<std::uint64_t>(value_) * o.value_ % p_), p_, Unchecked{}};
}

FpScalar FpScalar::operator/(const FpScalar& o) const {
  check_same(o);
  return *this * ff_inv(o);
}

FpScalar FpScalar::operator-() const { return {value_ == 0 ? 0 : p_ - value_, p_, Unchecked{}}; }

FpScalar FpScalar::pow(std::uint64_t e) const {
  PrimeField f(p_);
  return {f.pow(value_, e), p_, Unchecked{}};
}

FpScalar ff_inv(const FpScalar& a) {
  PrimeField f(a.modulus());
  return FpScalar(f.inv(a.value()), a.modulus());
}

// --- FpMatrix -------------------------------------------------------------

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, Residue p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {
  PrimeField{p};
}

FpMatrix FpMatrix::identity(std::size_t n, Residue p) {
  FpMatrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1 % p;
  return m;
}

FpMatrix FpMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, Residue p) {
  PrimeField f(p);
  std::size_t c = rows.empty() ? 0 : rows.front().size();
  FpMatrix m(rows.size(), c, p);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw DimensionMismatch("ragged rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = f.reduce(rows[i][j]);
  }
  return m;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix t(cols_, rows_, p_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
  if (p_ != o.p_) throw ModulusMismatch("matrix product across moduli");
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape");
  FpMatrix out(rows_, o.cols_, p_);
  const std::uint64_t sq = static_cast<std::uint64_t>(p_ - 1) * (p_ - 1);
  const std::uint64_t chunk =
      sq == 0 ? std::numeric_limits<std::uint64_t>::max() : std::numeric_limits<std::uint64_t>::max() / sq;
  std::vector<std::uint64_t> acc(o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    std::uint64_t pending = 0;
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint64_t a = data_[i * cols_ + k];
      if (a == 0) continue;
      const Residue* brow = o.data_.data() + k * o.cols_;
      for (std::size_t j = 0; j < o.cols_; ++j) acc[j] += a * brow[j];
      if (++pending == chunk) {
        for (auto& v : acc) v %= p_;
        pending = 1;
      }
    }
    for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) = static_cast<Residue>(acc[j] % p_);
  }
  return out;
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
  if (p_ != o.p_) throw ModulusMismatch("matrix sum across moduli");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape");
  FpMatrix out(*this);
  PrimeField f(p_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = f.add(data_[i], o.data_[i]);
  return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const {
  if (p_ != o.p_) throw ModulusMismatch("matrix difference across moduli");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape");
  FpMatrix out(*this);
  PrimeField f(p_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = f.sub(data_[i], o.data_[i]);
  return out;
}

FpMatrix FpMatrix::scaled(Residue s) const {
  FpMatrix out(*this);
  PrimeField f(p_);
  for (auto& v : out.data_) v = f.mul(v, s % p_);
  return out;
}

FpMatrix FpMatrix::pow(std::uint64_t e) const {
  if (rows_ != cols_) throw DimensionMismatch("power of a non-square matrix");
  FpMatrix result = identity(rows_, p_);
  FpMatrix base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

std::vector<Residue> FpMatrix::apply(std::span<const Residue> v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape");
  std::vector<Residue> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      acc += static_cast<std::uint64_t>(data_[i * cols_ + j]) * v[j];
      if ((j & 31) == 31) acc %= p_;
    }
    out[i] = static_cast<Residue>(acc % p_);
  }
  return out;
}

bool FpMatrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Residue v) { return v == 0; });
}

// --- elimination ----------------------------------------------------------

std::size_t rank(const FpMatrix& m) {
  const PrimeField f(m.modulus());
  FpMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = c; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
    const Residue pv = a(r, c);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      const Residue x = a(i, c);
      if (x == 0) continue;
      // row_i <- pv * row_i - x * row_r
      for (std::size_t j = c; j < a.cols(); ++j)
        a(i, j) = f.sub(f.mul(pv, a(i, j)), f.mul(x, a(r, j)));
    }
    ++r;
  }
  return r;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(FpMatrix& a, std::size_t col_limit) {
  const PrimeField f(a.modulus());
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < col_limit && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
    const Residue inv = f.inv(a(r, c));
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = f.mul(a(r, j), inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      const Residue x = a(i, c);
      if (x == 0) continue;
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = f.sub(a(i, j), f.mul(x, a(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<std::vector<Residue>> solve(const FpMatrix& a, std::span<const Residue> b) {
  if (b.size() != a.rows()) throw DimensionMismatch("solve: right-hand side length");
  FpMatrix aug(a.rows(), a.cols() + 1, a.modulus());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    if (b[i] >= a.modulus()) throw ModulusMismatch("solve: right-hand side not reduced");
    aug(i, a.cols()) = b[i];
  }
  const auto pivots = rref(aug, a.cols());
  for (std::size_t i = pivots.size(); i < aug.rows(); ++i)
    if (aug(i, a.cols()) != 0) return std::nullopt;
  std::vector<Residue> x(a.cols(), 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, a.cols());
  return x;
}

FpMatrix nullspace(const FpMatrix& a) {
  FpMatrix r = a;
  const auto pivots = rref(r, a.cols());
  const PrimeField f(a.modulus());
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  FpMatrix basis(free.size(), a.cols(), a.modulus());
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(k, free[k]) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(k, pivots[i]) = f.neg(r(i, free[k]));
  }
  return basis;
}

std::optional<FpMatrix> inverse(const FpMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  FpMatrix aug(n, 2 * n, a.modulus());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  if (rref(aug, n).size() != n) return std::nullopt;
  FpMatrix inv(n, n, a.modulus());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

// --- EchelonBasis -----------------------------------------------------------

EchelonBasis::EchelonBasis(std::size_t n, Residue p) : n_(n), field_(p) {}

std::vector<Residue> EchelonBasis::reduce(std::span<const Residue> v) const {
  if (v.size() != n_) throw DimensionMismatch("echelon basis: vector length");
  std::vector<Residue> w(v.begin(), v.end());
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Residue x = w[pivots_[k]];
    if (x == 0) continue;
    const auto& row = rows_[k];
    for (std::size_t j = pivots_[k]; j < n_; ++j) w[j] = field_.sub(w[j], field_.mul(x, row[j]));
  }
  return w;
}

bool EchelonBasis::insert(std::span<const Residue> v) {
  auto w = reduce(v);
  auto it = std::find_if(w.begin(), w.end(), [](Residue x) { return x != 0; });
  if (it == w.end()) return false;
  const std::size_t piv = static_cast<std::size_t>(it - w.begin());
  const Residue inv = field_.inv(w[piv]);
  for (auto& x : w) x = field_.mul(x, inv);
  // keep rows sorted by pivot so one reduction pass suffices
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
  const auto idx = pos - pivots_.begin();
  pivots_.insert(pos, piv);
  rows_.insert(rows_.begin() + idx, std::move(w));
  return true;
}

bool EchelonBasis::contains(std::span<const Residue> v) const {
  auto w = reduce(v);
  return std::all_of(w.begin(), w.end(), [](Residue x) { return x == 0; });
}

}  // namespace liecheck
