#pragma once

// Prime field arithmetic and dense linear algebra over F_p.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "liecheck/errors.hpp"

namespace liecheck {

using Residue = std::uint32_t;

bool is_prime(std::uint64_t n);

// Modulus context. Residues handed to it are assumed to lie in [0, p).
class PrimeField {
 public:
  explicit PrimeField(Residue p);

  Residue p() const noexcept { return p_; }

  Residue reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }
  Residue add(Residue a, Residue b) const noexcept {
    Residue s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + (p_ - b); }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Residue pow(Residue a, std::uint64_t e) const noexcept;
  Residue inv(Residue a) const;  // throws DivisionByZero

  bool operator==(const PrimeField& o) const noexcept { return p_ == o.p_; }

 private:
  Residue p_;
};

// A residue tagged with its modulus. Binary operations reject mixed moduli.
class FpScalar {
 public:
  FpScalar(std::int64_t value, Residue p);

  Residue value() const noexcept { return value_; }
  Residue modulus() const noexcept { return p_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FpScalar operator+(const FpScalar& o) const;
  FpScalar operator-(const FpScalar& o) const;
  FpScalar operator*(const FpScalar& o) const;
  FpScalar operator/(const FpScalar& o) const;
  FpScalar operator-() const;
  FpScalar pow(std::uint64_t e) const;

  bool operator==(const FpScalar& o) const noexcept { return value_ == o.value_ && p_ == o.p_; }

 private:
  struct Unchecked {};
  FpScalar(Residue value, Residue p, Unchecked) : value_(value), p_(p) {}
  void check_same(const FpScalar& o) const;

  Residue value_;
  Residue p_;
};

FpScalar ff_inv(const FpScalar& a);

class FpMatrix {
 public:
  FpMatrix() : rows_(0), cols_(0), p_(2) {}
  FpMatrix(std::size_t rows, std::size_t cols, Residue p);

  static FpMatrix identity(std::size_t n, Residue p);
  static FpMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, Residue p);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Residue modulus() const noexcept { return p_; }
  PrimeField field() const { return PrimeField(p_); }

  Residue operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  Residue& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  std::span<const Residue> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Residue> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  const std::vector<Residue>& data() const noexcept { return data_; }

  FpMatrix transpose() const;
  FpMatrix operator*(const FpMatrix& o) const;
  FpMatrix operator+(const FpMatrix& o) const;
  FpMatrix operator-(const FpMatrix& o) const;
  FpMatrix scaled(Residue s) const;
  FpMatrix pow(std::uint64_t e) const;
  std::vector<Residue> apply(std::span<const Residue> v) const;

  bool is_zero() const noexcept;
  bool operator==(const FpMatrix& o) const noexcept {
    return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && data_ == o.data_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  Residue p_;
  std::vector<Residue> data_;
};

// Row rank by fraction-free elimination. Pivots are taken in the leftmost
// column with a nonzero entry, from the lowest row index available.
std::size_t rank(const FpMatrix& m);

// Some x with A x = b, free variables set to zero; nullopt when inconsistent.
std::optional<std::vector<Residue>> solve(const FpMatrix& a, std::span<const Residue> b);

// Basis of {x : A x = 0}, one vector per row of the result (reduced form).
FpMatrix nullspace(const FpMatrix& a);

// Inverse of a square matrix; nullopt when singular.
std::optional<FpMatrix> inverse(const FpMatrix& a);

// Incrementally maintained echelon basis of a subspace of F_p^n.
class EchelonBasis {
 public:
  EchelonBasis(std::size_t n, Residue p);

  // Adds v to the span; true if the dimension grew.
  bool insert(std::span<const Residue> v);
  bool contains(std::span<const Residue> v) const;
  std::size_t dim() const noexcept { return pivots_.size(); }
  std::size_t ambient() const noexcept { return n_; }

 private:
  std::vector<Residue> reduce(std::span<const Residue> v) const;

  std::size_t n_;
  PrimeField field_;
  std::vector<std::vector<Residue>> rows_;  // pivot entry normalized to 1
  std::vector<std::size_t> pivots_;
};

}  // namespace liecheck
