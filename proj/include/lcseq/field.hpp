#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lcseq/error.hpp"

namespace lcseq {

// An element of GF(p^m), stored as the base-p packing sum(c_i * p^i) of its
// polynomial coefficients c_0..c_{m-1}. For prime fields this is the residue.
// Canonical values lie in [0, q).
struct FieldElement {
  std::uint64_t value = 0;

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

bool is_prime(std::uint64_t n) noexcept;

// GF(p^m) with an explicit modulus polynomial for m > 1.
//
// Field is a cheap handle onto immutable shared state, so sequences and
// matrices can carry their field by value. Two Field objects compare equal
// when p, m and the modulus agree.
class Field {
 public:
  // Throws NotPrime or BadModulus. `modulus` is low-to-high, monic of degree m,
  // required iff m > 1, and must be irreducible over GF(p).
  static Field make(std::uint64_t p, unsigned m = 1, std::vector<std::uint64_t> modulus = {});
  static Field prime(std::uint64_t p) { return make(p); }

  std::uint64_t p() const noexcept;
  unsigned m() const noexcept;
  std::uint64_t q() const noexcept;
  // Empty for prime fields.
  const std::vector<std::uint64_t>& modulus() const noexcept;

  FieldElement zero() const noexcept { return {0}; }
  FieldElement one() const noexcept { return {1}; }
  // Image of an integer in the prime subfield.
  FieldElement from_int(std::int64_t v) const noexcept;
  // Element from its q-ary index; throws FieldMismatch when index >= q.
  FieldElement element(std::uint64_t index) const;
  // Element from polynomial coefficients (low-to-high, at most m, each < p).
  FieldElement from_coeffs(std::span<const std::uint64_t> coeffs) const;
  std::vector<std::uint64_t> coeffs(FieldElement a) const;

  bool contains(FieldElement a) const noexcept { return a.value < q(); }
  // Throws FieldMismatch when `a` is not a canonical element of this field.
  void check(FieldElement a) const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const;
  FieldElement pow(FieldElement a, std::uint64_t e) const;

  // Element text form: decimal residue for prime fields, "[c0,c1,...]" otherwise.
  std::string format(FieldElement a) const;
  FieldElement parse(std::string_view token) const;

  friend bool operator==(const Field& a, const Field& b) noexcept;

 private:
  struct Impl;
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  FieldElement mul_ext(FieldElement a, FieldElement b) const;

  std::shared_ptr<const Impl> impl_;
};

// Horner evaluation of sum(coeffs[i] * x^i).
FieldElement poly_eval(const Field& field, std::span<const FieldElement> coeffs, FieldElement x);

// Dense row-major matrix over a finite field.
class MatrixFq {
 public:
  MatrixFq(Field field, std::size_t rows, std::size_t cols);
  MatrixFq(Field field, std::size_t rows, std::size_t cols, std::vector<FieldElement> entries);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  FieldElement& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  FieldElement at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  // Submatrix of the first `count` rows.
  MatrixFq top_rows(std::size_t count) const;

  friend bool operator==(const MatrixFq&, const MatrixFq&) = default;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElement> entries_;
};

MatrixFq operator*(const MatrixFq& a, const MatrixFq& b);

// Rank by Gaussian elimination with first-nonzero pivot selection.
std::size_t mat_rank(const MatrixFq& m);

}  // namespace lcseq
