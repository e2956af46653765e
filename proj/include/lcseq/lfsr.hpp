#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lcseq/field.hpp"

namespace lcseq {

// A finite sequence (a_0, ..., a_{n-1}) over a finite field.
struct Sequence {
  Field field;
  std::vector<FieldElement> elems;

  Sequence(Field f, std::vector<FieldElement> e);
  static Sequence zeros(Field f, std::size_t n);

  std::size_t size() const noexcept { return elems.size(); }
  bool empty() const noexcept { return elems.empty(); }
  FieldElement operator[](std::size_t i) const { return elems[i]; }
  bool is_zero() const noexcept;

  friend bool operator==(const Sequence&, const Sequence&) = default;
};

// Elementwise arithmetic; throws LengthMismatch or FieldMismatch.
Sequence operator+(const Sequence& a, const Sequence& b);
Sequence operator-(const Sequence& a, const Sequence& b);
Sequence operator-(const Sequence& a);

// Polynomial over a finite field, coefficients low-to-high with trailing
// zeros trimmed. The zero polynomial has no coefficients.
struct Polynomial {
  Field field;
  std::vector<FieldElement> coeffs;

  Polynomial(Field f, std::vector<FieldElement> c);

  bool is_zero() const noexcept { return coeffs.empty(); }
  // -1 for the zero polynomial.
  std::ptrdiff_t degree() const noexcept { return static_cast<std::ptrdiff_t>(coeffs.size()) - 1; }
  FieldElement coeff(std::size_t i) const noexcept { return i < coeffs.size() ? coeffs[i] : FieldElement{}; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

// Register of order l: a_{i+l} = sum_{j<l} coeffs[j] * a_{i+j}, seeded with init.
struct LfsrSpec {
  Field field;
  std::vector<FieldElement> coeffs;
  std::vector<FieldElement> init;

  std::size_t order() const noexcept { return coeffs.size(); }
};

struct BmResult {
  std::size_t complexity = 0;
  // 1 + f_1 z + ... + f_L z^L as produced by Berlekamp-Massey.
  Polynomial connection;
  // z^L - sum_j c_j z^j, the monic reciprocal of `connection` in window L.
  Polynomial feedback;

  // The register coefficients c_0..c_{L-1}.
  std::vector<FieldElement> feedback_coeffs() const;
  // The register that regenerates `s` from its first L terms.
  LfsrSpec register_for(const Sequence& s) const;
};

Sequence lfsr_generate(const LfsrSpec& spec, std::size_t n);

// z^l f(1/z). Throws DegreeExceedsOrder when deg f > l.
Polynomial reciprocal(const Polynomial& f, std::size_t l);

BmResult berlekamp_massey(const Sequence& s);

// Allocation-light BM returning only L, for exhaustive sweeps.
std::size_t linear_complexity(const Field& field, std::span<const FieldElement> s);
std::size_t linear_complexity(const Sequence& s);

// L(a - b). Throws LengthMismatch or FieldMismatch.
std::size_t lc_distance(const Sequence& a, const Sequence& b);

// Brute-force minimal register order: tries every coefficient vector for
// l = 0, 1, 2, ... and returns the first l whose recurrence holds at all
// indices 0 <= i <= n-1-l. Throws OracleTooLarge once q^l exceeds `max_vectors`
// before an answer is found.
std::size_t min_lfsr_oracle(const Sequence& s, std::uint64_t max_vectors = std::uint64_t{1} << 20);

// Checks that (sum_{i<n} a_i z^i) * f*(z) has no terms in degrees l..n-1,
// where f* is the reciprocal feedback polynomial. Requires n >= 2l.
bool generating_function_check(const LfsrSpec& spec, std::size_t n);

}  // namespace lcseq
