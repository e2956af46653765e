#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lcseq/field.hpp"
#include "lcseq/lfsr.hpp"

namespace lcseq {

// Reed-Solomon code evaluating polynomials of degree < k at every element of
// F_q^*, in ascending element order.
struct RsParams {
  Field field;
  std::size_t n;  // q - 1
  std::size_t k;
  std::vector<FieldElement> alphas;

  // Throws BadParams unless 1 <= k <= q - 1.
  RsParams(Field f, std::size_t dimension);
};

// Number of nonzero entries.
std::size_t hamming_weight(const Sequence& s);
std::size_t hamming_distance(const Sequence& a, const Sequence& b);

// (q-1) x (q-1) matrix with entry (i, j) = c_{(i+j) mod (q-1)}. The vector
// must hold the q-1 coefficients of a polynomial of degree <= q-2.
MatrixFq circulant(const Field& field, std::span<const FieldElement> coeffs);

// Roots of f in F_q^* as (q - 1) - rank(circulant(f)).
std::size_t konig_rados_roots(const Field& field, std::span<const FieldElement> coeffs);
// Roots of f in F_q^* by evaluating at every nonzero element.
std::size_t count_roots_direct(const Field& field, std::span<const FieldElement> coeffs);

Sequence rs_encode(const RsParams& params, std::span<const FieldElement> message);

// Unique polynomial of degree < points.size() through the points. Throws
// DuplicateX when two x-values coincide.
Polynomial lagrange_interpolate(const Field& field, std::span<const std::pair<FieldElement, FieldElement>> points);

// Linear complexity of the periodic extension of s, via Berlekamp-Massey on
// s followed by itself. Throws EmptySequence.
std::size_t periodic_lc(const Sequence& s);

struct RsDecodeResult {
  std::vector<FieldElement> message;
  Sequence error;
};

// Interpolates the received word, runs Berlekamp-Massey on the coefficients
// of index >= k (those belong to the error polynomial alone), extends that
// recurrence backwards to recover the remaining error coefficients and
// evaluates them. Throws DecodeFailure when the result exceeds the radius
// floor((n-k)/2), the recurrence cannot be run backwards, or re-encoding
// does not reproduce the received word.
RsDecodeResult rs_decode_via_bm(const RsParams& params, const Sequence& received);

}  // namespace lcseq
