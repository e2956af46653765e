#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lcseq/bigcount.hpp"
#include "lcseq/lfsr.hpp"

namespace lcseq {

// The optimal set S = {(0, ..., 0, a_1, ..., a_k)} of length n and dimension
// k; its minimum LC distance is n - k + 1.
struct OssParams {
  Field field;
  std::size_t n;
  std::size_t k;

  // Throws BadParams unless 1 <= k <= n.
  OssParams(Field f, std::size_t length, std::size_t dimension);

  std::size_t min_distance() const noexcept { return n - k + 1; }
};

struct DecodeResult {
  std::vector<FieldElement> message;
  Sequence error;
  Sequence corrected;
};

Sequence oss_encode(const OssParams& params, std::span<const FieldElement> message);

// Recovers the error from the first n-k entries with Berlekamp-Massey and
// extends its register over the whole word. Throws DecodeFailure when the
// recovered error lies outside the unique-decoding radius 2 L(e) <= n - k.
DecodeResult oss_decode(const OssParams& params, const Sequence& received);

// All q^k codewords in message-odometer order (first message entry fastest).
std::vector<Sequence> oss_codebook(const OssParams& params, std::uint64_t max_words = std::uint64_t{1} << 24);

// Minimum LC distance over pairs of distinct elements (repeats are ignored).
// Throws DegenerateSet for fewer than two distinct elements, LengthMismatch
// for ragged sets, TooLarge past `max_pairs`.
std::size_t min_distance_exhaustive(const std::vector<Sequence>& set, std::uint64_t max_pairs = 1'000'000);

// q^(n-d+1). Throws BadParams unless 1 <= d <= n.
BigCount singleton_bound(std::uint64_t q, std::size_t n, std::size_t d);

// Entry j is sum_i weights[i] * s_{i+j} for j = 0..n-d: the weight row vector
// times the d x (n-d+1) window matrix of s. The default weights are all ones;
// any weight vector must have length d and last entry 1.
std::vector<FieldElement> singleton_projection(const Sequence& s, std::size_t d,
                                               std::optional<std::vector<FieldElement>> weights = std::nullopt);

}  // namespace lcseq
