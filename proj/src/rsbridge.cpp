#include "lcseq/rsbridge.hpp"

#include <algorithm>
#include <string>

namespace lcseq {

RsParams::RsParams(Field f, std::size_t dimension) : field(std::move(f)), n(field.q() - 1), k(dimension) {
  if (k < 1 || k > n) throw Error(ErrorCode::BadParams, "need 1 <= k <= q-1");
  alphas.reserve(n);
  for (std::uint64_t v = 1; v <= n; ++v) alphas.push_back(FieldElement{v});
}

std::size_t hamming_weight(const Sequence& s) {
  return static_cast<std::size_t>(
      std::count_if(s.elems.begin(), s.elems.end(), [](FieldElement x) { return x.value != 0; }));
}

std::size_t hamming_distance(const Sequence& a, const Sequence& b) { return hamming_weight(a - b); }

namespace {

void require_full_length(const Field& field, std::span<const FieldElement> coeffs) {
  if (coeffs.size() != field.q() - 1) {
    throw Error(ErrorCode::BadLength, "coefficient vector must have length q-1 = " + std::to_string(field.q() - 1));
  }
  for (auto c : coeffs) field.check(c);
}

}  // namespace

MatrixFq circulant(const Field& field, std::span<const FieldElement> coeffs) {
  require_full_length(field, coeffs);
  const std::size_t n = coeffs.size();
  MatrixFq a(field, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a.at(i, j) = coeffs[(i + j) % n];
  }
  return a;
}

std::size_t konig_rados_roots(const Field& field, std::span<const FieldElement> coeffs) {
  return coeffs.size() - mat_rank(circulant(field, coeffs));
}

std::size_t count_roots_direct(const Field& field, std::span<const FieldElement> coeffs) {
  require_full_length(field, coeffs);
  std::size_t roots = 0;
  for (std::uint64_t v = 1; v < field.q(); ++v) {
    if (poly_eval(field, coeffs, FieldElement{v}).value == 0) ++roots;
  }
  return roots;
}

Sequence rs_encode(const RsParams& params, std::span<const FieldElement> message) {
  if (message.size() != params.k) {
    throw Error(ErrorCode::BadLength, "message must have " + std::to_string(params.k) + " coefficients");
  }
  std::vector<FieldElement> out(params.n);
  for (std::size_t i = 0; i < params.n; ++i) out[i] = poly_eval(params.field, message, params.alphas[i]);
  return Sequence(params.field, std::move(out));
}

Polynomial lagrange_interpolate(const Field& field, std::span<const std::pair<FieldElement, FieldElement>> points) {
  const std::size_t count = points.size();
  for (std::size_t i = 0; i < count; ++i) {
    field.check(points[i].first);
    field.check(points[i].second);
    for (std::size_t j = 0; j < i; ++j) {
      if (points[i].first == points[j].first) {
        throw Error(ErrorCode::DuplicateX, "x = " + field.format(points[i].first) + " appears twice");
      }
    }
  }

  // master(x) = prod_j (x - x_j), degree `count`.
  std::vector<FieldElement> master(count + 1);
  master[0] = field.one();
  for (std::size_t j = 0; j < count; ++j) {
    for (std::size_t d = j + 2; d-- > 0;) {
      const FieldElement shifted = d > 0 ? master[d - 1] : field.zero();
      master[d] = field.sub(shifted, field.mul(points[j].first, master[d]));
    }
  }

  std::vector<FieldElement> result(count);
  std::vector<FieldElement> basis(count);
  for (std::size_t i = 0; i < count; ++i) {
    const FieldElement xi = points[i].first;
    // master / (x - x_i) by synthetic division.
    FieldElement carry = field.zero();
    for (std::size_t d = count; d-- > 0;) {
      carry = field.add(master[d + 1], field.mul(carry, xi));
      basis[d] = carry;
    }
    const FieldElement denom = poly_eval(field, basis, xi);
    const FieldElement scale = field.div(points[i].second, denom);
    for (std::size_t d = 0; d < count; ++d) result[d] = field.add(result[d], field.mul(scale, basis[d]));
  }
  return Polynomial(field, std::move(result));
}

std::size_t periodic_lc(const Sequence& s) {
  if (s.empty()) throw Error(ErrorCode::EmptySequence, "periodic complexity of an empty sequence");
  std::vector<FieldElement> doubled(s.elems);
  doubled.insert(doubled.end(), s.elems.begin(), s.elems.end());
  return linear_complexity(s.field, doubled);
}

RsDecodeResult rs_decode_via_bm(const RsParams& params, const Sequence& received) {
  const Field& f = params.field;
  const std::size_t n = params.n, k = params.k;
  if (!(received.field == f)) throw Error(ErrorCode::FieldMismatch, "received word over wrong field");
  if (received.size() != n) throw Error(ErrorCode::BadLength, "received word must have length q-1");

  std::vector<std::pair<FieldElement, FieldElement>> points(n);
  for (std::size_t i = 0; i < n; ++i) points[i] = {params.alphas[i], received[i]};
  const Polynomial interpolated = lagrange_interpolate(f, points);
  std::vector<FieldElement> coeffs(n);
  for (std::size_t i = 0; i < n; ++i) coeffs[i] = interpolated.coeff(i);

  // Coefficients of index >= k come from the error polynomial alone.
  const Sequence tail(f, std::vector<FieldElement>(coeffs.begin() + static_cast<std::ptrdiff_t>(k), coeffs.end()));
  const BmResult bm = berlekamp_massey(tail);
  const std::size_t l = bm.complexity;
  if (2 * l > n - k) {
    throw Error(ErrorCode::DecodeFailure, "error recurrence of order " + std::to_string(l) + " exceeds the radius");
  }
  const std::vector<FieldElement> c = bm.feedback_coeffs();
  if (l > 0 && c[0].value == 0) {
    throw Error(ErrorCode::DecodeFailure, "error recurrence cannot be run backwards");
  }

  // e_{j+l} = sum_i c_i e_{j+i}, solved for e_j from j = k-1 down to 0.
  std::vector<FieldElement> error_coeffs(n);
  std::copy(tail.elems.begin(), tail.elems.end(), error_coeffs.begin() + static_cast<std::ptrdiff_t>(k));
  if (l > 0) {
    const FieldElement c0_inv = f.inv(c[0]);
    for (std::size_t j = k; j-- > 0;) {
      FieldElement acc = error_coeffs[j + l];
      for (std::size_t i = 1; i < l; ++i) acc = f.sub(acc, f.mul(c[i], error_coeffs[j + i]));
      error_coeffs[j] = f.mul(acc, c0_inv);
    }
  }

  std::vector<FieldElement> error(n);
  for (std::size_t i = 0; i < n; ++i) error[i] = poly_eval(f, error_coeffs, params.alphas[i]);
  Sequence error_seq(f, std::move(error));

  std::vector<FieldElement> message(k);
  for (std::size_t i = 0; i < k; ++i) message[i] = f.sub(coeffs[i], error_coeffs[i]);

  if (2 * hamming_weight(error_seq) > n - k) {
    throw Error(ErrorCode::DecodeFailure, "recovered error weight exceeds the radius");
  }
  if (rs_encode(params, message) + error_seq != received) {
    throw Error(ErrorCode::DecodeFailure, "re-encoding does not reproduce the received word");
  }
  return RsDecodeResult{std::move(message), std::move(error_seq)};
}

}  // namespace lcseq
