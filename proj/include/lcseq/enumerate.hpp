#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lcseq/bigcount.hpp"
#include "lcseq/field.hpp"
#include "lcseq/lfsr.hpp"

namespace lcseq {

// Counting takes q as a bare integer >= 2; the formulas only need its value.
bool is_prime_power(std::uint64_t q) noexcept;

// b(n, r): the number of length-n sequences with linear complexity at most r,
// i.e. the size of the LC-metric ball of radius r. All three routes agree.
//
// Closed form: (q^(2r+1) + 1)/(q + 1) when 2r < n, otherwise
// (1 - q^(2(n-r)))/(1 + q) + q^n. Throws InexactDivision if a division by
// q + 1 ever leaves a remainder.
BigCount count_le_closed(std::uint64_t q, std::size_t n, std::size_t r);
// b(n, r) = 1 - q + q^2 b(n-2, r-1), anchored at b(m, 0) = 1 and b(m, r) = q^m for r >= m.
BigCount count_le_recur(std::uint64_t q, std::size_t n, std::size_t r);
// b(n, r) as the sum over the first-nonzero index u of the reduced counts.
BigCount count_le_sum(std::uint64_t q, std::size_t n, std::size_t r);

// Number of length-n sequences with linear complexity exactly r.
BigCount count_exact(std::uint64_t q, std::size_t n, std::size_t r);

// b(n, r, u): nonzero sequences with LC <= r whose first nonzero index is u.
BigCount count_first_nonzero(std::uint64_t q, std::size_t n, std::size_t r, std::size_t u);

struct ComplexityHistogram {
  std::uint64_t q;
  std::size_t n;
  // counts[r] for r = 0..n.
  std::vector<BigCount> counts;
};

// Tallies linear_complexity over all q^n sequences. Throws OracleTooLarge
// when q^n exceeds `max_space`.
ComplexityHistogram brute_histogram(const Field& field, std::size_t n, std::uint64_t max_space = std::uint64_t{1} << 24);

// floor(q^n / b(n, floor((d-1)/2))).
BigCount sphere_packing_bound(std::uint64_t q, std::size_t n, std::size_t d);

// The rational sphere-packing expression in its two-case printed form. It
// disagrees with q^n / b(n, t) in the first case (denominator q^(2t) + 1
// instead of (q^(2t+1) + 1)/(q + 1)); kept so the difference stays observable.
boost::multiprecision::cpp_rational sphere_packing_printed(std::uint64_t q, std::size_t n, std::size_t d);

// (r+1) x (n-r) matrix with entry (i, k) = a_{i+k}. Requires r < n.
MatrixFq persymmetric_matrix(const Sequence& s, std::size_t r);

// The reduction of the persymmetric matrix A of s to block-diagonal form
// U A V = diag(X, -Y), for first-nonzero index u < min(r, n-r-1).
struct DaykinWitness {
  std::size_t u;
  // theta_0..theta_{n-u-1}: a_u theta_0 = 1, sum_{l<=i} a_{u+l} theta_{i-l} = 0.
  std::vector<FieldElement> theta;
  MatrixFq A, U, V, X, Y;
};

// Throws BadRegime when s is zero or u is outside the reduction's range.
DaykinWitness daykin_reduce(const Sequence& s, std::size_t r);

// True iff U A V equals diag(X, -Y) entrywise and "last row of A depends on
// the others" agrees with the same statement for Y.
bool daykin_check(const Sequence& s, std::size_t r);

}  // namespace lcseq
