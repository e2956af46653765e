#include "lcseq/enumerate.hpp"

#include <optional>
#include <string>

namespace lcseq {

namespace {

void require_count_params(std::uint64_t q, std::size_t n, std::size_t r) {
  if (q < 2) throw Error(ErrorCode::BadParams, "q must be at least 2");
  if (r > n) throw Error(ErrorCode::BadParams, "need r <= n, got r=" + std::to_string(r) + " n=" + std::to_string(n));
}

BigCount exact_div(const BigCount& num, const BigCount& den) {
  BigCount quot, rem;
  boost::multiprecision::divide_qr(num, den, quot, rem);
  if (rem != 0) throw Error(ErrorCode::InexactDivision, num.str() + " / " + den.str());
  return quot;
}

}  // namespace

bool is_prime_power(std::uint64_t q) noexcept {
  if (q < 2) return false;
  std::uint64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) return true;  // q itself is prime
  while (q % p == 0) q /= p;
  return q == 1;
}

BigCount count_le_closed(std::uint64_t q, std::size_t n, std::size_t r) {
  require_count_params(q, n, r);
  if (r == 0) return 1;
  const BigCount q1 = BigCount(q) + 1;
  if (r + 1 <= n - r) return exact_div(big_pow(q, 2 * r + 1) + 1, q1);
  return exact_div(1 - big_pow(q, 2 * (n - r)), q1) + big_pow(q, n);
}

BigCount count_le_recur(std::uint64_t q, std::size_t n, std::size_t r) {
  require_count_params(q, n, r);
  // Walk the chain (n - 2j, r - j) down to an anchor, then unwind.
  std::size_t depth = 0;
  BigCount value;
  while (true) {
    const std::size_t nn = n - 2 * depth, rr = r - depth;
    if (rr == 0) {
      value = 1;
      break;
    }
    if (rr >= nn) {
      value = big_pow(q, nn);
      break;
    }
    ++depth;
  }
  const BigCount q2 = BigCount(q) * q;
  for (; depth > 0; --depth) value = 1 - BigCount(q) + q2 * value;
  return value;
}

BigCount count_le_sum(std::uint64_t q, std::size_t n, std::size_t r) {
  require_count_params(q, n, r);
  std::vector<BigCount> qpow(n + 2);
  qpow[0] = 1;
  for (std::size_t i = 1; i < qpow.size(); ++i) qpow[i] = qpow[i - 1] * q;

  // Every term refers to b(n - 2j, r - j) for some j >= 1, so memoize by j.
  std::vector<std::optional<BigCount>> memo(r + 1);
  auto b = [&](auto&& self, std::size_t j) -> BigCount {
    if (memo[j]) return *memo[j];
    const std::size_t nn = n - 2 * j, rr = r - j;
    BigCount total = 1;
    if (rr > 0) {
      const std::size_t reduced_end = rr + 1 <= nn - rr ? rr : (nn - rr >= 1 ? nn - rr - 1 : 0);
      for (std::size_t u = 0; u < reduced_end; ++u) total += qpow[u + 1] * (q - 1) * self(self, j + u + 1);
      if (nn - rr <= rr) {
        // First-nonzero index u >= 0, so the tail starts at max(0, nn-rr-1).
        const std::size_t tail_begin = nn - rr >= 1 ? nn - rr - 1 : 0;
        for (std::size_t u = tail_begin; u < rr; ++u) total += (q - 1) * qpow[nn - u - 1];
      }
    }
    memo[j] = total;
    return total;
  };
  return b(b, 0);
}

BigCount count_exact(std::uint64_t q, std::size_t n, std::size_t r) {
  require_count_params(q, n, r);
  if (r == 0) return 1;
#ifdef LCSEQ_MUTATION_SMOKE
  // Deliberate off-by-one exponent; compiled only into the mutation smoke test.
  if (r <= n / 2) return big_pow(q, 2 * r) * (q - 1);
#else
  if (r <= n / 2) return big_pow(q, 2 * r - 1) * (q - 1);
#endif
  return big_pow(q, 2 * (n - r)) * (q - 1);
}

BigCount count_first_nonzero(std::uint64_t q, std::size_t n, std::size_t r, std::size_t u) {
  require_count_params(q, n, r);
  if (u >= n) throw Error(ErrorCode::BadParams, "first-nonzero index must be below n");
  const bool short_regime = r + 1 <= n - r;  // otherwise n - r <= r
  if (u >= r) return 0;                       // cases (i) and (iii)
  if (!short_regime && u + 1 >= n - r) {      // case (ii): r > u >= n-r-1
    return big_pow(q, n - u - 1) * (q - 1);
  }
  // Case (iv): u < r in the short regime, u < n-r-1 otherwise.
  return big_pow(q, u + 1) * (q - 1) * count_le_closed(q, n - 2 * u - 2, r - u - 1);
}

ComplexityHistogram brute_histogram(const Field& field, std::size_t n, std::uint64_t max_space) {
  const std::uint64_t q = field.q();
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (space > max_space / q) {
      throw Error(ErrorCode::OracleTooLarge, "q^n exceeds the limit of " + std::to_string(max_space));
    }
    space *= q;
  }
  std::vector<std::uint64_t> tally(n + 1, 0);
  std::vector<FieldElement> s(n);
  for (std::uint64_t idx = 0; idx < space; ++idx) {
    ++tally[linear_complexity(field, s)];
    for (auto& x : s) {
      if (++x.value < q) break;
      x.value = 0;
    }
  }
  ComplexityHistogram hist{q, n, {}};
  hist.counts.assign(tally.begin(), tally.end());
  return hist;
}

BigCount sphere_packing_bound(std::uint64_t q, std::size_t n, std::size_t d) {
  if (q < 2 || d < 1 || d > n) throw Error(ErrorCode::BadParams, "sphere packing needs q >= 2 and 1 <= d <= n");
  const std::size_t t = (d - 1) / 2;
  return big_pow(q, n) / count_le_closed(q, n, t);
}

boost::multiprecision::cpp_rational sphere_packing_printed(std::uint64_t q, std::size_t n, std::size_t d) {
  using boost::multiprecision::cpp_rational;
  if (q < 2 || d < 1 || d > n) throw Error(ErrorCode::BadParams, "sphere packing needs q >= 2 and 1 <= d <= n");
  const std::size_t t = (d - 1) / 2;
  const BigCount num = big_pow(q, n) * (q + 1);
  if (2 * t <= n - 1) return cpp_rational(num, big_pow(q, 2 * t) + 1);
  return cpp_rational(num, 1 - big_pow(q, 2 * (n - t)) + (1 + BigCount(q)) * big_pow(q, n));
}

MatrixFq persymmetric_matrix(const Sequence& s, std::size_t r) {
  const std::size_t n = s.size();
  if (r >= n) throw Error(ErrorCode::BadParams, "persymmetric matrix needs r < n");
  MatrixFq a(s.field, r + 1, n - r);
  for (std::size_t i = 0; i <= r; ++i) {
    for (std::size_t k = 0; k < n - r; ++k) a.at(i, k) = s[i + k];
  }
  return a;
}

DaykinWitness daykin_reduce(const Sequence& s, std::size_t r) {
  const Field& f = s.field;
  const std::size_t n = s.size();
  std::size_t u = 0;
  while (u < n && s[u].value == 0) ++u;
  if (u == n) throw Error(ErrorCode::BadRegime, "zero sequence has no first nonzero index");
  if (!(u < r && u + r + 1 < n)) {
    throw Error(ErrorCode::BadRegime, "need u < min(r, n-r-1), got u=" + std::to_string(u) +
                                          " r=" + std::to_string(r) + " n=" + std::to_string(n));
  }

  std::vector<FieldElement> theta(n - u);
  theta[0] = f.inv(s[u]);
  for (std::size_t i = 1; i < theta.size(); ++i) {
    FieldElement acc = f.zero();
    for (std::size_t l = 1; l <= i; ++l) acc = f.add(acc, f.mul(s[u + l], theta[i - l]));
    theta[i] = f.neg(f.mul(theta[0], acc));
  }

  const std::size_t cols = n - r;
  MatrixFq lower(f, r + 1, r + 1);  // lower-triangular Toeplitz
  for (std::size_t i = 0; i <= r; ++i) {
    for (std::size_t k = 0; k <= i; ++k) lower.at(i, k) = theta[i - k];
  }
  MatrixFq upper(f, cols, cols);  // upper-triangular Toeplitz
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t k = j; k < cols; ++k) upper.at(j, k) = theta[k - j];
  }
  MatrixFq x(f, u + 1, u + 1);  // anti-triangular Hankel
  for (std::size_t i = 0; i <= u; ++i) {
    for (std::size_t j = 0; j <= u; ++j) {
      if (i + j >= u) x.at(i, j) = theta[i + j - u];
    }
  }
  MatrixFq y(f, r - u, cols - u - 1);  // Hankel from theta_{u+2}
  for (std::size_t i = 0; i < y.rows(); ++i) {
    for (std::size_t j = 0; j < y.cols(); ++j) y.at(i, j) = theta[u + 2 + i + j];
  }
  return DaykinWitness{u, std::move(theta), persymmetric_matrix(s, r), std::move(lower), std::move(upper),
                       std::move(x), std::move(y)};
}

namespace {

bool last_row_dependent(const MatrixFq& m) { return mat_rank(m) == mat_rank(m.top_rows(m.rows() - 1)); }

}  // namespace

bool daykin_check(const Sequence& s, std::size_t r) {
  const DaykinWitness w = daykin_reduce(s, r);
  const Field& f = s.field;
  const MatrixFq product = w.U * w.A * w.V;

  const std::size_t u = w.u;
  for (std::size_t i = 0; i < product.rows(); ++i) {
    for (std::size_t j = 0; j < product.cols(); ++j) {
      FieldElement expected = f.zero();
      if (i <= u && j <= u) {
        expected = w.X.at(i, j);
      } else if (i > u && j > u) {
        expected = f.neg(w.Y.at(i - u - 1, j - u - 1));
      }
      if (product.at(i, j) != expected) return false;
    }
  }
  return last_row_dependent(w.A) == last_row_dependent(w.Y);
}

}  // namespace lcseq
