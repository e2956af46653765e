#include "lcseq/field.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>
#include <utility>

namespace lcseq {

namespace {

using Coeffs = std::vector<std::uint64_t>;

// Multiplication tables are precomputed for extension fields up to this size.
constexpr std::uint64_t kTableLimit = 256;

void trim(Coeffs& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    const std::int64_t quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

// Remainder of f modulo g over GF(p); g nonzero.
Coeffs poly_rem(Coeffs f, const Coeffs& g, std::uint64_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  const std::uint64_t lead_inv = inv_mod(g.back(), p);
  while (f.size() >= g.size()) {
    const std::uint64_t factor = f.back() * lead_inv % p;
    const std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = (f[shift + i] + (p - factor) * g[i]) % p;
    }
    trim(f);
  }
  return f;
}

// True when f has no monic factor of degree 1..deg(f)/2, by trial division.
bool irreducible_by_trial_division(const Coeffs& f, std::uint64_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    Coeffs g(d + 1, 0);
    g[d] = 1;
    // Enumerate the p^d choices for g_0..g_{d-1} as a base-p odometer.
    while (true) {
      if (poly_rem(f, g, p).empty()) return false;
      std::size_t i = 0;
      while (i < d && ++g[i] == p) g[i++] = 0;
      if (i == d) break;
    }
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

struct Field::Impl {
  std::uint64_t p = 2;
  unsigned m = 1;
  std::uint64_t q = 2;
  Coeffs modulus;
  // mul_table[a * q + b] for small extension fields.
  std::vector<std::uint32_t> mul_table;
};

Field Field::make(std::uint64_t p, unsigned m, std::vector<std::uint64_t> modulus) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (p >= (std::uint64_t{1} << 32)) throw Error(ErrorCode::BadParams, "characteristic must be below 2^32");
  if (m == 0) throw Error(ErrorCode::BadParams, "extension degree must be at least 1");

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->m = m;
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    if (q > (std::numeric_limits<std::uint64_t>::max() >> 1) / p) {
      throw Error(ErrorCode::BadParams, "field order exceeds 2^63");
    }
    q *= p;
  }
  impl->q = q;

  if (m == 1) {
    if (!modulus.empty()) throw Error(ErrorCode::BadModulus, "prime fields take no modulus");
  } else {
    if (modulus.size() != m + 1) {
      throw Error(ErrorCode::BadModulus, "modulus must have degree exactly " + std::to_string(m));
    }
    if (modulus.back() != 1) throw Error(ErrorCode::BadModulus, "modulus must be monic");
    for (auto c : modulus) {
      if (c >= p) throw Error(ErrorCode::BadModulus, "modulus coefficient out of range");
    }
    std::uint64_t candidates = 1;
    for (unsigned i = 0; i < m / 2; ++i) candidates *= p;
    if (candidates > (std::uint64_t{1} << 22)) {
      throw Error(ErrorCode::BadModulus, "modulus too large to verify irreducibility");
    }
    if (!irreducible_by_trial_division(modulus, p)) {
      throw Error(ErrorCode::BadModulus, "modulus is reducible");
    }
    impl->modulus = std::move(modulus);
  }

  Field field(impl);
  if (m > 1 && q <= kTableLimit) {
    std::vector<std::uint32_t> table(q * q);
    for (std::uint64_t a = 0; a < q; ++a) {
      for (std::uint64_t b = 0; b < q; ++b) {
        table[a * q + b] = static_cast<std::uint32_t>(field.mul_ext({a}, {b}).value);
      }
    }
    impl->mul_table = std::move(table);
  }
  return field;
}

std::uint64_t Field::p() const noexcept { return impl_->p; }
unsigned Field::m() const noexcept { return impl_->m; }
std::uint64_t Field::q() const noexcept { return impl_->q; }
const std::vector<std::uint64_t>& Field::modulus() const noexcept { return impl_->modulus; }

bool operator==(const Field& a, const Field& b) noexcept {
  if (a.impl_ == b.impl_) return true;
  return a.p() == b.p() && a.m() == b.m() && a.modulus() == b.modulus();
}

FieldElement Field::from_int(std::int64_t v) const noexcept {
  const auto p = static_cast<std::int64_t>(impl_->p);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return {static_cast<std::uint64_t>(r)};
}

FieldElement Field::element(std::uint64_t index) const {
  FieldElement e{index};
  check(e);
  return e;
}

FieldElement Field::from_coeffs(std::span<const std::uint64_t> coeffs) const {
  if (coeffs.size() > impl_->m) throw Error(ErrorCode::FieldMismatch, "too many coefficients for field");
  std::uint64_t value = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= impl_->p) throw Error(ErrorCode::FieldMismatch, "coefficient out of range");
    value = value * impl_->p + coeffs[i];
  }
  return {value};
}

std::vector<std::uint64_t> Field::coeffs(FieldElement a) const {
  std::vector<std::uint64_t> out(impl_->m);
  for (auto& c : out) {
    c = a.value % impl_->p;
    a.value /= impl_->p;
  }
  return out;
}

void Field::check(FieldElement a) const {
  if (!contains(a)) {
    throw Error(ErrorCode::FieldMismatch,
                "value " + std::to_string(a.value) + " is not an element of GF(" + std::to_string(q()) + ")");
  }
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  const std::uint64_t p = impl_->p;
  if (impl_->m == 1) return {(a.value + b.value) % p};
  std::uint64_t out = 0, scale = 1;
  for (unsigned i = 0; i < impl_->m; ++i) {
    out += ((a.value % p + b.value % p) % p) * scale;
    a.value /= p;
    b.value /= p;
    scale *= p;
  }
  return {out};
}

FieldElement Field::neg(FieldElement a) const {
  check(a);
  const std::uint64_t p = impl_->p;
  if (impl_->m == 1) return {(p - a.value) % p};
  std::uint64_t out = 0, scale = 1;
  for (unsigned i = 0; i < impl_->m; ++i) {
    out += ((p - a.value % p) % p) * scale;
    a.value /= p;
    scale *= p;
  }
  return {out};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement Field::mul_ext(FieldElement a, FieldElement b) const {
  const std::uint64_t p = impl_->p;
  const unsigned m = impl_->m;
  const Coeffs ca = coeffs(a), cb = coeffs(b);
  Coeffs prod(2 * m - 1, 0);
  for (unsigned i = 0; i < m; ++i) {
    if (ca[i] == 0) continue;
    for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
  }
  // The modulus is monic: subtract prod[k] * z^(k-m) * modulus from the top down.
  const Coeffs& mod = impl_->modulus;
  for (std::size_t k = prod.size(); k-- > m;) {
    const std::uint64_t factor = prod[k];
    if (factor == 0) continue;
    for (unsigned i = 0; i <= m; ++i) {
      prod[k - m + i] = (prod[k - m + i] + (p - factor) * mod[i]) % p;
    }
  }
  prod.resize(m);
  return from_coeffs(prod);
}

FieldElement Field::mul(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  if (impl_->m == 1) return {a.value * b.value % impl_->p};
  if (!impl_->mul_table.empty()) return {impl_->mul_table[a.value * impl_->q + b.value]};
  return mul_ext(a, b);
}

FieldElement Field::pow(FieldElement a, std::uint64_t e) const {
  check(a);
  FieldElement result = one();
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

FieldElement Field::inv(FieldElement a) const {
  check(a);
  if (a.value == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (impl_->m == 1) return {inv_mod(a.value, impl_->p)};
  return pow(a, impl_->q - 2);
}

FieldElement Field::div(FieldElement a, FieldElement b) const {
  if (b.value == 0) throw Error(ErrorCode::DivisionByZero, "division by zero");
  return mul(a, inv(b));
}

std::string Field::format(FieldElement a) const {
  check(a);
  if (impl_->m == 1) return std::to_string(a.value);
  std::ostringstream out;
  out << '[';
  const auto cs = coeffs(a);
  for (std::size_t i = 0; i < cs.size(); ++i) out << (i ? "," : "") << cs[i];
  out << ']';
  return out.str();
}

namespace {

std::uint64_t parse_residue(std::string_view digits, std::uint64_t p) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw Error(ErrorCode::ParseError, "'" + std::string(digits) + "' is not a residue");
  }
  if (v >= p) {
    throw Error(ErrorCode::ParseError, "residue " + std::string(digits) + " out of range mod " + std::to_string(p));
  }
  return v;
}

}  // namespace

FieldElement Field::parse(std::string_view token) const {
  if (impl_->m == 1) return {parse_residue(token, impl_->p)};
  if (token.size() < 2 || token.front() != '[' || token.back() != ']') {
    throw Error(ErrorCode::ParseError, "extension element '" + std::string(token) + "' must be bracketed");
  }
  token = token.substr(1, token.size() - 2);
  Coeffs cs;
  while (true) {
    const auto comma = token.find(',');
    cs.push_back(parse_residue(token.substr(0, comma), impl_->p));
    if (comma == std::string_view::npos) break;
    token.remove_prefix(comma + 1);
  }
  if (cs.size() != impl_->m) {
    throw Error(ErrorCode::ParseError, "expected " + std::to_string(impl_->m) + " coefficients");
  }
  return from_coeffs(cs);
}

FieldElement poly_eval(const Field& field, std::span<const FieldElement> coeffs, FieldElement x) {
  field.check(x);
  FieldElement acc = field.zero();
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = field.add(field.mul(acc, x), coeffs[i]);
  return acc;
}

MatrixFq::MatrixFq(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols) {}

MatrixFq::MatrixFq(Field field, std::size_t rows, std::size_t cols, std::vector<FieldElement> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) throw Error(ErrorCode::BadParams, "matrix entry count mismatch");
  for (auto e : entries_) field_.check(e);
}

MatrixFq MatrixFq::top_rows(std::size_t count) const {
  count = std::min(count, rows_);
  return MatrixFq(field_, count, cols_,
                  std::vector<FieldElement>(entries_.begin(), entries_.begin() + count * cols_));
}

MatrixFq operator*(const MatrixFq& a, const MatrixFq& b) {
  if (!(a.field() == b.field())) throw Error(ErrorCode::FieldMismatch, "matrix fields differ");
  if (a.cols() != b.rows()) throw Error(ErrorCode::BadParams, "matrix dimensions do not conform");
  const Field& f = a.field();
  MatrixFq out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const FieldElement aik = a.at(i, k);
      if (aik.value == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, j) = f.add(out.at(i, j), f.mul(aik, b.at(k, j)));
    }
  }
  return out;
}

std::size_t mat_rank(const MatrixFq& matrix) {
  MatrixFq m = matrix;
  const Field& f = m.field();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m.at(pivot, col).value == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(rank, j));
    }
    const FieldElement pinv = f.inv(m.at(rank, col));
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      const FieldElement factor = f.mul(m.at(i, col), pinv);
      if (factor.value == 0) continue;
      for (std::size_t j = col; j < m.cols(); ++j) {
        m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(rank, j)));
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace lcseq
