#include "lcseq/lfsr.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace lcseq {

Sequence::Sequence(Field f, std::vector<FieldElement> e) : field(std::move(f)), elems(std::move(e)) {
  for (auto x : elems) field.check(x);
}

Sequence Sequence::zeros(Field f, std::size_t n) { return Sequence(std::move(f), std::vector<FieldElement>(n)); }

bool Sequence::is_zero() const noexcept {
  return std::all_of(elems.begin(), elems.end(), [](FieldElement x) { return x.value == 0; });
}

namespace {

void require_compatible(const Sequence& a, const Sequence& b) {
  if (!(a.field == b.field)) throw Error(ErrorCode::FieldMismatch, "sequences are over different fields");
  if (a.size() != b.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size()) + " differ");
  }
}

}  // namespace

Sequence operator+(const Sequence& a, const Sequence& b) {
  require_compatible(a, b);
  std::vector<FieldElement> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.field.add(a[i], b[i]);
  return Sequence(a.field, std::move(out));
}

Sequence operator-(const Sequence& a, const Sequence& b) {
  require_compatible(a, b);
  std::vector<FieldElement> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.field.sub(a[i], b[i]);
  return Sequence(a.field, std::move(out));
}

Sequence operator-(const Sequence& a) {
  std::vector<FieldElement> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.field.neg(a[i]);
  return Sequence(a.field, std::move(out));
}

Polynomial::Polynomial(Field f, std::vector<FieldElement> c) : field(std::move(f)), coeffs(std::move(c)) {
  for (auto x : coeffs) field.check(x);
  while (!coeffs.empty() && coeffs.back().value == 0) coeffs.pop_back();
}

std::vector<FieldElement> BmResult::feedback_coeffs() const {
  std::vector<FieldElement> c(complexity);
  for (std::size_t j = 0; j < complexity; ++j) c[j] = feedback.field.neg(feedback.coeff(j));
  return c;
}

LfsrSpec BmResult::register_for(const Sequence& s) const {
  const std::size_t l = std::min(complexity, s.size());
  return LfsrSpec{s.field, feedback_coeffs(),
                  std::vector<FieldElement>(s.elems.begin(), s.elems.begin() + static_cast<std::ptrdiff_t>(l))};
}

Sequence lfsr_generate(const LfsrSpec& spec, std::size_t n) {
  const std::size_t l = spec.order();
  if (spec.init.size() != l) {
    throw Error(ErrorCode::LengthMismatch, "register needs exactly " + std::to_string(l) + " initial terms");
  }
  const Field& f = spec.field;
  std::vector<FieldElement> out(n);
  for (std::size_t i = 0; i < std::min(n, l); ++i) out[i] = spec.init[i];
  for (std::size_t t = l; t < n; ++t) {
    FieldElement acc = f.zero();
    for (std::size_t j = 0; j < l; ++j) acc = f.add(acc, f.mul(spec.coeffs[j], out[t - l + j]));
    out[t] = acc;
  }
  return Sequence(f, std::move(out));
}

Polynomial reciprocal(const Polynomial& f, std::size_t l) {
  if (f.degree() > static_cast<std::ptrdiff_t>(l)) {
    throw Error(ErrorCode::DegreeExceedsOrder,
                "degree " + std::to_string(f.degree()) + " exceeds window " + std::to_string(l));
  }
  std::vector<FieldElement> out(l + 1);
  for (std::size_t k = 0; k <= l; ++k) out[k] = f.coeff(l - k);
  return Polynomial(f.field, std::move(out));
}

namespace {

// Berlekamp-Massey as a straight transcription of the textbook loop:
// f is the connection polynomial, a the copy saved at the last length
// change, m the index of that change and e its discrepancy.
std::size_t bm_core(const Field& field, std::span<const FieldElement> s, std::vector<FieldElement>* connection) {
  const std::size_t n = s.size();
  std::vector<FieldElement> f(n + 1), a(n + 1), saved(n + 1);
  f[0] = field.one();
  a[0] = field.one();
  std::size_t complexity = 0;
  std::ptrdiff_t m = -1;
  FieldElement e = field.one();

  for (std::size_t i = 0; i < n; ++i) {
    FieldElement d = s[i];
    for (std::size_t j = 1; j <= complexity; ++j) d = field.add(d, field.mul(f[j], s[i - j]));
    if (d.value == 0) continue;

    saved = f;
    const FieldElement scale = field.div(d, e);
    const std::size_t shift = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(i) - m);
    for (std::size_t j = 0; j + shift <= n; ++j) {
      if (a[j].value != 0) f[j + shift] = field.sub(f[j + shift], field.mul(scale, a[j]));
    }
    if (2 * complexity <= i) {
      complexity = i + 1 - complexity;
      m = static_cast<std::ptrdiff_t>(i);
      a.swap(saved);
      e = d;
    }
  }
  if (connection != nullptr) *connection = std::move(f);
  return complexity;
}

}  // namespace

BmResult berlekamp_massey(const Sequence& s) {
  std::vector<FieldElement> f;
  const std::size_t l = bm_core(s.field, s.elems, &f);
  Polynomial connection(s.field, std::move(f));
  Polynomial feedback = reciprocal(connection, l);
  return BmResult{l, std::move(connection), std::move(feedback)};
}

std::size_t linear_complexity(const Field& field, std::span<const FieldElement> s) {
  return bm_core(field, s, nullptr);
}

std::size_t linear_complexity(const Sequence& s) { return bm_core(s.field, s.elems, nullptr); }

std::size_t lc_distance(const Sequence& a, const Sequence& b) { return linear_complexity(a - b); }

std::size_t min_lfsr_oracle(const Sequence& s, std::uint64_t max_vectors) {
  const Field& field = s.field;
  const std::size_t n = s.size();
  const std::uint64_t q = field.q();
  std::uint64_t vectors = 1;  // q^l
  for (std::size_t l = 0; l < n; ++l) {
    if (vectors > max_vectors) {
      throw Error(ErrorCode::OracleTooLarge,
                  "order " + std::to_string(l) + " needs more than " + std::to_string(max_vectors) + " candidates");
    }
    std::vector<FieldElement> c(l);
    for (std::uint64_t trial = 0; trial < vectors; ++trial) {
      bool holds = true;
      for (std::size_t i = 0; holds && i + l < n; ++i) {
        FieldElement acc = field.zero();
        for (std::size_t j = 0; j < l; ++j) acc = field.add(acc, field.mul(c[j], s[i + j]));
        holds = acc == s[i + l];
      }
      if (holds) return l;
      // Next coefficient vector in base-q odometer order.
      for (std::size_t j = 0; j < l; ++j) {
        if (++c[j].value < q) break;
        c[j].value = 0;
      }
    }
    vectors = vectors > std::numeric_limits<std::uint64_t>::max() / q ? std::numeric_limits<std::uint64_t>::max()
                                                                      : vectors * q;
  }
  return n;
}

bool generating_function_check(const LfsrSpec& spec, std::size_t n) {
  const std::size_t l = spec.order();
  if (n < 2 * l) throw Error(ErrorCode::BadParams, "generating function check needs n >= 2l");
  const Field& f = spec.field;
  const Sequence a = lfsr_generate(spec, n);

  std::vector<FieldElement> feedback(l + 1);
  for (std::size_t j = 0; j < l; ++j) feedback[j] = f.neg(spec.coeffs[j]);
  feedback[l] = f.one();
  const Polynomial denom = reciprocal(Polynomial(f, std::move(feedback)), l);

  for (std::size_t k = l; k < n; ++k) {
    FieldElement coeff = f.zero();
    for (std::size_t i = 0; i <= k && i <= l; ++i) coeff = f.add(coeff, f.mul(denom.coeff(i), a[k - i]));
    if (coeff.value != 0) return false;
  }
  return true;
}

}  // namespace lcseq
