#include <doctest.h>

#include <random>

#include "lcseq/lfsr.hpp"
#include "lcseq/text.hpp"
#include "oracles.hpp"

using namespace lcseq;
using oracle::to_seq;
using oracle::Word;

namespace {

Polynomial poly(const Field& f, Word c) { return Polynomial(f, to_seq(f, c).elems); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("register output") {
  const Field f2 = Field::prime(2), f3 = Field::prime(3);
  const Sequence fib = lfsr_generate(LfsrSpec{f2, to_seq(f2, {1, 1}).elems, to_seq(f2, {0, 1}).elems}, 8);
  CHECK(oracle::to_word(fib) == Word{0, 1, 1, 0, 1, 1, 0, 1});
  CHECK(oracle::to_word(lfsr_generate(LfsrSpec{f2, {}, {}}, 4)) == Word{0, 0, 0, 0});
  const Sequence alt = lfsr_generate(LfsrSpec{f3, to_seq(f3, {2}).elems, to_seq(f3, {1}).elems}, 4);
  CHECK(oracle::to_word(alt) == Word{1, 2, 1, 2});
  // Shorter than the register: just a prefix of the state.
  CHECK(oracle::to_word(lfsr_generate(LfsrSpec{f2, to_seq(f2, {1, 1}).elems, to_seq(f2, {1, 0}).elems}, 1)) == Word{1});
}

TEST_CASE("reciprocal within a window") {
  const Field f3 = Field::prime(3);
  // z^2 - z - 1 = 2 + 2z + z^2 over GF(3)
  CHECK(reciprocal(poly(f3, {2, 2, 1}), 2) == poly(f3, {1, 2, 2}));
  CHECK(reciprocal(poly(f3, {1}), 0) == poly(f3, {1}));
  CHECK(reciprocal(poly(f3, {0, 1}), 1) == poly(f3, {1}));
  CHECK(reciprocal(poly(f3, {1}), 3) == poly(f3, {0, 0, 0, 1}));
  CHECK(code_of([&] { reciprocal(poly(f3, {0, 0, 1}), 1); }) == ErrorCode::DegreeExceedsOrder);
}

TEST_CASE("Berlekamp-Massey worked values") {
  const Field f2 = Field::prime(2), f3 = Field::prime(3);
  CHECK(berlekamp_massey(to_seq(f2, {0, 0, 0})).complexity == 0);
  CHECK(berlekamp_massey(to_seq(f2, {0, 0, 1})).complexity == 3);

  const BmResult alt = berlekamp_massey(to_seq(f2, {1, 0, 1, 0}));
  CHECK(alt.complexity == 2);
  CHECK(oracle::to_word(Sequence(f2, alt.feedback_coeffs())) == Word{1, 0});

  const BmResult fib = berlekamp_massey(to_seq(f2, {1, 1, 0, 1}));
  CHECK(fib.complexity == 2);
  CHECK(oracle::to_word(Sequence(f2, fib.feedback_coeffs())) == Word{1, 1});

  // a_{i+1} = 2 a_i already produces this one.
  CHECK(linear_complexity(to_seq(f3, {1, 2, 1, 2, 1})) == 1);
  CHECK(oracle::shortest_register({1, 2, 1, 2, 1}, 3) == 1);
  CHECK(linear_complexity(to_seq(f3, {1, 2, 2, 1, 1})) == oracle::shortest_register({1, 2, 2, 1, 1}, 3));
  CHECK(linear_complexity(to_seq(f3, {0, 0, 0, 0, 2})) == 5);
  CHECK(linear_complexity(Sequence(f2, {})) == 0);
  CHECK(berlekamp_massey(Sequence(f2, {})).connection == poly(f2, {1}));
}

TEST_CASE("connection and feedback polynomials are consistent") {
  std::mt19937_64 rng(5);
  for (std::uint64_t p : {2u, 3u, 5u}) {
    const Field f = Field::prime(p);
    for (int trial = 0; trial < 300; ++trial) {
      const Sequence s = to_seq(f, oracle::random_word(rng, p, rng() % 14));
      const BmResult bm = berlekamp_massey(s);
      REQUIRE(bm.connection.coeff(0) == f.one());
      REQUIRE(bm.connection.degree() <= static_cast<std::ptrdiff_t>(bm.complexity));
      REQUIRE(bm.feedback.degree() == static_cast<std::ptrdiff_t>(bm.complexity));
      REQUIRE(bm.feedback.coeff(bm.complexity) == f.one());
      REQUIRE(bm.feedback == reciprocal(bm.connection, bm.complexity));
      REQUIRE(lfsr_generate(bm.register_for(s), s.size()) == s);
    }
  }
}

TEST_CASE("complexity matches an independent shortest-register search") {
  for (auto [p, max_n] : {std::pair{2u, 9u}, std::pair{3u, 5u}, std::pair{5u, 3u}}) {
    const Field f = Field::prime(p);
    for (std::size_t n = 0; n <= max_n; ++n) {
      oracle::for_each_word(p, n, [&](const Word& w) {
        const std::size_t expected = oracle::shortest_register(w, p);
        const Sequence s = to_seq(f, w);
        if (linear_complexity(s) != expected || min_lfsr_oracle(s) != expected) {
          FAIL("disagreement on a length-" << n << " word over GF(" << p << ")");
        }
      });
    }
  }
}

TEST_CASE("extension-field sequences regenerate") {
  const Field f4 = Field::make(2, 2, {1, 1, 1});
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<FieldElement> e(rng() % 12);
    for (auto& x : e) x = FieldElement{rng() % 4};
    const Sequence s(f4, e);
    const BmResult bm = berlekamp_massey(s);
    REQUIRE(lfsr_generate(bm.register_for(s), s.size()) == s);
    if (s.size() <= 6) REQUIRE(min_lfsr_oracle(s) == bm.complexity);
  }
}

TEST_CASE("complexity never exceeds the length and reaches it only on (0,...,0,a)") {
  for (std::uint64_t p : {2u, 3u}) {
    const Field f = Field::prime(p);
    for (std::size_t n = 1; n <= 7; ++n) {
      oracle::for_each_word(p, n, [&](const Word& w) {
        const std::size_t l = linear_complexity(to_seq(f, w));
        const bool extremal = oracle::first_nonzero(w) == n - 1;
        if (l > n || (l == n) != extremal) FAIL("bound violated");
      });
    }
  }
}

TEST_CASE("subadditivity over all binary pairs up to length 8") {
  const Field f2 = Field::prime(2);
  for (std::size_t n = 1; n <= 8; ++n) {
    std::vector<Sequence> all;
    std::vector<std::size_t> lc;
    oracle::for_each_word(2, n, [&](const Word& w) {
      all.push_back(to_seq(f2, w));
      lc.push_back(linear_complexity(all.back()));
    });
    std::size_t violations = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = i; j < all.size(); ++j) {
        if (linear_complexity(all[i] + all[j]) > lc[i] + lc[j]) ++violations;
      }
    }
    CHECK(violations == 0);
  }
}

TEST_CASE("negation invariance and randomized subadditivity") {
  std::mt19937_64 rng(17);
  for (std::uint64_t p : {3u, 5u, 7u, 11u}) {
    const Field f = Field::prime(p);
    for (int trial = 0; trial < 500; ++trial) {
      const std::size_t n = rng() % 20;
      const Sequence a = to_seq(f, oracle::random_word(rng, p, n));
      const Sequence b = to_seq(f, oracle::random_word(rng, p, n));
      REQUIRE(linear_complexity(-a) == linear_complexity(a));
      REQUIRE(linear_complexity(a + b) <= linear_complexity(a) + linear_complexity(b));
    }
  }
}

TEST_CASE("distance worked values and errors") {
  const Field f2 = Field::prime(2), f3 = Field::prime(3);
  const Sequence a = to_seq(f2, {1, 1, 1, 1});
  CHECK(lc_distance(a, a) == 0);
  CHECK(lc_distance(a, Sequence::zeros(f2, 4)) == linear_complexity(a));
  CHECK(lc_distance(a, to_seq(f2, {0, 1, 1, 1})) == 1);
  CHECK(oracle::shortest_register({1, 0, 0, 0}, 2) == 1);
  CHECK(lc_distance(a, to_seq(f2, {1, 1, 1, 0})) == 4);
  CHECK(oracle::shortest_register({0, 0, 0, 1}, 2) == 4);
  CHECK(code_of([&] { lc_distance(a, to_seq(f2, {1, 1})); }) == ErrorCode::LengthMismatch);
  CHECK(code_of([&] { lc_distance(a, to_seq(f3, {1, 1, 1, 1})); }) == ErrorCode::FieldMismatch);
}

TEST_CASE("distance is a metric on short ternary words") {
  const Field f3 = Field::prime(3);
  std::vector<Sequence> all;
  oracle::for_each_word(3, 4, [&](const Word& w) { all.push_back(to_seq(f3, w)); });
  std::size_t violations = 0;
  for (const auto& x : all) {
    for (const auto& y : all) {
      const std::size_t dxy = lc_distance(x, y);
      if ((dxy == 0) != (x == y) || dxy != lc_distance(y, x)) ++violations;
    }
  }
  CHECK(violations == 0);
}

TEST_CASE("oracle guard") {
  const Field f5 = Field::prime(5);
  Word w(20, 0);
  w.back() = 1;
  CHECK(code_of([&] { min_lfsr_oracle(to_seq(f5, w)); }) == ErrorCode::OracleTooLarge);
  CHECK(min_lfsr_oracle(Sequence::zeros(f5, 50)) == 0);
  CHECK(min_lfsr_oracle(to_seq(Field::prime(2), {0, 0, 1})) == 3);
}

TEST_CASE("a register of order l can be padded to any longer order") {
  std::mt19937_64 rng(23);
  for (std::uint64_t p : {2u, 3u}) {
    const Field f = Field::prime(p);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = 1 + rng() % 8;
      const Word w = oracle::random_word(rng, p, n);
      const std::size_t l = min_lfsr_oracle(to_seq(f, w));
      const BmResult bm = berlekamp_massey(to_seq(f, w));
      Word c = oracle::to_word(Sequence(f, bm.feedback_coeffs()));
      for (std::size_t i = l; i <= n; ++i) {
        // a_{i'+i} = sum_j c_j a_{i'+j+(i-l)}: shift the taps up by i - l.
        Word padded(i - l, 0);
        padded.insert(padded.end(), c.begin(), c.end());
        REQUIRE(oracle::satisfies(w, padded, p));
      }
    }
  }
}

TEST_CASE("generating function identity") {
  const Field f2 = Field::prime(2), f5 = Field::prime(5);
  CHECK(generating_function_check(LfsrSpec{f2, to_seq(f2, {1, 1}).elems, to_seq(f2, {0, 1}).elems}, 8));
  CHECK(generating_function_check(LfsrSpec{f2, {}, {}}, 5));
  CHECK(code_of([&] { generating_function_check(LfsrSpec{f2, to_seq(f2, {1, 1}).elems, to_seq(f2, {0, 1}).elems}, 3); }) ==
        ErrorCode::BadParams);

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t l = 1 + rng() % 6;
    const LfsrSpec spec{f5, to_seq(f5, oracle::random_word(rng, 5, l)).elems, to_seq(f5, oracle::random_word(rng, 5, l)).elems};
    REQUIRE(generating_function_check(spec, 3 * l));
  }
}

TEST_CASE("sequence arithmetic checks shapes") {
  const Field f2 = Field::prime(2), f3 = Field::prime(3);
  CHECK(code_of([&] { (void)(to_seq(f2, {1}) + to_seq(f2, {1, 0})); }) == ErrorCode::LengthMismatch);
  CHECK(code_of([&] { (void)(to_seq(f2, {1}) - to_seq(f3, {1})); }) == ErrorCode::FieldMismatch);
  CHECK(code_of([&] { Sequence(f2, {FieldElement{2}}); }) == ErrorCode::FieldMismatch);
  CHECK(oracle::to_word(to_seq(f3, {1, 2, 0}) + to_seq(f3, {2, 2, 2})) == Word{0, 1, 2});
}
