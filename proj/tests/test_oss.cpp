#include <doctest.h>

#include <random>
#include <set>

#include "lcseq/oss.hpp"
#include "oracles.hpp"

using namespace lcseq;
using oracle::to_seq;
using oracle::to_word;
using oracle::Word;

namespace {

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

TEST_CASE("encoding pads the message with leading zeros") {
  const Field f2 = Field::prime(2);
  const OssParams p62(f2, 6, 2);
  CHECK(to_word(oss_encode(p62, to_seq(f2, {1, 1}).elems)) == Word{0, 0, 0, 0, 1, 1});
  CHECK(oss_encode(p62, to_seq(f2, {0, 0}).elems).is_zero());
  const OssParams full(f2, 3, 3);
  CHECK(to_word(oss_encode(full, to_seq(f2, {1, 0, 1}).elems)) == Word{1, 0, 1});
  CHECK(code_of([&] { oss_encode(p62, to_seq(f2, {1}).elems); }) == ErrorCode::LengthMismatch);
  CHECK(code_of([&] { OssParams(f2, 3, 4); }) == ErrorCode::BadParams);
  CHECK(code_of([&] { OssParams(f2, 3, 0); }) == ErrorCode::BadParams);
}

TEST_CASE("decoding the worked example") {
  const Field f2 = Field::prime(2);
  const OssParams params(f2, 6, 2);
  const Sequence x = to_seq(f2, {0, 0, 0, 0, 1, 1});
  const Sequence e = to_seq(f2, {1, 0, 1, 0, 1, 0});
  CHECK(oracle::shortest_register(to_word(e), 2) == 2);
  const Sequence recv = x + e;
  CHECK(to_word(recv) == Word{1, 0, 1, 0, 0, 1});

  const DecodeResult res = oss_decode(params, recv);
  CHECK(to_word(Sequence(f2, res.message)) == Word{1, 1});
  CHECK(res.error == e);
  CHECK(res.corrected == x);
  CHECK(res.corrected + res.error == recv);
}

TEST_CASE("a codeword decodes to itself with zero error") {
  const Field f3 = Field::prime(3);
  const OssParams params(f3, 5, 2);
  const Sequence x = oss_encode(params, to_seq(f3, {2, 1}).elems);
  const DecodeResult res = oss_decode(params, x);
  CHECK(res.error.is_zero());
  CHECK(to_word(Sequence(f3, res.message)) == Word{2, 1});

  // (0,...,0,1) is itself a codeword when k >= 1.
  const Sequence spike = to_seq(f3, {0, 0, 0, 0, 1});
  CHECK(oss_decode(params, spike).corrected == spike);
}

TEST_CASE("errors beyond the radius fail loudly") {
  const Field f2 = Field::prime(2);
  const OssParams params(f2, 6, 2);
  // The error prefix (0,0,0,1) has complexity 4 > (n-k)/2.
  const Sequence e = to_seq(f2, {0, 0, 0, 1, 0, 0});
  CHECK(code_of([&] { oss_decode(params, e); }) == ErrorCode::DecodeFailure);
  CHECK(code_of([&] { oss_decode(params, to_seq(f2, {0, 1})); }) == ErrorCode::LengthMismatch);
}

TEST_CASE("decoder completeness and uniqueness over GF(2) up to length 8") {
  const Field f2 = Field::prime(2);
  for (std::size_t n = 1; n <= 8; ++n) {
    std::vector<Word> inside;
    std::vector<Word> all;
    oracle::for_each_word(2, n, [&](const Word& w) { all.push_back(w); });
    for (std::size_t k = 1; k <= n; ++k) {
      const OssParams params(f2, n, k);
      const auto book = oss_codebook(params);
      std::size_t failures = 0, checked = 0;
      for (const Word& w : all) {
        if (2 * oracle::shortest_register(w, 2) > n - k) continue;
        const Sequence e = to_seq(f2, w);
        for (const auto& x : book) {
          ++checked;
          try {
            const DecodeResult res = oss_decode(params, x + e);
            if (res.corrected != x || res.error != e) ++failures;
          } catch (const Error&) {
            ++failures;
          }
        }
      }
      CAPTURE(n);
      CAPTURE(k);
      CHECK(failures == 0);
      CHECK(checked > 0);
    }
  }
}

TEST_CASE("eleven correctable binary errors at n=6, k=2") {
  std::size_t count = 0;
  oracle::for_each_word(2, 6, [&](const Word& w) { count += 2 * oracle::shortest_register(w, 2) <= 4; });
  CHECK(count == 11);
}

TEST_CASE("exhaustive minimum distance") {
  const Field f2 = Field::prime(2);
  CHECK(min_distance_exhaustive(oss_codebook(OssParams(f2, 6, 2))) == 5);
  for (std::size_t n = 1; n <= 6; ++n) {
    Word spike(n, 0);
    spike.back() = 1;
    CHECK(min_distance_exhaustive({Sequence::zeros(f2, n), to_seq(f2, spike)}) == n);
  }
  const Sequence a = to_seq(f2, {1, 0, 1, 1, 0});
  const Sequence b = to_seq(f2, {0, 1, 1, 0, 1});
  CHECK(min_distance_exhaustive({a, a + b}) == oracle::shortest_register(to_word(b), 2));

  CHECK(code_of([&] { min_distance_exhaustive({a}); }) == ErrorCode::DegenerateSet);
  CHECK(code_of([&] { min_distance_exhaustive({a, a}); }) == ErrorCode::DegenerateSet);
  CHECK(code_of([&] { min_distance_exhaustive({a, to_seq(f2, {1})}); }) == ErrorCode::LengthMismatch);
  CHECK(code_of([&] { min_distance_exhaustive(oss_codebook(OssParams(f2, 12, 12))); }) == ErrorCode::TooLarge);
}

TEST_CASE("codebooks meet the Singleton bound") {
  for (std::uint64_t p : {2u, 3u}) {
    const Field f = Field::prime(p);
    for (std::size_t n = 1; n <= 5; ++n) {
      for (std::size_t k = 1; k <= n; ++k) {
        const auto book = oss_codebook(OssParams(f, n, k));
        const std::size_t d = min_distance_exhaustive(book);
        CHECK(d == n - k + 1);
        CHECK(singleton_bound(p, n, d) == BigCount(book.size()));
      }
    }
  }
}

TEST_CASE("Singleton bound values") {
  CHECK(singleton_bound(2, 6, 5) == 4);
  CHECK(singleton_bound(7, 5, 1) == 16807);
  CHECK(singleton_bound(3, 4, 4) == 3);
  CHECK(singleton_bound(2, 200, 1) == big_pow(2, 200));
  CHECK(code_of([] { singleton_bound(2, 4, 0); }) == ErrorCode::BadParams);
  CHECK(code_of([] { singleton_bound(2, 4, 5); }) == ErrorCode::BadParams);
}

TEST_CASE("window projection") {
  const Field f2 = Field::prime(2), f5 = Field::prime(5);
  const Sequence s = to_seq(f2, {1, 0, 1, 1});
  CHECK(to_word(Sequence(f2, singleton_projection(s, 1))) == to_word(s));
  CHECK(to_word(Sequence(f2, singleton_projection(Sequence::zeros(f2, 4), 3))) == Word{0, 0});
  CHECK(to_word(Sequence(f2, singleton_projection(s, 2))) == Word{1, 1, 0});

  const Sequence t = to_seq(f5, {1, 2, 3, 4});
  const auto weighted = singleton_projection(t, 2, to_seq(f5, {3, 1}).elems);
  CHECK(to_word(Sequence(f5, weighted)) == Word{0, 4, 3});
  CHECK(code_of([&] { singleton_projection(t, 2, to_seq(f5, {1, 2}).elems); }) == ErrorCode::BadParams);
  CHECK(code_of([&] { singleton_projection(t, 0); }) == ErrorCode::BadParams);
  CHECK(code_of([&] { singleton_projection(t, 5); }) == ErrorCode::BadParams);
}

TEST_CASE("projection is injective on codebooks with distance at least d") {
  for (std::uint64_t p : {2u, 3u}) {
    const Field f = Field::prime(p);
    for (std::size_t n = 1; n <= 6; ++n) {
      for (std::size_t k = 1; k <= n && (p == 2 || n <= 5); ++k) {
        const std::size_t d = n - k + 1;
        std::set<Word> images, images_weighted;
        std::vector<FieldElement> weights(d, FieldElement{p - 1});
        weights.back() = f.one();
        for (const auto& x : oss_codebook(OssParams(f, n, k))) {
          images.insert(to_word(Sequence(f, singleton_projection(x, d))));
          images_weighted.insert(to_word(Sequence(f, singleton_projection(x, d, weights))));
        }
        CHECK(images.size() == oracle::ipow(p, k));
        CHECK(images_weighted.size() == oracle::ipow(p, k));
      }
    }
  }
}

TEST_CASE("codebook order and guard") {
  const Field f3 = Field::prime(3);
  const auto book = oss_codebook(OssParams(f3, 3, 2));
  REQUIRE(book.size() == 9);
  CHECK(to_word(book[0]) == Word{0, 0, 0});
  CHECK(to_word(book[1]) == Word{0, 1, 0});
  CHECK(to_word(book[3]) == Word{0, 0, 1});
  CHECK(code_of([&] { oss_codebook(OssParams(f3, 10, 10), 1000); }) == ErrorCode::TooLarge);
}
