#include "lcseq/verify.hpp"

#include <functional>
#include <optional>
#include <string>

#include "lcseq/enumerate.hpp"
#include "lcseq/lfsr.hpp"
#include "lcseq/oss.hpp"
#include "lcseq/rsbridge.hpp"

namespace lcseq {

namespace {

// A check returns nullopt on success, or a description of the first failure.
using Check = std::function<std::optional<std::string>()>;

struct NamedCheck {
  std::string_view suite;
  std::string_view name;
  Check run;
};

template <typename Fn>
void for_each_sequence(const Field& field, std::size_t n, Fn&& fn) {
  std::vector<FieldElement> s(n);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= field.q();
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    fn(Sequence(field, s));
    for (auto& x : s) {
      if (++x.value < field.q()) break;
      x.value = 0;
    }
  }
}

std::string params(std::uint64_t q, std::size_t n) { return "q=" + std::to_string(q) + " n=" + std::to_string(n); }

std::optional<std::string> bm_matches_oracle() {
  for (auto [p, max_n] : {std::pair{2u, 10u}, std::pair{3u, 5u}}) {
    const Field f = Field::prime(p);
    for (std::size_t n = 0; n <= max_n; ++n) {
      std::optional<std::string> bad;
      for_each_sequence(f, n, [&](const Sequence& s) {
        if (!bad && berlekamp_massey(s).complexity != min_lfsr_oracle(s)) bad = "mismatch at " + params(p, n);
      });
      if (bad) return bad;
    }
  }
  return std::nullopt;
}

std::optional<std::string> bm_regenerates() {
  const Field f = Field::prime(3);
  for (std::size_t n = 1; n <= 6; ++n) {
    std::optional<std::string> bad;
    for_each_sequence(f, n, [&](const Sequence& s) {
      const BmResult bm = berlekamp_massey(s);
      if (!bad && lfsr_generate(bm.register_for(s), n) != s) bad = "register does not regenerate at n=" + std::to_string(n);
    });
    if (bad) return bad;
  }
  return std::nullopt;
}

std::optional<std::string> subadditivity() {
  const Field f = Field::prime(2);
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<Sequence> all;
    for_each_sequence(f, n, [&](const Sequence& s) { all.push_back(s); });
    for (const auto& a : all) {
      for (const auto& b : all) {
        if (linear_complexity(a + b) > linear_complexity(a) + linear_complexity(b)) {
          return "L(a+b) > L(a)+L(b) at n=" + std::to_string(n);
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> histogram_matches_exact_count() {
  for (auto [p, max_n] : {std::pair{2u, 10u}, std::pair{3u, 6u}, std::pair{5u, 4u}}) {
    const Field f = Field::prime(p);
    for (std::size_t n = 1; n <= max_n; ++n) {
      const ComplexityHistogram h = brute_histogram(f, n);
      for (std::size_t r = 0; r <= n; ++r) {
        if (h.counts[r] != count_exact(p, n, r)) return "count_exact differs at " + params(p, n) + " r=" + std::to_string(r);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> histogram_matches_ball_size() {
  for (auto [p, max_n] : {std::pair{2u, 10u}, std::pair{3u, 6u}}) {
    const Field f = Field::prime(p);
    for (std::size_t n = 1; n <= max_n; ++n) {
      const ComplexityHistogram h = brute_histogram(f, n);
      BigCount running = 0;
      for (std::size_t r = 0; r <= n; ++r) {
        running += h.counts[r];
        if (running != count_le_closed(p, n, r)) return "ball size differs at " + params(p, n) + " r=" + std::to_string(r);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> ball_formulas_agree() {
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u}) {
    for (std::size_t n = 0; n <= 40; ++n) {
      for (std::size_t r = 0; r <= n; ++r) {
        const BigCount closed = count_le_closed(q, n, r);
        if (closed != count_le_recur(q, n, r) || closed != count_le_sum(q, n, r)) {
          return "routes disagree at " + params(q, n) + " r=" + std::to_string(r);
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> first_nonzero_partition() {
  for (std::uint64_t q : {2u, 3u, 5u}) {
    for (std::size_t n = 1; n <= 30; ++n) {
      for (std::size_t r = 0; r <= n; ++r) {
        BigCount total = 1;
        for (std::size_t u = 0; u < n; ++u) total += count_first_nonzero(q, n, r, u);
        if (total != count_le_closed(q, n, r)) return "partition fails at " + params(q, n) + " r=" + std::to_string(r);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> persymmetric_reduction() {
  const Field f = Field::prime(2);
  for (std::size_t n = 3; n <= 8; ++n) {
    std::optional<std::string> bad;
    for_each_sequence(f, n, [&](const Sequence& s) {
      if (bad || s.is_zero()) return;
      std::size_t u = 0;
      while (s[u].value == 0) ++u;
      for (std::size_t r = u + 1; u + r + 1 < n; ++r) {
        if (!daykin_check(s, r)) bad = "reduction fails at n=" + std::to_string(n) + " r=" + std::to_string(r);
      }
    });
    if (bad) return bad;
  }
  return std::nullopt;
}

std::optional<std::string> sphere_packing_value() {
  if (sphere_packing_bound(2, 7, 3) != 42) return "bound(2,7,3) != 42";
  if (brute_histogram(Field::prime(2), 7).counts[0] + brute_histogram(Field::prime(2), 7).counts[1] != 3) {
    return "b(7,1) != 3 by enumeration";
  }
  return std::nullopt;
}

std::optional<std::string> oss_meets_singleton() {
  for (auto [p, max_n] : {std::pair{2u, 6u}, std::pair{3u, 4u}}) {
    const Field f = Field::prime(p);
    for (std::size_t n = 1; n <= max_n; ++n) {
      for (std::size_t k = 1; k <= n; ++k) {
        const OssParams params(f, n, k);
        const std::size_t d = min_distance_exhaustive(oss_codebook(params));
        if (d != n - k + 1 || singleton_bound(p, n, d) != big_pow(p, k)) {
          return "not optimal at " + std::to_string(p) + "," + std::to_string(n) + "," + std::to_string(k);
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> oss_decoder_complete() {
  const Field f = Field::prime(2);
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<Sequence> all;
    for_each_sequence(f, n, [&](const Sequence& s) { all.push_back(s); });
    for (std::size_t k = 1; k <= n; ++k) {
      const OssParams params(f, n, k);
      for (const auto& x : oss_codebook(params)) {
        for (const auto& e : all) {
          if (2 * linear_complexity(e) > n - k) continue;
          try {
            const DecodeResult res = oss_decode(params, x + e);
            if (res.corrected != x || res.error != e) return "wrong decode at n=" + std::to_string(n);
          } catch (const Error&) {
            return "decode failure inside the radius at n=" + std::to_string(n);
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> konig_rados() {
  for (std::uint64_t p : {3u, 5u}) {
    const Field f = Field::prime(p);
    std::optional<std::string> bad;
    for_each_sequence(f, p - 1, [&](const Sequence& c) {
      if (bad) return;
      const std::size_t roots = count_roots_direct(f, c.elems);
      if (konig_rados_roots(f, c.elems) != roots) bad = "root counts differ over GF(" + std::to_string(p) + ")";
      const RsParams rs(f, p - 1);
      if (periodic_lc(c) != p - 1 - roots || hamming_weight(rs_encode(rs, c.elems)) != p - 1 - roots) {
        bad = "complexity/weight chain breaks over GF(" + std::to_string(p) + ")";
      }
    });
    if (bad) return bad;
  }
  return std::nullopt;
}

std::optional<std::string> rs_single_errors() {
  const Field f = Field::prime(5);
  const RsParams params(f, 1);
  for (std::uint64_t m = 0; m < 5; ++m) {
    const std::vector<FieldElement> msg{FieldElement{m}};
    const Sequence codeword = rs_encode(params, msg);
    for (std::size_t pos = 0; pos < params.n; ++pos) {
      for (std::uint64_t mag = 1; mag < 5; ++mag) {
        Sequence e = Sequence::zeros(f, params.n);
        e.elems[pos] = FieldElement{mag};
        try {
          const RsDecodeResult res = rs_decode_via_bm(params, codeword + e);
          if (res.message != msg || res.error != e) return std::string("wrong decode");
        } catch (const Error&) {
          return std::string("decode failure on a single error");
        }
      }
    }
  }
  return std::nullopt;
}

const std::vector<NamedCheck>& checks() {
  static const std::vector<NamedCheck> all{
      {"lfsr", "bm-matches-brute-force-minimal-register", bm_matches_oracle},
      {"lfsr", "bm-register-regenerates-sequence", bm_regenerates},
      {"lfsr", "complexity-subadditive", subadditivity},
      {"enumerate", "exact-count-matches-enumeration", histogram_matches_exact_count},
      {"enumerate", "ball-size-matches-enumeration", histogram_matches_ball_size},
      {"enumerate", "closed-recurrence-sum-agree", ball_formulas_agree},
      {"enumerate", "first-nonzero-partition", first_nonzero_partition},
      {"enumerate", "persymmetric-reduction", persymmetric_reduction},
      {"enumerate", "sphere-packing-q2-n7-d3", sphere_packing_value},
      {"oss", "optimal-set-meets-singleton", oss_meets_singleton},
      {"oss", "decoder-corrects-within-radius", oss_decoder_complete},
      {"rsbridge", "konig-rados-and-weight-chain", konig_rados},
      {"rsbridge", "rs-single-error-decoding", rs_single_errors},
  };
  return all;
}

}  // namespace

std::vector<std::string_view> verify_suites() { return {"lfsr", "oss", "enumerate", "rsbridge", "all"}; }

int run_verify(std::string_view suite, std::ostream& out) {
  bool known = suite == "all";
  for (const auto& c : checks()) known = known || c.suite == suite;
  if (!known) throw Error(ErrorCode::BadParams, "unknown suite '" + std::string(suite) + "'");

  int failures = 0;
  for (const auto& c : checks()) {
    if (suite != "all" && c.suite != suite) continue;
    std::optional<std::string> failure;
    try {
      failure = c.run();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (failure) {
      ++failures;
      out << "FAIL " << c.suite << "/" << c.name << ": " << *failure << "\n";
    } else {
      out << "PASS " << c.suite << "/" << c.name << "\n";
    }
  }
  return failures;
}

}  // namespace lcseq
