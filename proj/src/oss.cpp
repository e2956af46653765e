#include "lcseq/oss.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <thread>

namespace lcseq {

OssParams::OssParams(Field f, std::size_t length, std::size_t dimension)
    : field(std::move(f)), n(length), k(dimension) {
  if (k < 1 || k > n) {
    throw Error(ErrorCode::BadParams, "need 1 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
}

Sequence oss_encode(const OssParams& params, std::span<const FieldElement> message) {
  if (message.size() != params.k) {
    throw Error(ErrorCode::LengthMismatch, "message must have " + std::to_string(params.k) + " symbols");
  }
  std::vector<FieldElement> out(params.n);
  std::copy(message.begin(), message.end(), out.begin() + static_cast<std::ptrdiff_t>(params.n - params.k));
  return Sequence(params.field, std::move(out));
}

DecodeResult oss_decode(const OssParams& params, const Sequence& received) {
  if (!(received.field == params.field)) throw Error(ErrorCode::FieldMismatch, "received word over wrong field");
  if (received.size() != params.n) {
    throw Error(ErrorCode::LengthMismatch, "received word must have length " + std::to_string(params.n));
  }
  const std::size_t checks = params.n - params.k;

  // Codewords vanish on the first n-k positions, so these are error symbols.
  const Sequence prefix(params.field,
                        std::vector<FieldElement>(received.elems.begin(),
                                                  received.elems.begin() + static_cast<std::ptrdiff_t>(checks)));
  const BmResult bm = berlekamp_massey(prefix);
  Sequence error = lfsr_generate(bm.register_for(prefix), params.n);
  Sequence corrected = received - error;

  const std::size_t error_lc = linear_complexity(error);
  if (2 * error_lc > checks) {
    throw Error(ErrorCode::DecodeFailure, "error of linear complexity " + std::to_string(error_lc) +
                                              " exceeds the decoding radius for d=" +
                                              std::to_string(params.min_distance()));
  }
  if (!std::all_of(corrected.elems.begin(), corrected.elems.begin() + static_cast<std::ptrdiff_t>(checks),
                   [](FieldElement x) { return x.value == 0; })) {
    throw Error(ErrorCode::DecodeFailure, "reconstructed word is not in the code");
  }

  std::vector<FieldElement> message(corrected.elems.begin() + static_cast<std::ptrdiff_t>(checks),
                                    corrected.elems.end());
  return DecodeResult{std::move(message), std::move(error), std::move(corrected)};
}

std::vector<Sequence> oss_codebook(const OssParams& params, std::uint64_t max_words) {
  const std::uint64_t q = params.field.q();
  std::uint64_t words = 1;
  for (std::size_t i = 0; i < params.k; ++i) {
    if (words > max_words / q) throw Error(ErrorCode::TooLarge, "codebook exceeds " + std::to_string(max_words));
    words *= q;
  }
  std::vector<Sequence> book;
  book.reserve(words);
  std::vector<FieldElement> msg(params.k);
  for (std::uint64_t w = 0; w < words; ++w) {
    book.push_back(oss_encode(params, msg));
    for (auto& x : msg) {
      if (++x.value < q) break;
      x.value = 0;
    }
  }
  return book;
}

std::size_t min_distance_exhaustive(const std::vector<Sequence>& set, std::uint64_t max_pairs) {
  if (set.size() < 2) throw Error(ErrorCode::DegenerateSet, "need at least two sequences");
  const Field& field = set.front().field;
  const std::size_t n = set.front().size();
  for (const auto& s : set) {
    if (!(s.field == field)) throw Error(ErrorCode::FieldMismatch, "set mixes fields");
    if (s.size() != n) throw Error(ErrorCode::LengthMismatch, "set mixes lengths");
  }
  const std::uint64_t count = set.size();
  if (count > (std::uint64_t{1} << 32) || count * (count - 1) / 2 > max_pairs) {
    throw Error(ErrorCode::TooLarge, std::to_string(count) + " sequences exceed the pair limit");
  }

  // Rows are dealt round-robin to workers; the minimum is order-independent.
  const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 16));
  std::vector<std::size_t> best(workers, std::numeric_limits<std::size_t>::max());
  auto sweep = [&](unsigned w) {
    std::vector<FieldElement> diff(n);
    for (std::size_t i = w; i < set.size(); i += workers) {
      for (std::size_t j = i + 1; j < set.size(); ++j) {
        bool same = true;
        for (std::size_t t = 0; t < n; ++t) {
          diff[t] = field.sub(set[i][t], set[j][t]);
          same = same && diff[t].value == 0;
        }
        if (!same) best[w] = std::min(best[w], linear_complexity(field, diff));
      }
    }
  };
  if (workers == 1) {
    sweep(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(sweep, w);
  }
  const std::size_t d = *std::min_element(best.begin(), best.end());
  if (d == std::numeric_limits<std::size_t>::max()) throw Error(ErrorCode::DegenerateSet, "set has one distinct element");
  return d;
}

BigCount singleton_bound(std::uint64_t q, std::size_t n, std::size_t d) {
  if (q < 2 || d < 1 || d > n) throw Error(ErrorCode::BadParams, "singleton bound needs q >= 2 and 1 <= d <= n");
  return big_pow(q, n - d + 1);
}

std::vector<FieldElement> singleton_projection(const Sequence& s, std::size_t d,
                                               std::optional<std::vector<FieldElement>> weights) {
  const std::size_t n = s.size();
  if (d < 1 || d > n) throw Error(ErrorCode::BadParams, "projection needs 1 <= d <= n");
  const Field& f = s.field;
  std::vector<FieldElement> w = weights.value_or(std::vector<FieldElement>(d, f.one()));
  if (w.size() != d) throw Error(ErrorCode::BadParams, "weight vector must have length d");
  if (w.back() != f.one()) throw Error(ErrorCode::BadParams, "weight vector must end in 1");
  for (auto x : w) f.check(x);

  std::vector<FieldElement> out(n - d + 1);
  for (std::size_t j = 0; j < out.size(); ++j) {
    FieldElement acc = f.zero();
    for (std::size_t i = 0; i < d; ++i) acc = f.add(acc, f.mul(w[i], s[i + j]));
    out[j] = acc;
  }
  return out;
}

}  // namespace lcseq
