#include "lcseq/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "lcseq/enumerate.hpp"
#include "lcseq/lfsr.hpp"
#include "lcseq/oss.hpp"
#include "lcseq/rsbridge.hpp"
#include "lcseq/text.hpp"
#include "lcseq/verify.hpp"

namespace lcseq {

namespace {

constexpr std::uint64_t kDefaultGuard = std::uint64_t{1} << 24;

struct FieldFlags {
  std::optional<std::uint64_t> p;
  unsigned m = 1;
  std::string modulus;

  void attach(CLI::App* cmd) {
    cmd->add_option("--p", p, "Field characteristic");
    cmd->add_option("--m", m, "Extension degree");
    cmd->add_option("--modulus", modulus, "Irreducible modulus, comma-separated low-to-high");
  }

  std::optional<Field> field() const {
    if (!p) return std::nullopt;
    std::vector<std::uint64_t> coeffs;
    std::string_view text = modulus;
    if (text.starts_with('[') && text.ends_with(']')) text = text.substr(1, text.size() - 2);
    std::stringstream in{std::string(text)};
    std::string part;
    while (std::getline(in, part, ',')) {
      try {
        coeffs.push_back(std::stoull(part));
      } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "bad modulus coefficient '" + part + "'");
      }
    }
    return Field::make(*p, m, std::move(coeffs));
  }

  Field require() const {
    auto f = field();
    if (!f) throw Error(ErrorCode::BadParams, "--p is required");
    return *f;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Sequences from --seq (one, inline) or --in (file, optional header).
std::vector<Sequence> input_sequences(const FieldFlags& flags, const std::string& seq, const std::string& path) {
  if (!path.empty()) return parse_sequence_file(read_file(path), flags.field());
  return {parse_sequence(seq, flags.require())};
}

std::uint64_t guard_limit(bool force) {
  if (force) return std::numeric_limits<std::uint64_t>::max();
  if (const char* env = std::getenv("LCSEQ_MAX_ORACLE")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::BadParams, "LCSEQ_MAX_ORACLE must be a nonnegative integer");
    }
  }
  return kDefaultGuard;
}

int exit_status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::DecodeFailure: return kExitDecodeFailure;
    case ErrorCode::OracleTooLarge:
    case ErrorCode::TooLarge: return kExitGuardExceeded;
    default: return kExitUsage;
  }
}

// Nonzero sequences with first nonzero index u and linear complexity <= r.
BigCount brute_first_nonzero(const Field& field, std::size_t n, std::size_t r, std::size_t u, std::uint64_t guard) {
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (space > guard / field.q()) throw Error(ErrorCode::OracleTooLarge, "q^n exceeds the oracle limit");
    space *= field.q();
  }
  std::uint64_t count = 0;
  std::vector<FieldElement> s(n);
  for (std::uint64_t idx = 0; idx < space; ++idx) {
    std::size_t first = 0;
    while (first < n && s[first].value == 0) ++first;
    if (first == u && linear_complexity(field, s) <= r) ++count;
    for (auto& x : s) {
      if (++x.value < field.q()) break;
      x.value = 0;
    }
  }
  return count;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear-complexity metric toolkit for sequences over finite fields", "lcseq"};
  app.require_subcommand(1);
  bool force = false;
  app.add_flag("--force", force, "Lift the brute-force size guard");

  FieldFlags field_flags;
  std::string seq, in_path;

  auto* lc = app.add_subcommand("lc", "Print the linear complexity of each sequence");
  bool periodic = false, use_oracle = false;
  field_flags.attach(lc);
  lc->add_option("--seq", seq, "Inline sequence");
  lc->add_option("--in", in_path, "Sequence file");
  lc->add_flag("--periodic", periodic, "Complexity of the periodic extension");
  lc->add_flag("--oracle", use_oracle, "Use the brute-force minimal-register search");

  auto* bm = app.add_subcommand("bm", "Print L with connection and feedback polynomials");
  field_flags.attach(bm);
  bm->add_option("--seq", seq, "Inline sequence");
  bm->add_option("--in", in_path, "Sequence file");

  auto* dist = app.add_subcommand("dist", "Print the LC distance L(a - b)");
  std::string seq_a, seq_b;
  field_flags.attach(dist);
  dist->add_option("--a", seq_a, "First sequence")->required();
  dist->add_option("--b", seq_b, "Second sequence")->required();

  auto* gen = app.add_subcommand("gen", "Run a feedback shift register");
  std::string coeffs_text, init_text;
  std::size_t length = 0;
  field_flags.attach(gen);
  gen->add_option("--coeffs", coeffs_text, "Feedback coefficients c_0..c_{l-1}");
  gen->add_option("--init", init_text, "Initial state a_0..a_{l-1}");
  gen->add_option("--n", length, "Output length")->required();

  std::size_t code_n = 0, code_k = 0;
  std::string msg_text;
  auto* oss = app.add_subcommand("oss", "Optimal sequence set: encode, decode, codebook");
  oss->require_subcommand(1);
  auto* oss_enc = oss->add_subcommand("encode", "Encode a k-symbol message");
  auto* oss_dec = oss->add_subcommand("decode", "Decode a received word");
  auto* oss_book = oss->add_subcommand("codebook", "Dump every codeword");
  for (auto* cmd : {oss_enc, oss_dec, oss_book}) {
    field_flags.attach(cmd);
    cmd->add_option("--n", code_n, "Length")->required();
    cmd->add_option("--k", code_k, "Dimension")->required();
  }
  oss_enc->add_option("--msg", msg_text, "Message symbols")->required();
  oss_dec->add_option("--seq", seq, "Received word")->required();

  auto* rs = app.add_subcommand("rs", "Reed-Solomon over all of F_q^*: encode, decode");
  rs->require_subcommand(1);
  auto* rs_enc = rs->add_subcommand("encode", "Evaluate a message polynomial");
  auto* rs_dec = rs->add_subcommand("decode", "Interpolate-then-BM decoding");
  for (auto* cmd : {rs_enc, rs_dec}) {
    field_flags.attach(cmd);
    cmd->add_option("--k", code_k, "Dimension")->required();
  }
  rs_enc->add_option("--msg", msg_text, "Message coefficients, low-to-high")->required();
  rs_dec->add_option("--seq", seq, "Received word")->required();

  auto* count = app.add_subcommand("count", "Count sequences by linear complexity");
  std::uint64_t q = 0;
  std::optional<std::size_t> radius, first_nonzero;
  std::string method = "closed";
  bool exact = false;
  field_flags.attach(count);
  count->add_option("--q", q, "Field size")->required();
  count->add_option("--n", length, "Sequence length")->required();
  count->add_option("--r", radius, "Complexity bound (omit for all r as CSV)");
  count->add_option("--u", first_nonzero, "Restrict to first nonzero index u");
  count->add_option("--method", method, "closed|recur|sum|brute")
      ->check(CLI::IsMember({"closed", "recur", "sum", "brute"}));
  count->add_flag("--exact", exact, "Count complexity exactly r instead of at most r");

  auto* bound = app.add_subcommand("bound", "Singleton or sphere-packing bound");
  bool singleton = false, sphere = false;
  std::size_t distance = 0;
  bound->add_flag("--singleton", singleton, "q^(n-d+1)");
  bound->add_flag("--sphere", sphere, "floor(q^n / b(n, floor((d-1)/2)))");
  bound->add_option("--q", q, "Field size")->required();
  bound->add_option("--n", length, "Length")->required();
  bound->add_option("--d", distance, "Minimum distance")->required();

  auto* verify = app.add_subcommand("verify", "Run the brute-force cross-checks");
  std::string suite = "all";
  verify->add_option("--suite", suite, "lfsr|oss|enumerate|rsbridge|all");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e, out, err);
    return status == 0 ? kExitOk : kExitUsage;
  }

  try {
    const std::uint64_t guard = guard_limit(force);

    if (lc->parsed()) {
      for (const auto& s : input_sequences(field_flags, seq, in_path)) {
        if (periodic) {
          out << periodic_lc(s) << "\n";
        } else if (use_oracle) {
          out << min_lfsr_oracle(s, guard) << "\n";
        } else {
          out << linear_complexity(s) << "\n";
        }
      }
    } else if (bm->parsed()) {
      for (const auto& s : input_sequences(field_flags, seq, in_path)) out << format_report(berlekamp_massey(s));
    } else if (dist->parsed()) {
      const Field f = field_flags.require();
      out << lc_distance(parse_sequence(seq_a, f), parse_sequence(seq_b, f)) << "\n";
    } else if (gen->parsed()) {
      const Field f = field_flags.require();
      const Sequence c = parse_sequence(coeffs_text, f);
      const Sequence init = parse_sequence(init_text, f);
      out << format_sequence(lfsr_generate(LfsrSpec{f, c.elems, init.elems}, length)) << "\n";
    } else if (oss->parsed()) {
      const OssParams params(field_flags.require(), code_n, code_k);
      if (oss_enc->parsed()) {
        out << format_sequence(oss_encode(params, parse_sequence(msg_text, params.field).elems)) << "\n";
      } else if (oss_dec->parsed()) {
        out << format_report(oss_decode(params, parse_sequence(seq, params.field)));
      } else {
        out << format_sequence_file(oss_codebook(params, guard));
      }
    } else if (rs->parsed()) {
      const RsParams params(field_flags.require(), code_k);
      if (rs_enc->parsed()) {
        out << format_sequence(rs_encode(params, parse_sequence(msg_text, params.field).elems)) << "\n";
      } else {
        const Sequence received = parse_sequence(seq, params.field);
        const RsDecodeResult res = rs_decode_via_bm(params, received);
        out << "message: " << format_elements(params.field, res.message) << "\n"
            << "error: " << format_sequence(res.error) << "\n"
            << "codeword: " << format_sequence(received - res.error) << "\n";
      }
    } else if (count->parsed()) {
      if (!is_prime_power(q)) err << "warning: q=" << q << " is not a prime power\n";
      std::optional<Field> field;
      if (method == "brute") {
        field = field_flags.field();
        if (!field) {
          if (!is_prime(q)) throw Error(ErrorCode::BadParams, "brute force with non-prime q needs --p/--m/--modulus");
          field = Field::prime(q);
        }
        if (field->q() != q) throw Error(ErrorCode::BadParams, "--q does not match the field flags");
      }
      if (first_nonzero) {
        if (!radius) throw Error(ErrorCode::BadParams, "--u requires --r");
        if (method == "closed") {
          out << format_report(count_first_nonzero(q, length, *radius, *first_nonzero)) << "\n";
        } else if (method == "brute") {
          if (*radius > length || *first_nonzero >= length) throw Error(ErrorCode::BadParams, "need r <= n and u < n");
          out << format_report(brute_first_nonzero(*field, length, *radius, *first_nonzero, guard)) << "\n";
        } else {
          throw Error(ErrorCode::BadParams, "--u supports --method closed or brute");
        }
        return kExitOk;
      }

      ComplexityHistogram hist{q, length, {}};
      if (method == "brute") {
        hist = brute_histogram(*field, length, guard);
      } else {
        auto ball = [&](std::size_t r) {
          if (method == "recur") return count_le_recur(q, length, r);
          if (method == "sum") return count_le_sum(q, length, r);
          return count_le_closed(q, length, r);
        };
        for (std::size_t r = 0; r <= length; ++r) {
          if (exact && method == "closed") {
            hist.counts.push_back(count_exact(q, length, r));
          } else if (exact) {
            hist.counts.push_back(r == 0 ? ball(0) : ball(r) - ball(r - 1));
          } else {
            hist.counts.push_back(ball(r));
          }
        }
        exact = true;  // counts now hold the requested quantity per r
      }
      if (!exact) {
        for (std::size_t r = 1; r < hist.counts.size(); ++r) hist.counts[r] += hist.counts[r - 1];
      }
      if (radius) {
        if (*radius > length) throw Error(ErrorCode::BadParams, "need r <= n");
        out << format_report(hist.counts[*radius]) << "\n";
      } else {
        out << format_report(hist);
      }
    } else if (bound->parsed()) {
      if (singleton == sphere) throw Error(ErrorCode::BadParams, "choose exactly one of --singleton and --sphere");
      out << format_report(singleton ? singleton_bound(q, length, distance) : sphere_packing_bound(q, length, distance))
          << "\n";
    } else if (verify->parsed()) {
      return run_verify(suite, out) == 0 ? kExitOk : kExitVerifyFailed;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_status_for(e.code());
  }
  return kExitOk;
}

}  // namespace lcseq
