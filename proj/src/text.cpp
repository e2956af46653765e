#include "lcseq/text.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace lcseq {

namespace {

std::vector<std::string_view> split_whitespace(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) tokens.push_back(text.substr(start, i - start));
  }
  return tokens;
}

std::uint64_t parse_uint(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::ParseError, "bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Sequence parse_sequence(std::string_view text, const Field& field) {
  const auto tokens = split_whitespace(text);
  std::vector<FieldElement> elems;
  elems.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    try {
      elems.push_back(field.parse(tokens[i]));
    } catch (const Error& e) {
      throw Error(ErrorCode::ParseError, "token " + std::to_string(i + 1) + " ('" + std::string(tokens[i]) +
                                             "'): " + e.what());
    }
  }
  return Sequence(field, std::move(elems));
}

std::string format_elements(const Field& field, std::span<const FieldElement> elems) {
  std::string out;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) out += ' ';
    out += field.format(elems[i]);
  }
  return out;
}

std::string format_sequence(const Sequence& s) { return format_elements(s.field, s.elems); }

std::string format_polynomial(const Polynomial& f) {
  if (f.is_zero()) return f.field.format(f.field.zero());
  return format_elements(f.field, f.coeffs);
}

std::string format_field_header(const Field& field) {
  std::string out = "# q=" + std::to_string(field.p()) + "^" + std::to_string(field.m());
  if (field.m() > 1) {
    out += " mod=";
    const auto& mod = field.modulus();
    for (std::size_t i = 0; i < mod.size(); ++i) out += (i ? "," : "") + std::to_string(mod[i]);
  }
  return out;
}

std::optional<Field> parse_field_header(std::string_view line) {
  auto tokens = split_whitespace(line);
  if (tokens.size() < 2 || tokens[0] != "#" || !tokens[1].starts_with("q=")) return std::nullopt;

  std::string_view order = tokens[1].substr(2);
  const auto caret = order.find('^');
  const std::uint64_t p = parse_uint(order.substr(0, caret), "characteristic");
  const std::uint64_t m = caret == std::string_view::npos ? 1 : parse_uint(order.substr(caret + 1), "degree");

  std::vector<std::uint64_t> modulus;
  for (std::size_t i = 2; i < tokens.size(); ++i) {
    std::string_view tok = tokens[i];
    if (!tok.starts_with("mod=")) throw Error(ErrorCode::ParseError, "unexpected header field '" + std::string(tok) + "'");
    tok.remove_prefix(4);
    if (tok.starts_with('[') && tok.ends_with(']')) tok = tok.substr(1, tok.size() - 2);
    while (true) {
      const auto comma = tok.find(',');
      modulus.push_back(parse_uint(tok.substr(0, comma), "modulus coefficient"));
      if (comma == std::string_view::npos) break;
      tok.remove_prefix(comma + 1);
    }
  }
  return Field::make(p, static_cast<unsigned>(m), std::move(modulus));
}

std::vector<Sequence> parse_sequence_file(std::string_view text, const std::optional<Field>& fallback) {
  std::optional<Field> field = fallback;
  std::vector<Sequence> out;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line.find_first_not_of(" \t") != std::string::npos && line[line.find_first_not_of(" \t")] == '#') {
      if (auto header = parse_field_header(line)) field = std::move(header);
      continue;
    }
    if (!field) throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": no field given");
    try {
      out.push_back(parse_sequence(line, *field));
    } catch (const Error& e) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::string format_sequence_file(const std::vector<Sequence>& set) {
  std::string out;
  if (!set.empty()) out += format_field_header(set.front().field) + "\n";
  for (const auto& s : set) out += format_sequence(s) + "\n";
  return out;
}

std::string format_report(const BigCount& count) { return to_decimal(count); }

std::string format_report(const ComplexityHistogram& hist) {
  std::string out;
  for (std::size_t r = 0; r < hist.counts.size(); ++r) {
    out += std::to_string(r) + "," + to_decimal(hist.counts[r]) + "\n";
  }
  return out;
}

std::string format_report(const BmResult& bm) {
  return "L=" + std::to_string(bm.complexity) + "\nconnection: " + format_polynomial(bm.connection) +
         "\nfeedback: " + format_polynomial(bm.feedback) + "\n";
}

std::string format_report(const DecodeResult& result) {
  return "message: " + format_elements(result.corrected.field, result.message) +
         "\nerror: " + format_sequence(result.error) + "\ncodeword: " + format_sequence(result.corrected) + "\n";
}

}  // namespace lcseq
