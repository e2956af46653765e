#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcseq/enumerate.hpp"
#include "lcseq/lfsr.hpp"
#include "lcseq/oss.hpp"
#include "lcseq/rsbridge.hpp"

namespace lcseq {

// Whitespace-separated element texts. Throws ParseError naming the 1-based
// token position.
Sequence parse_sequence(std::string_view text, const Field& field);
std::string format_sequence(const Sequence& s);
std::string format_elements(const Field& field, std::span<const FieldElement> elems);

// Space-separated coefficients low-to-high; the zero polynomial prints as "0".
std::string format_polynomial(const Polynomial& f);

// "# q=<p>^<m>" with " mod=<c0>,<c1>,..." appended for extension fields.
std::string format_field_header(const Field& field);
// Parses a header line; returns nullopt for lines that are not headers.
std::optional<Field> parse_field_header(std::string_view line);

// One sequence per line. A leading header line, when present, selects the
// field; otherwise `fallback` is used. Blank lines are skipped.
std::vector<Sequence> parse_sequence_file(std::string_view text, const std::optional<Field>& fallback);
// Header line followed by one sequence per line.
std::string format_sequence_file(const std::vector<Sequence>& set);

std::string format_report(const BigCount& count);
// "r,count" CSV lines for r = 0..n.
std::string format_report(const ComplexityHistogram& hist);
// "L=", "connection:" and "feedback:" lines.
std::string format_report(const BmResult& bm);
// "message:", "error:" and "codeword:" lines.
std::string format_report(const DecodeResult& result);

}  // namespace lcseq
