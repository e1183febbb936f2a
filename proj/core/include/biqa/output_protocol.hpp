#ifndef BIQA_OUTPUT_PROTOCOL_HPP_
#define BIQA_OUTPUT_PROTOCOL_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace biqa::proto {

// Ordered list of tagged sections a transcript must emit, e.g.
// (caption, think, answer) where "answer" carries the numeric rating.
struct TagSchema {
  std::vector<std::string> sections;
  std::string answer_section;

  // Throws std::invalid_argument when sections are empty, duplicated, or the
  // answer section is not a member.
  static TagSchema make(std::vector<std::string> sections, std::string answer_section);

  // caption / think / answer
  static TagSchema stage1_default();
  // think / answer (caption is input, not output, in the blind stage)
  static TagSchema stage2_default();
  // subject / advantage / flaw / think / answer
  static TagSchema stage1_detailed();
};

struct StructuredOutput {
  // Extracted (name, text) pairs in schema order; text has its edges trimmed.
  // On malformed input this holds the sections parsed before the first
  // structural violation.
  std::vector<std::pair<std::string, std::string>> sections;
  std::string answer_section;
  bool well_formed = false;
  std::optional<double> rating;

  const std::string* section(std::string_view name) const;
  // Every non-answer section's text joined with single spaces, schema order.
  std::string reasoning_text() const;
};

// Structural parse: well_formed iff every schema section appears exactly
// once, in order, with matching tags and nothing but whitespace between and
// around them. Total function; malformation never throws.
//
// The rating is extracted from the answer section when present; if the
// structural pass did not reach the answer section, a lenient scan for the
// first <answer>...</answer> span (using the schema's answer section name)
// still fills it so a trailing score can earn a prediction reward even when
// the overall structure is broken.
StructuredOutput parse_output(std::string_view raw, const TagSchema& schema);

// First maximal decimal number substring, e.g. "I rate this 3 of 5" -> 3.
std::optional<double> extract_rating(std::string_view answer_text);

// Inverse of parse_output for well-formed outputs: <sec>text</sec> joined in
// section order. Re-parsing the result yields identical section texts.
std::string render(const StructuredOutput& output);

}  // namespace biqa::proto

#endif  // BIQA_OUTPUT_PROTOCOL_HPP_
