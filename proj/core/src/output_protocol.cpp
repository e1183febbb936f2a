#include "biqa/output_protocol.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace biqa::proto {

namespace {

std::string_view trim(std::string_view s) {
  size_t b = 0;
  size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool whitespace_only(std::string_view s) { return trim(s).empty(); }

}  // namespace

TagSchema TagSchema::make(std::vector<std::string> sections, std::string answer_section) {
  if (sections.empty()) throw std::invalid_argument("tag schema needs at least one section");
  std::set<std::string> seen;
  for (const auto& s : sections) {
    if (s.empty()) throw std::invalid_argument("tag schema section name is empty");
    if (!seen.insert(s).second)
      throw std::invalid_argument("duplicate tag schema section: " + s);
  }
  if (!seen.count(answer_section))
    throw std::invalid_argument("answer section '" + answer_section + "' not in schema");
  TagSchema schema;
  schema.sections = std::move(sections);
  schema.answer_section = std::move(answer_section);
  return schema;
}

TagSchema TagSchema::stage1_default() { return make({"caption", "think", "answer"}, "answer"); }

TagSchema TagSchema::stage2_default() { return make({"think", "answer"}, "answer"); }

TagSchema TagSchema::stage1_detailed() {
  return make({"subject", "advantage", "flaw", "think", "answer"}, "answer");
}

const std::string* StructuredOutput::section(std::string_view name) const {
  for (const auto& [sec, text] : sections) {
    if (sec == name) return &text;
  }
  return nullptr;
}

std::string StructuredOutput::reasoning_text() const {
  std::string joined;
  for (const auto& [sec, text] : sections) {
    if (sec == answer_section) continue;
    if (!joined.empty() && !text.empty()) joined += ' ';
    joined += text;
  }
  return joined;
}

std::optional<double> extract_rating(std::string_view text) {
  const size_t n = text.size();
  for (size_t i = 0; i < n; ++i) {
    const bool digit = std::isdigit(static_cast<unsigned char>(text[i])) != 0;
    const bool signed_digit = text[i] == '-' && i + 1 < n &&
                              std::isdigit(static_cast<unsigned char>(text[i + 1])) != 0;
    if (!digit && !signed_digit) continue;

    size_t j = i;
    if (text[j] == '-') ++j;
    while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j < n && text[j] == '.' && j + 1 < n &&
        std::isdigit(static_cast<unsigned char>(text[j + 1]))) {
      ++j;
      while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    }
    const std::string number(text.substr(i, j - i));
    const double value = std::strtod(number.c_str(), nullptr);
    if (std::isfinite(value)) return value;
    return std::nullopt;
  }
  return std::nullopt;
}

StructuredOutput parse_output(std::string_view raw, const TagSchema& schema) {
  StructuredOutput out;
  out.answer_section = schema.answer_section;

  bool structure_ok = true;
  size_t pos = 0;
  for (const auto& name : schema.sections) {
    const std::string open = "<" + name + ">";
    const std::string close = "</" + name + ">";

    // Only whitespace may separate sections.
    size_t tag_at = raw.find(open, pos);
    if (tag_at == std::string_view::npos || !whitespace_only(raw.substr(pos, tag_at - pos))) {
      structure_ok = false;
      break;
    }
    size_t text_at = tag_at + open.size();
    size_t close_at = raw.find(close, text_at);
    if (close_at == std::string_view::npos) {
      structure_ok = false;
      break;
    }
    out.sections.emplace_back(name, std::string(trim(raw.substr(text_at, close_at - text_at))));
    pos = close_at + close.size();
  }
  if (structure_ok && !whitespace_only(raw.substr(pos))) structure_ok = false;
  out.well_formed = structure_ok;

  if (const std::string* answer = out.section(schema.answer_section)) {
    out.rating = extract_rating(*answer);
  } else {
    // Lenient fallback: a properly tagged answer span anywhere in the
    // transcript still produces a rating, even when the structure around it
    // is broken. Keeps the prediction reward decoupled from the format
    // reward for partially correct rollouts.
    const std::string open = "<" + schema.answer_section + ">";
    const std::string close = "</" + schema.answer_section + ">";
    size_t at = raw.find(open);
    if (at != std::string_view::npos) {
      size_t text_at = at + open.size();
      size_t close_at = raw.find(close, text_at);
      if (close_at != std::string_view::npos) {
        out.rating = extract_rating(raw.substr(text_at, close_at - text_at));
      }
    }
  }
  return out;
}

std::string render(const StructuredOutput& output) {
  std::string result;
  for (const auto& [sec, text] : output.sections) {
    result += "<" + sec + ">" + text + "</" + sec + ">";
  }
  return result;
}

}  // namespace biqa::proto
