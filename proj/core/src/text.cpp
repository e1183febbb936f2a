#include "biqa/text.hpp"

#include <algorithm>
#include <cctype>

namespace biqa::text {

namespace {

bool is_space(unsigned char c) { return std::isspace(c) != 0; }

// Edge punctuation is anything that is neither alphanumeric nor one of the
// interior-surviving characters. Hyphens and apostrophes are stripped at the
// edges too ("-dog" -> "dog") but preserved inside tokens.
bool is_strippable(unsigned char c) { return std::isalnum(c) == 0; }

}  // namespace

std::vector<std::string> normalize_tokens(std::string_view raw) {
  std::vector<std::string> out;
  size_t i = 0;
  const size_t n = raw.size();
  while (i < n) {
    while (i < n && is_space(static_cast<unsigned char>(raw[i]))) ++i;
    size_t start = i;
    while (i < n && !is_space(static_cast<unsigned char>(raw[i]))) ++i;
    if (i == start) continue;

    size_t lo = start;
    size_t hi = i;  // one past the end
    while (lo < hi && is_strippable(static_cast<unsigned char>(raw[lo]))) ++lo;
    while (hi > lo && is_strippable(static_cast<unsigned char>(raw[hi - 1]))) --hi;
    if (lo == hi) continue;

    std::string token(raw.substr(lo, hi - lo));
    std::transform(token.begin(), token.end(), token.begin(), [](unsigned char c) {
      return static_cast<char>(std::tolower(c));
    });
    out.push_back(std::move(token));
  }
  return out;
}

TokenBag token_bag(const std::vector<std::string>& tokens) {
  TokenBag bag;
  for (const auto& t : tokens) {
    ++bag.counts[t];
    ++bag.total;
  }
  return bag;
}

TokenBag bag_from_text(std::string_view raw) { return token_bag(normalize_tokens(raw)); }

TokenBag merge_bags(const std::vector<TokenBag>& bags) {
  TokenBag merged;
  for (const auto& bag : bags) {
    for (const auto& [w, c] : bag.counts) {
      merged.counts[w] += c;
      merged.total += c;
    }
  }
  return merged;
}

Rouge1Result rouge1_recall(const TokenBag& reference, const TokenBag& candidate) {
  if (reference.empty()) {
    return {0.0, true};
  }
  long long overlap = 0;
  for (const auto& [w, ref_count] : reference.counts) {
    overlap += std::min(ref_count, candidate.count(w));
  }
  return {static_cast<double>(overlap) / static_cast<double>(reference.total), false};
}

}  // namespace biqa::text
