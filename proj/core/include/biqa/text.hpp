#ifndef BIQA_TEXT_HPP_
#define BIQA_TEXT_HPP_

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace biqa::text {

// Multiset of normalized unigrams. Counts are always >= 1 and total is the
// sum of all counts, so an empty bag has total == 0.
struct TokenBag {
  std::map<std::string, int> counts;
  int total = 0;

  bool empty() const { return total == 0; }
  int count(const std::string& w) const {
    auto it = counts.find(w);
    return it == counts.end() ? 0 : it->second;
  }
};

struct Rouge1Result {
  double score = 0.0;
  // True when the reference bag was empty and the score is 0 by definition.
  bool degenerate_reference = false;
};

// Lowercases, splits on whitespace and strips leading/trailing punctuation
// from each token. Interior hyphens and apostrophes survive ("well-lit",
// "don't"); tokens that strip down to nothing are dropped. No stemming, no
// stop-word removal.
std::vector<std::string> normalize_tokens(std::string_view raw);

TokenBag token_bag(const std::vector<std::string>& tokens);

// Convenience: normalize then count.
TokenBag bag_from_text(std::string_view raw);

// Merge bags by summing counts (multi-annotator concatenation).
TokenBag merge_bags(const std::vector<TokenBag>& bags);

// Unigram recall: sum_w min(C_ref(w), C_cand(w)) / sum_w C_ref(w).
// An empty reference yields score 0 with the degenerate flag set; this
// function never throws.
Rouge1Result rouge1_recall(const TokenBag& reference, const TokenBag& candidate);

}  // namespace biqa::text

#endif  // BIQA_TEXT_HPP_
