// Copyright 2026 The snowpredict Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "snowpredict/baselines.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "snowpredict/error.h"

namespace snowpredict {
namespace {

std::string Join(std::string_view a, std::string_view b) {
  std::string s;
  s.reserve(a.size() + b.size() + 1);
  s.append(a).append(" ").append(b);
  return s;
}

// Splits "context word" at its last space.
std::pair<std::string_view, std::string_view> SplitLast(std::string_view gram) {
  size_t space = gram.rfind(' ');
  return {gram.substr(0, space), gram.substr(space + 1)};
}

}  // namespace

std::string MlePredict(std::span<const std::string> candidates,
                       const FrequencyTable& counts) {
  if (candidates.empty()) throw DataError("empty candidate set");
  const std::string* best = nullptr;
  std::uint64_t best_count = 0;
  for (const std::string& c : candidates) {
    auto it = counts.find(c);
    const std::uint64_t count = it == counts.end() ? 0 : it->second;
    if (!best || count > best_count || (count == best_count && c < *best)) {
      best = &c;
      best_count = count;
    }
  }
  return *best;
}

NgramTable::Builder::Builder(double discount) : discount_(discount) {
  if (!(discount > 0.0 && discount < 1.0)) {
    throw DataError("discount must be in (0, 1)");
  }
}

void NgramTable::Builder::AddSentence(std::span<const std::string> words) {
  std::vector<std::string_view> seq;
  seq.reserve(words.size() + 3);
  seq.push_back(kSentenceStart);
  seq.push_back(kSentenceStart);
  for (const std::string& w : words) seq.push_back(w);
  seq.push_back(kSentenceEnd);
  for (size_t i = 0; i < seq.size(); ++i) {
    ++counts_[0][std::string(seq[i])];
    if (i + 1 < seq.size()) ++counts_[1][Join(seq[i], seq[i + 1])];
    if (i + 2 < seq.size()) {
      ++counts_[2][Join(Join(seq[i], seq[i + 1]), seq[i + 2])];
    }
  }
}

NgramTable NgramTable::Builder::Build() && {
  NgramTable table;
  table.discount_ = discount_;
  for (int n = 0; n < 3; ++n) table.counts_[n] = std::move(counts_[n]);
  table.Finalize();
  return table;
}

void NgramTable::Finalize() {
  vocabulary_.clear();
  total_ = 0;
  for (const auto& [word, count] : counts_[0]) {
    if (word == kSentenceStart) continue;
    vocabulary_.push_back(word);
    total_ += count;
  }
  std::sort(vocabulary_.begin(), vocabulary_.end());
  const std::uint64_t vocab = vocabulary_.size();

  auto finalize_order = [&](const std::unordered_map<std::string, std::uint64_t>& grams,
                            std::unordered_map<std::string, ContextStats>* contexts,
                            auto lower_prob) {
    contexts->clear();
    std::unordered_map<std::string, double> seen_mass;
    for (const auto& [gram, count] : grams) {
      auto [context, word] = SplitLast(gram);
      if (word == kSentenceStart) continue;
      ContextStats& stats = (*contexts)[std::string(context)];
      stats.total += count;
      ++stats.types;
      seen_mass[std::string(context)] += lower_prob(context, word);
    }
    for (auto& [context, stats] : *contexts) {
      if (stats.types >= vocab) {
        stats.discount = 0.0;
        stats.backoff = 0.0;
        continue;
      }
      stats.discount = discount_;
      const double freed = discount_ * static_cast<double>(stats.types) /
                           static_cast<double>(stats.total);
      stats.backoff = freed / (1.0 - seen_mass[context]);
    }
  };

  finalize_order(counts_[1], &bigram_contexts_,
                 [&](std::string_view, std::string_view word) {
                   return UnigramProb(word);
                 });
  finalize_order(counts_[2], &trigram_contexts_,
                 [&](std::string_view context, std::string_view word) {
                   return BigramProb(word, SplitLast(context).second);
                 });
}

std::uint64_t NgramTable::Count(std::string_view gram) const {
  const int order = static_cast<int>(std::count(gram.begin(), gram.end(), ' '));
  if (order > 2) return 0;
  auto it = counts_[order].find(std::string(gram));
  return it == counts_[order].end() ? 0 : it->second;
}

double NgramTable::UnigramProb(std::string_view word) const {
  std::uint64_t count = 0;
  if (word != kSentenceStart) {
    auto it = counts_[0].find(std::string(word));
    if (it != counts_[0].end()) count = it->second;
  }
  return (static_cast<double>(count) + 1.0) /
         static_cast<double>(total_ + vocabulary_.size());
}

double NgramTable::BigramProb(std::string_view word, std::string_view prev) const {
  auto ctx = bigram_contexts_.find(std::string(prev));
  if (ctx == bigram_contexts_.end() || ctx->second.total == 0) {
    return UnigramProb(word);
  }
  const ContextStats& stats = ctx->second;
  auto it = counts_[1].find(Join(prev, word));
  if (it != counts_[1].end() && word != kSentenceStart) {
    return (static_cast<double>(it->second) - stats.discount) /
           static_cast<double>(stats.total);
  }
  return stats.backoff * UnigramProb(word);
}

double NgramTable::TrigramProb(std::string_view word, std::string_view prev2,
                               std::string_view prev1) const {
  const std::string context = Join(prev2, prev1);
  auto ctx = trigram_contexts_.find(context);
  if (ctx == trigram_contexts_.end() || ctx->second.total == 0) {
    return BigramProb(word, prev1);
  }
  const ContextStats& stats = ctx->second;
  auto it = counts_[2].find(Join(context, word));
  if (it != counts_[2].end() && word != kSentenceStart) {
    return (static_cast<double>(it->second) - stats.discount) /
           static_cast<double>(stats.total);
  }
  return stats.backoff * BigramProb(word, prev1);
}

void NgramTable::Save(std::ostream& out) const {
  for (int n = 0; n < 3; ++n) {
    std::vector<std::pair<std::string, std::uint64_t>> grams(counts_[n].begin(),
                                                              counts_[n].end());
    std::sort(grams.begin(), grams.end());
    for (const auto& [gram, count] : grams) {
      out << (n + 1) << '\t' << gram << '\t' << count << '\n';
    }
  }
}

NgramTable NgramTable::Load(std::istream& in, double discount) {
  NgramTable table;
  table.discount_ = discount;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    size_t t1 = line.find('\t');
    size_t t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string::npos) {
      throw DataError("n-gram table line " + std::to_string(line_no) +
                      ": expected order, gram and count");
    }
    int order = 0;
    std::uint64_t count = 0;
    auto r1 = std::from_chars(line.data(), line.data() + t1, order);
    auto r2 = std::from_chars(line.data() + t2 + 1, line.data() + line.size(), count);
    std::string gram = line.substr(t1 + 1, t2 - t1 - 1);
    if (r1.ec != std::errc() || r2.ec != std::errc() || order < 1 || order > 3 ||
        std::count(gram.begin(), gram.end(), ' ') != order - 1) {
      throw DataError("n-gram table line " + std::to_string(line_no) + ": malformed");
    }
    table.counts_[order - 1][gram] = count;
  }
  table.Finalize();
  return table;
}

double TrigramScore(std::string_view candidate, std::string_view left2,
                    std::string_view left1, const NgramTable& table) {
  return std::log(table.TrigramProb(candidate, left2, left1));
}

double TrigramScore(std::string_view candidate, std::string_view left2,
                    std::string_view left1, std::string_view right1,
                    std::string_view right2, const NgramTable& table) {
  double score = TrigramScore(candidate, left2, left1, table);
  score += std::log(table.TrigramProb(right1, left1, candidate));
  if (!right2.empty()) score += std::log(table.TrigramProb(right2, candidate, right1));
  return score;
}

std::string TrigramPredict(std::span<const std::string> candidates,
                           std::span<const std::string> words, int position,
                           const NgramTable& table, bool use_right_context) {
  if (candidates.empty()) throw DataError("empty candidate set");
  const int n = static_cast<int>(words.size());
  auto at = [&](int i) -> std::string_view {
    if (i < 1) return kSentenceStart;
    if (i > n) return kSentenceEnd;
    return words[i - 1];
  };
  const std::string_view left2 = at(position - 2);
  const std::string_view left1 = at(position - 1);
  const std::string_view right1 = at(position + 1);
  const std::string_view right2 = position + 1 > n ? std::string_view() : at(position + 2);

  const std::string* best = nullptr;
  double best_score = 0.0;
  for (const std::string& c : candidates) {
    const double score =
        use_right_context ? TrigramScore(c, left2, left1, right1, right2, table)
                          : TrigramScore(c, left2, left1, table);
    if (!best || score > best_score || (score == best_score && c < *best)) {
      best = &c;
      best_score = score;
    }
  }
  return *best;
}

}  // namespace snowpredict
