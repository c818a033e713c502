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

#include <cmath>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "snowpredict/baselines.h"
#include "snowpredict/error.h"

namespace snowpredict {
namespace {

TEST(Mle, PicksMajorityThenLexicographic) {
  FrequencyTable counts = {{"make", 10}, {"sell", 90}, {"buy", 50}, {"get", 50}};
  std::vector<std::string> pair = {"make", "sell"};
  EXPECT_EQ(MlePredict(pair, counts), "sell");
  std::vector<std::string> tie = {"get", "buy"};
  EXPECT_EQ(MlePredict(tie, counts), "buy");
  std::vector<std::string> single = {"make"};
  EXPECT_EQ(MlePredict(single, counts), "make");
  std::vector<std::string> none;
  EXPECT_THROW(MlePredict(none, counts), DataError);
}

// Corpus "a b" / "a c a":
//   unigrams a:3 b:1 c:1 </s>:2, N = 7, V = 4
//   P1(a) = 4/11, P1(b) = P1(c) = 2/11, P1(</s>) = 3/11
//   context a: total 3, types 3, bow = (0.5 * 3 / 3) / (1 - 7/11) = 11/8
//   context <s>: total 2, types 1, bow = (0.5 * 1 / 2) / (1 - 4/11) = 11/28
//   context "<s> a": total 2, types 2, bow = 0.5 / (1 - 1/3) = 3/4
NgramTable HandTable() {
  NgramTable::Builder b(0.5);
  std::vector<std::string> s1 = {"a", "b"};
  std::vector<std::string> s2 = {"a", "c", "a"};
  b.AddSentence(s1);
  b.AddSentence(s2);
  return std::move(b).Build();
}

TEST(Trigram, MatchesHandComputedBackoff) {
  NgramTable t = HandTable();
  EXPECT_EQ(t.total_tokens(), 7u);
  EXPECT_EQ(t.vocabulary_size(), 4u);
  EXPECT_EQ(t.Count("<s> <s> a"), 2u);
  EXPECT_DOUBLE_EQ(t.UnigramProb("a"), 4.0 / 11);
  EXPECT_DOUBLE_EQ(t.UnigramProb("zzz"), 1.0 / 11);
  EXPECT_DOUBLE_EQ(t.BigramProb("b", "a"), 1.0 / 6);
  EXPECT_DOUBLE_EQ(t.BigramProb("a", "a"), 11.0 / 8 * 4.0 / 11);
  EXPECT_DOUBLE_EQ(t.BigramProb("a", "<s>"), 0.75);
  EXPECT_DOUBLE_EQ(t.BigramProb("b", "<s>"), 11.0 / 28 * 2.0 / 11);
  EXPECT_DOUBLE_EQ(t.TrigramProb("b", "<s>", "a"), 0.25);
  EXPECT_DOUBLE_EQ(t.TrigramProb("a", "<s>", "a"), 0.75 * 0.5);
  EXPECT_DOUBLE_EQ(t.TrigramProb("</s>", "<s>", "a"), 0.75 / 6);
  // Unseen trigram and bigram context: unigram-backed.
  EXPECT_DOUBLE_EQ(t.TrigramProb("a", "x", "y"), 4.0 / 11);
  EXPECT_DOUBLE_EQ(TrigramScore("b", "<s>", "a", t), std::log(0.25));
}

TEST(Trigram, PredictUsesLeftContext) {
  NgramTable t = HandTable();
  std::vector<std::string> words = {"a", "?"};
  std::vector<std::string> ab = {"b", "a"};
  EXPECT_EQ(TrigramPredict(ab, words, 2, t), "a");
  std::vector<std::string> bc = {"c", "b"};
  EXPECT_EQ(TrigramPredict(bc, words, 2, t), "b");  // tie, lexicographic
}

TEST(Trigram, RightContextAddsTerms) {
  NgramTable t = HandTable();
  const double s = TrigramScore("c", "<s>", "a", "a", "", t);
  EXPECT_DOUBLE_EQ(s, std::log(t.TrigramProb("c", "<s>", "a")) +
                          std::log(t.TrigramProb("a", "a", "c")));
}

TEST(Trigram, DominantContinuationWins) {
  NgramTable::Builder b;
  std::vector<std::string> s = {"x", "y"};
  for (int i = 0; i < 5; ++i) b.AddSentence(s);
  std::vector<std::string> other = {"x", "z", "w"};
  b.AddSentence(other);
  NgramTable t = std::move(b).Build();
  for (const auto& v : t.vocabulary()) {
    EXPECT_GE(t.TrigramProb("y", "<s>", "x"), t.TrigramProb(v, "<s>", "x"));
  }
}

TEST(Trigram, DistributionsSumToOne) {
  std::mt19937_64 rng(2);
  NgramTable::Builder b;
  const char* words[] = {"a", "b", "c", "d", "e"};
  for (int i = 0; i < 40; ++i) {
    std::vector<std::string> s;
    for (int k = 0, n = 1 + static_cast<int>(rng() % 6); k < n; ++k) s.push_back(words[rng() % 5]);
    b.AddSentence(s);
  }
  NgramTable t = std::move(b).Build();
  std::vector<std::string> ctx = {"<s>", "a", "b", "c", "d", "e", "q"};
  for (const auto& u : ctx) {
    double bigram = 0;
    for (const auto& v : t.vocabulary()) bigram += t.BigramProb(v, u);
    EXPECT_NEAR(bigram, 1.0, 1e-6) << u;
    for (const auto& w : ctx) {
      double trigram = 0;
      for (const auto& v : t.vocabulary()) trigram += t.TrigramProb(v, w, u);
      EXPECT_NEAR(trigram, 1.0, 1e-6) << w << " " << u;
    }
  }
}

TEST(Trigram, RankingIgnoresUnrelatedSentences) {
  NgramTable::Builder b1, b2;
  std::vector<std::string> s1 = {"we", "make", "it"};
  std::vector<std::string> s2 = {"we", "sell", "it"};
  std::vector<std::string> s3 = {"we", "make", "that"};
  for (auto* b : {&b1, &b2}) {
    b->AddSentence(s1);
    b->AddSentence(s2);
    b->AddSentence(s3);
  }
  std::vector<std::string> noise = {"q", "r", "s"};
  b2.AddSentence(noise);
  NgramTable t1 = std::move(b1).Build();
  NgramTable t2 = std::move(b2).Build();
  std::vector<std::string> words = {"we", "?", "it"};
  std::vector<std::string> c = {"make", "sell"};
  EXPECT_EQ(TrigramPredict(c, words, 2, t1), TrigramPredict(c, words, 2, t2));
}

TEST(Trigram, SaveLoadRoundTrip) {
  NgramTable t = HandTable();
  std::stringstream buf;
  t.Save(buf);
  NgramTable back = NgramTable::Load(buf);
  EXPECT_EQ(back.vocabulary(), t.vocabulary());
  EXPECT_DOUBLE_EQ(back.TrigramProb("a", "<s>", "a"), t.TrigramProb("a", "<s>", "a"));
  std::istringstream bad("2\ta\t1\n");
  EXPECT_THROW(NgramTable::Load(bad), DataError);
}

}  // namespace
}  // namespace snowpredict
