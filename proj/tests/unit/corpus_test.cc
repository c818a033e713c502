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

#include <sstream>

#include <gtest/gtest.h>

#include "oracles.h"
#include "snowpredict/corpus.h"
#include "snowpredict/error.h"

namespace snowpredict {
namespace {

using testing::ClockSentence;
using testing::FlatSentence;
using testing::MakeSentence;

TEST(CorpusParse, ReadsSentencesSeparatedByBlankLines) {
  std::istringstream in(
      "1\tJohn\tNNP\t2\tsubj\n2\truns\tVBZ\t0\t_\n\n"
      "1 Mary NNP 0 _\n");
  auto result = ParseCorpus(in);
  ASSERT_EQ(result.sentences.size(), 2u);
  EXPECT_TRUE(result.diagnostics.empty());
  EXPECT_EQ(result.sentences[0].at(1).deprel, "subj");
  EXPECT_EQ(result.sentences[0].at(2).deprel, "");
  EXPECT_EQ(result.sentences[1].at(1).form, "Mary");
}

TEST(CorpusParse, SkipsBadSentencesAndContinues) {
  std::istringstream in(
      "1\ta\tN\t2\tx\n2\tb\tN\t1\tx\n\n"  // cycle
      "1\tc\tN\t0\t_\n\n"
      "1\td\tN\t0\n\n"                    // four columns
      "1\te\tN\t5\t_\n\n"                 // head out of range
      "1\tf\tN\t1\t_\n\n"                 // self-loop
      "2\tg\tN\t0\t_\n");                 // index out of sequence
  auto result = ParseCorpus(in);
  ASSERT_EQ(result.sentences.size(), 1u);
  EXPECT_EQ(result.sentences[0].at(1).form, "c");
  EXPECT_EQ(result.diagnostics.size(), 5u);
}

TEST(CorpusParse, DiagnosticsNameTheProblem) {
  std::istringstream in("1\ta\tN\t2\tx\n2\tb\tN\t1\tx\n");
  auto result = ParseCorpus(in);
  ASSERT_EQ(result.diagnostics.size(), 1u);
  EXPECT_NE(result.diagnostics[0].message.find("cyclic"), std::string::npos);
}

TEST(CorpusParse, WriteThenParseRoundTrips) {
  std::vector<Sentence> sentences = {testing::BoardSentence(true), ClockSentence()};
  std::ostringstream out;
  WriteCorpus(out, sentences);
  std::istringstream in(out.str());
  auto result = ParseCorpus(in);
  EXPECT_TRUE(result.diagnostics.empty());
  EXPECT_EQ(result.sentences, sentences);
}

TEST(InformationSource, ClockSentenceInstances) {
  InformationSource is(ClockSentence());
  EXPECT_EQ(is.size(), 11);
  EXPECT_EQ(is.word(1), "John");
  EXPECT_EQ(is.word(3), "at");
  EXPECT_EQ(is.word(11), "is");
  EXPECT_EQ(*is.Unary("pos", 4), "DET");
  const auto& inst = is.instances();
  EXPECT_NE(std::find(inst.begin(), inst.end(), PredicateInstance{"pos", {4}, "DET"}),
            inst.end());
}

TEST(InformationSource, SingleTokenHasWordAndPosOnly) {
  InformationSource is(FlatSentence({{"Go", "VB"}}));
  std::vector<PredicateInstance> expected = {{"pos", {1}, "VB"}, {"word", {1}, "Go"}};
  auto got = is.instances();
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, expected);
}

TEST(InformationSource, RelationInstancesCarryBothForms) {
  InformationSource is(testing::BoardSentence(true));
  const auto& inst = is.instances();
  EXPECT_NE(std::find(inst.begin(), inst.end(),
                      PredicateInstance{"subj", {2, 8}, "Vinken will"}),
            inst.end());
  EXPECT_TRUE(is.HasRelation("subj", 2));
  EXPECT_FALSE(is.HasRelation("subj", 9));
}

TEST(InformationSource, PassiveSentenceHasNoSubject) {
  auto s = MakeSentence({{"board", "NN", 3, "obj"},
                         {"was", "VBD", 3, "aux_vrb"},
                         {"joined", "VBN", 0, ""}});
  InformationSource is(s);
  for (const auto& p : is.instances()) EXPECT_NE(p.name, "subj");
}

TEST(Structures, LinearAndDependencyEdges) {
  auto sis = BuildStructures(MakeSentence(
      {{"a", "N", 2, "x"}, {"b", "V", 0, ""}, {"c", "N", 2, "y"}}));
  const Graph* dep = sis.Find("dep");
  ASSERT_NE(dep, nullptr);
  EXPECT_TRUE(dep->bottom_up());
  EXPECT_FALSE(sis.linear().bottom_up());
  std::vector<std::pair<int, int>> lin = {{1, 2}, {2, 3}};
  std::vector<std::pair<int, int>> deps = {{2, 1}, {2, 3}};
  EXPECT_EQ(sis.linear().edges(), lin);
  EXPECT_EQ(dep->edges(), deps);
  EXPECT_TRUE(dep->IsAcyclic());
}

TEST(Structures, CycleIsRejected) {
  Sentence s = MakeSentence({{"a", "N", 2, "x"}, {"b", "N", 1, "x"}});
  EXPECT_THROW(BuildStructures(s), DataError);
  EXPECT_TRUE(ValidateSentence(s).has_value());
}

TEST(Graph, TopologicalOrderPrefersLowNodes) {
  Graph g(4, {{3, 1}, {2, 1}, {4, 2}}, false);
  auto order = g.TopologicalOrder();
  ASSERT_TRUE(order.has_value());
  EXPECT_EQ(*order, (std::vector<int>{3, 4, 2, 1}));
  Graph cyclic(2, {{1, 2}, {2, 1}}, false);
  EXPECT_FALSE(cyclic.IsAcyclic());
}

TEST(Registry, CollectsLabelsFromCorpus) {
  std::vector<Sentence> corpus = {testing::BoardSentence(true)};
  auto reg = PredicateRegistry::FromCorpus(corpus);
  EXPECT_TRUE(reg.IsUnary("word"));
  EXPECT_TRUE(reg.IsRelation("aux_vrb"));
  EXPECT_FALSE(reg.Contains("lemma"));
  EXPECT_TRUE(PredicateRegistry::Permissive().IsRelation("anything"));
}

}  // namespace
}  // namespace snowpredict
