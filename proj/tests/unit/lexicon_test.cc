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

#include "snowpredict/error.h"
#include "snowpredict/lexicon.h"

namespace snowpredict {
namespace {

TEST(Lexicon, InternIsIdempotent) {
  Lexicon lex;
  EXPECT_EQ(lex.Intern("w:John", true), 0u);
  EXPECT_EQ(lex.Intern("w:John", true), 0u);
  EXPECT_EQ(lex.Intern("w:Mary", true), 1u);
  EXPECT_EQ(lex.Count(0), 2u);
  EXPECT_EQ(lex.size(), 2u);
}

TEST(Lexicon, EvaluationModeDoesNotAllocate) {
  Lexicon lex;
  lex.Intern("seen", true);
  EXPECT_FALSE(lex.Intern("w:unseen", false).has_value());
  EXPECT_EQ(lex.Intern("seen", false), 0u);
  EXPECT_EQ(lex.Count(0), 1u);
  EXPECT_EQ(lex.size(), 1u);
}

TEST(Lexicon, FrozenRejectsAllocation) {
  Lexicon lex;
  lex.Intern("a", true);
  lex.Freeze();
  EXPECT_EQ(lex.Intern("a", false), 0u);
  EXPECT_THROW(lex.Intern("b", true), std::logic_error);
}

TEST(Lexicon, ManyIdentitiesGetContiguousIds) {
  Lexicon lex;
  for (int i = 0; i < 400000; ++i) {
    ASSERT_EQ(lex.Intern("f" + std::to_string(i), true), static_cast<FeatureId>(i));
  }
  EXPECT_EQ(lex.size(), 400000u);
  for (FeatureId id : {0u, 12345u, 399999u}) {
    EXPECT_EQ(lex.Find(lex.Identity(id)), id);
  }
}

TEST(Lexicon, SaveLoadRoundTrip) {
  Lexicon lex;
  lex.Intern("colloc linear -2 2 word word :: John X", true);
  lex.Intern("proximity word linear -10 10 :: at", true);
  lex.Intern("proximity word linear -10 10 :: at", true);
  std::ostringstream out;
  lex.Save(out);
  EXPECT_EQ(out.str(),
            "0\t1\tcolloc linear -2 2 word word :: John X\n"
            "1\t2\tproximity word linear -10 10 :: at\n");
  std::istringstream in(out.str());
  Lexicon back = Lexicon::Load(in);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back.Identity(1), lex.Identity(1));
  EXPECT_EQ(back.Count(1), 2u);
}

TEST(Lexicon, LoadRejectsBrokenFiles) {
  for (const char* text : {"1\t1\ta\n", "0\t0\ta\n", "0\t1\ta\n1\t1\ta\n", "0\tx\ta\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(Lexicon::Load(in), DataError) << text;
  }
}

}  // namespace
}  // namespace snowpredict
