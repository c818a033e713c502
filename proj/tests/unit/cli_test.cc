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

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

namespace {

namespace fs = std::filesystem;

struct Result {
  int status = -1;
  std::string out;
};

// Runs the tool with `args` through the shell; stderr is discarded unless
// the arguments redirect it.
Result RunTool(const std::string& args) {
  const std::string cmd = std::string(SNOWPREDICT_CLI_PATH) + " --jobs 1 " + args;
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = fs::temp_directory_path() / ("snowpredict_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
    const Result synth = RunTool("synth --verbs 10 --sentences 5000 --seed 7 --output " +
                             P("corpus.conll") + " --sets " + P("pairs.tsv") +
                             " --manifest " + P("manifest.tsv"));
    ASSERT_EQ(synth.status, 0);
    const Result prep = RunTool("prepare --input " + P("corpus.conll") + " --train-out " +
                            P("train.conll") + " --test-out " + P("test.conll"));
    ASSERT_EQ(prep.status, 0);
    const Result train = RunTool("train --corpus " + P("train.conll") + " --features " +
                             NonLinear() + " --sets " + P("pairs.tsv") + " --model " +
                             P("model.snow"));
    ASSERT_EQ(train.status, 0);
  }
  static void TearDownTestSuite() { fs::remove_all(dir_); }

  static std::string P(const std::string& name) { return (dir_ / name).string(); }
  static std::string NonLinear() {
    return std::string(SNOWPREDICT_TEST_DATA_DIR) + "/features/nonlinear.feat";
  }

  static fs::path dir_;
};

fs::path Cli::dir_;

TEST_F(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(RunTool("synth --no-such-flag 2>/dev/null").status, 1);
  EXPECT_EQ(RunTool("frobnicate 2>/dev/null").status, 1);
  EXPECT_EQ(RunTool("train --corpus /no/such/file --sets x --model y 2>/dev/null").status, 1);
  EXPECT_EQ(RunTool("--help").status, 0);
}

TEST_F(Cli, DataErrorsExitTwo) {
  std::ofstream(P("bad.tsv")) << "pair\tmake make\n";
  EXPECT_EQ(RunTool("train --corpus " + P("train.conll") + " --features " + NonLinear() +
                    " --sets " + P("bad.tsv") +
                " --model " + P("bad.snow") + " 2>/dev/null")
                .status,
            2);
}

TEST_F(Cli, SynthIsDeterministic) {
  const Result a = RunTool("synth --verbs 10 --sentences 5000 --seed 7");
  const Result b = RunTool("synth --verbs 10 --sentences 5000 --seed 7");
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, Slurp(P("corpus.conll")));
}

TEST_F(Cli, EvalPrintsReport) {
  const Result r = RunTool("eval --model " + P("model.snow") + " --test " + P("test.conll") +
                       " --sets " + P("pairs.tsv"));
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("Bline"), std::string::npos);
  EXPECT_NE(r.out.find("SNoW"), std::string::npos);
}

TEST_F(Cli, InspectFindsPlantedSubjectCollocation) {
  // The manifest names the planted subject nouns of every verb.
  std::ifstream manifest(P("manifest.tsv"));
  std::string verb, kind, words;
  std::vector<std::string> subjects;
  std::string target;
  while (std::getline(manifest, verb, '\t') && std::getline(manifest, kind, '\t') &&
         std::getline(manifest, words)) {
    if (target.empty()) target = verb;
    if (verb == target && kind == "subj") {
      std::istringstream ws(words);
      for (std::string w; ws >> w;) subjects.push_back(w);
    }
  }
  ASSERT_FALSE(subjects.empty());
  const Result r = RunTool("inspect --model " + P("model.snow") + " --target " + target +
                       " --top 10");
  ASSERT_EQ(r.status, 0);
  bool planted = false;
  for (const auto& s : subjects) {
    planted |= r.out.find("subj-verb :: " + s + " X") != std::string::npos;
  }
  EXPECT_TRUE(planted) << r.out;
}

TEST_F(Cli, InspectEdgeCases) {
  const Result none = RunTool("inspect --model " + P("model.snow") + " --target v00 --top 0");
  EXPECT_EQ(none.status, 0);
  EXPECT_TRUE(none.out.empty());
  const Result missing =
      RunTool("inspect --model " + P("model.snow") + " --target nosuch 2>&1");
  EXPECT_EQ(missing.status, 2);
  EXPECT_NE(missing.out.find("v00"), std::string::npos);
}

TEST_F(Cli, ConfigFileMatchesFlags) {
  const std::string flags = "run --train " + P("train.conll") + " --test " + P("test.conll") +
                            " --learner nb --learner winnow";
  std::ofstream(P("run.ini")) << "[run]\ntrain = \"" << P("train.conll") << "\"\ntest = \""
                              << P("test.conll") << "\"\nlearner = [\"nb\", \"winnow\"]\n";
  const Result a = RunTool(flags);
  const Result b = RunTool("--config " + P("run.ini") + " run");
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
}

}  // namespace
