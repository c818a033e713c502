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

// Annotated corpus model: tokens with word/POS and labeled dependency heads,
// the predicate view of a sentence (its information source) and the graph
// view (its structural sources).

#ifndef SNOWPREDICT_CORPUS_H_
#define SNOWPREDICT_CORPUS_H_

#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace snowpredict {

struct Token {
  int index = 0;        // 1-based position
  std::string form;
  std::string pos;
  int head = 0;         // 0 for the root
  std::string deprel;   // empty when absent ("_" on disk)

  bool operator==(const Token&) const = default;
};

struct Sentence {
  std::vector<Token> tokens;

  int size() const { return static_cast<int>(tokens.size()); }
  // 1-based access.
  const Token& at(int index) const { return tokens.at(index - 1); }

  bool operator==(const Sentence&) const = default;
};

// Returns a diagnostic if the sentence violates the token invariants
// (sequential 1-based indices, head range, no self-loops, acyclic heads).
std::optional<std::string> ValidateSentence(const Sentence& sentence);

struct Diagnostic {
  int line = 0;  // 1-based line in the input stream
  std::string message;
};

struct CorpusParseResult {
  std::vector<Sentence> sentences;
  std::vector<Diagnostic> diagnostics;  // one per rejected sentence or line
};

// Reads the five-column corpus format (INDEX FORM POS HEAD DEPREL, blank line
// between sentences). Invalid sentences are skipped and reported.
CorpusParseResult ParseCorpus(std::istream& in);
CorpusParseResult ReadCorpusFile(const std::string& path);

// Canonical serialization: tab-separated columns, "_" for an empty DEPREL,
// one blank line after every sentence.
void WriteCorpus(std::ostream& out, std::span<const Sentence> sentences);
void WriteCorpusFile(const std::string& path,
                     std::span<const Sentence> sentences);

// ---------------------------------------------------------------------------
// Information source

inline constexpr std::string_view kWordPredicate = "word";
inline constexpr std::string_view kPosPredicate = "pos";

struct PredicateInstance {
  std::string name;
  std::vector<int> args;  // token indices, arity = args.size()
  std::string value;

  bool operator==(const PredicateInstance&) const = default;
  auto operator<=>(const PredicateInstance&) const = default;
};

// Non-empty predicate instances of one sentence: word(i), pos(i) for every
// token and L(d, h) for every dependency edge h -> d labeled L. The value of a
// relation instance is "form(d) form(h)".
class InformationSource {
 public:
  InformationSource() = default;
  explicit InformationSource(const Sentence& sentence);

  int size() const { return static_cast<int>(words_.size()); }
  const std::vector<PredicateInstance>& instances() const { return instances_; }

  // Value of a unary predicate (word or pos) at a 1-based position.
  std::optional<std::string_view> Unary(std::string_view predicate,
                                        int position) const;
  std::string_view word(int position) const { return words_[position - 1]; }
  std::string_view pos(int position) const { return tags_[position - 1]; }

  // True iff the instance label(dependent, head(dependent)) is present.
  bool HasRelation(std::string_view label, int dependent) const;

 private:
  std::vector<std::string> words_;
  std::vector<std::string> tags_;
  std::vector<std::string> labels_;  // incoming label per token, may be empty
  std::vector<PredicateInstance> instances_;
};

InformationSource BuildInformationSource(const Sentence& sentence);

// Predicate names available to feature definitions: the unary word and pos
// predicates plus every dependency label seen in a corpus.
class PredicateRegistry {
 public:
  PredicateRegistry();
  static PredicateRegistry FromCorpus(std::span<const Sentence> sentences);
  // Treats every name other than word and pos as a dependency label. Used for
  // definitions stored alongside a trained model.
  static PredicateRegistry Permissive();

  void AddRelation(std::string label) { relations_.insert(std::move(label)); }
  bool IsUnary(std::string_view name) const;
  bool IsRelation(std::string_view name) const;
  bool permissive() const { return permissive_; }
  bool Contains(std::string_view name) const {
    return IsUnary(name) || IsRelation(name);
  }
  const std::set<std::string, std::less<>>& relations() const {
    return relations_;
  }

 private:
  std::set<std::string, std::less<>> relations_;
  bool permissive_ = false;
};

// ---------------------------------------------------------------------------
// Structural sources

inline constexpr std::string_view kLinearStructure = "linear";
inline constexpr std::string_view kDependencyStructure = "dep";

// A directed graph over token positions 1..n.
class Graph {
 public:
  Graph() = default;
  // `bottom_up` marks graphs whose chains are read against edge direction
  // (dependency graphs: dependent first, head last).
  Graph(int num_nodes, std::vector<std::pair<int, int>> edges, bool bottom_up);

  int num_nodes() const { return num_nodes_; }
  bool bottom_up() const { return bottom_up_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& successors(int node) const { return out_[node]; }
  const std::vector<int>& predecessors(int node) const { return in_[node]; }

  // Kahn order; empty optional if the graph has a cycle.
  std::optional<std::vector<int>> TopologicalOrder() const;
  bool IsAcyclic() const { return TopologicalOrder().has_value(); }

 private:
  int num_nodes_ = 0;
  bool bottom_up_ = false;
  std::vector<std::pair<int, int>> edges_;  // sorted (from, to)
  std::vector<std::vector<int>> out_;       // indexed 0..n, slot 0 unused
  std::vector<std::vector<int>> in_;
};

class StructuralSource {
 public:
  explicit StructuralSource(int size = 0) : size_(size) {}

  int size() const { return size_; }
  const Graph* Find(std::string_view name) const;
  const Graph& linear() const { return *Find(kLinearStructure); }
  void Add(std::string name, Graph graph);
  std::vector<std::string> names() const;

 private:
  int size_ = 0;
  std::map<std::string, Graph, std::less<>> graphs_;
};

// Linear edges (i, i+1) plus dependency edges (head, dependent) for every
// non-root token. Throws DataError if the dependency edges have a cycle.
StructuralSource BuildStructures(const Sentence& sentence);

// A sentence together with its derived views.
struct AnalyzedSentence {
  InformationSource is;
  StructuralSource sis;
};

AnalyzedSentence Analyze(const Sentence& sentence);

}  // namespace snowpredict

#endif  // SNOWPREDICT_CORPUS_H_
