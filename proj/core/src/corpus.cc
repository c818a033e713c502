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

#include "snowpredict/corpus.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "snowpredict/error.h"

namespace snowpredict {
namespace {

constexpr std::string_view kAbsent = "_";

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size()) break;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

bool ParseInt(std::string_view text, int* value) {
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), *value);
  return ec == std::errc() && ptr == text.data() + text.size();
}

struct PendingLine {
  int line;
  std::string text;
};

}  // namespace

std::optional<std::string> ValidateSentence(const Sentence& sentence) {
  const int n = sentence.size();
  if (n == 0) return "empty sentence";
  std::vector<bool> seen(n + 1, false);
  for (int i = 0; i < n; ++i) {
    const Token& t = sentence.tokens[i];
    if (t.index >= 1 && t.index <= n && seen[t.index]) {
      return "duplicate index " + std::to_string(t.index);
    }
    if (t.index != i + 1) {
      return "index " + std::to_string(t.index) + " out of sequence (expected " +
             std::to_string(i + 1) + ")";
    }
    seen[t.index] = true;
  }
  for (const Token& t : sentence.tokens) {
    if (t.form.empty() || t.pos.empty()) {
      return "token " + std::to_string(t.index) + " has an empty form or pos";
    }
    if (t.head < 0 || t.head > n) {
      return "head " + std::to_string(t.head) + " of token " +
             std::to_string(t.index) + " out of range";
    }
    if (t.head == t.index) {
      return "self-loop at token " + std::to_string(t.index);
    }
  }
  // Every head chain must reach the root within n steps.
  for (const Token& t : sentence.tokens) {
    int node = t.index;
    for (int steps = 0; node != 0; ++steps) {
      if (steps > n) {
        return "cyclic dependency through token " + std::to_string(t.index);
      }
      node = sentence.at(node).head;
    }
  }
  return std::nullopt;
}

CorpusParseResult ParseCorpus(std::istream& in) {
  CorpusParseResult result;
  std::vector<PendingLine> pending;

  auto flush = [&] {
    if (pending.empty()) return;
    Sentence sentence;
    bool malformed = false;
    for (const PendingLine& pl : pending) {
      auto fields = SplitFields(pl.text);
      Token token;
      if (fields.size() != 5) {
        result.diagnostics.push_back(
            {pl.line, "expected 5 columns, found " + std::to_string(fields.size())});
        malformed = true;
        continue;
      }
      if (!ParseInt(fields[0], &token.index)) {
        result.diagnostics.push_back({pl.line, "bad index '" + std::string(fields[0]) + "'"});
        malformed = true;
        continue;
      }
      if (!ParseInt(fields[3], &token.head)) {
        result.diagnostics.push_back({pl.line, "bad head '" + std::string(fields[3]) + "'"});
        malformed = true;
        continue;
      }
      token.form = fields[1];
      token.pos = fields[2];
      if (fields[4] != kAbsent) token.deprel = fields[4];
      sentence.tokens.push_back(std::move(token));
    }
    if (!malformed) {
      if (auto error = ValidateSentence(sentence)) {
        result.diagnostics.push_back({pending.front().line, *error});
      } else {
        result.sentences.push_back(std::move(sentence));
      }
    }
    pending.clear();
  };

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) {
      flush();
    } else {
      pending.push_back({line_no, line});
    }
  }
  flush();
  return result;
}

CorpusParseResult ReadCorpusFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open corpus file " + path);
  return ParseCorpus(in);
}

void WriteCorpus(std::ostream& out, std::span<const Sentence> sentences) {
  for (const Sentence& s : sentences) {
    for (const Token& t : s.tokens) {
      out << t.index << '\t' << t.form << '\t' << t.pos << '\t' << t.head << '\t'
          << (t.deprel.empty() ? kAbsent : std::string_view(t.deprel)) << '\n';
    }
    out << '\n';
  }
}

void WriteCorpusFile(const std::string& path,
                     std::span<const Sentence> sentences) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write corpus file " + path);
  WriteCorpus(out, sentences);
}

// ---------------------------------------------------------------------------

InformationSource::InformationSource(const Sentence& sentence) {
  const int n = sentence.size();
  words_.reserve(n);
  tags_.reserve(n);
  labels_.reserve(n);
  for (const Token& t : sentence.tokens) {
    words_.push_back(t.form);
    tags_.push_back(t.pos);
    labels_.push_back(t.head == 0 ? std::string() : t.deprel);
  }
  for (const Token& t : sentence.tokens) {
    if (!t.form.empty()) {
      instances_.push_back({std::string(kWordPredicate), {t.index}, t.form});
    }
    if (!t.pos.empty()) {
      instances_.push_back({std::string(kPosPredicate), {t.index}, t.pos});
    }
  }
  for (const Token& t : sentence.tokens) {
    if (t.head == 0 || t.deprel.empty()) continue;
    instances_.push_back(
        {t.deprel, {t.index, t.head}, t.form + " " + sentence.at(t.head).form});
  }
}

std::optional<std::string_view> InformationSource::Unary(
    std::string_view predicate, int position) const {
  if (position < 1 || position > size()) return std::nullopt;
  const std::string* value = nullptr;
  if (predicate == kWordPredicate) {
    value = &words_[position - 1];
  } else if (predicate == kPosPredicate) {
    value = &tags_[position - 1];
  } else {
    return std::nullopt;
  }
  if (value->empty()) return std::nullopt;
  return std::string_view(*value);
}

bool InformationSource::HasRelation(std::string_view label,
                                    int dependent) const {
  if (dependent < 1 || dependent > size()) return false;
  const std::string& l = labels_[dependent - 1];
  return !l.empty() && l == label;
}

InformationSource BuildInformationSource(const Sentence& sentence) {
  return InformationSource(sentence);
}

PredicateRegistry::PredicateRegistry() = default;

PredicateRegistry PredicateRegistry::FromCorpus(
    std::span<const Sentence> sentences) {
  PredicateRegistry registry;
  for (const Sentence& s : sentences) {
    for (const Token& t : s.tokens) {
      if (t.head != 0 && !t.deprel.empty()) registry.AddRelation(t.deprel);
    }
  }
  return registry;
}

PredicateRegistry PredicateRegistry::Permissive() {
  PredicateRegistry registry;
  registry.permissive_ = true;
  return registry;
}

bool PredicateRegistry::IsUnary(std::string_view name) const {
  return name == kWordPredicate || name == kPosPredicate;
}

bool PredicateRegistry::IsRelation(std::string_view name) const {
  if (permissive_) return !name.empty() && !IsUnary(name);
  return relations_.find(name) != relations_.end();
}

// ---------------------------------------------------------------------------

Graph::Graph(int num_nodes, std::vector<std::pair<int, int>> edges,
             bool bottom_up)
    : num_nodes_(num_nodes),
      bottom_up_(bottom_up),
      edges_(std::move(edges)),
      out_(num_nodes + 1),
      in_(num_nodes + 1) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (auto [from, to] : edges_) {
    out_[from].push_back(to);
    in_[to].push_back(from);
  }
}

std::optional<std::vector<int>> Graph::TopologicalOrder() const {
  std::vector<int> indegree(num_nodes_ + 1, 0);
  for (auto [from, to] : edges_) ++indegree[to];
  // Lowest ready node first, so a linear chain yields sentence order.
  std::set<int> ready;
  for (int v = 1; v <= num_nodes_; ++v) {
    if (indegree[v] == 0) ready.insert(v);
  }
  std::vector<int> order;
  order.reserve(num_nodes_);
  while (!ready.empty()) {
    int v = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(v);
    for (int w : out_[v]) {
      if (--indegree[w] == 0) ready.insert(w);
    }
  }
  if (static_cast<int>(order.size()) != num_nodes_) return std::nullopt;
  return order;
}

const Graph* StructuralSource::Find(std::string_view name) const {
  auto it = graphs_.find(name);
  return it == graphs_.end() ? nullptr : &it->second;
}

void StructuralSource::Add(std::string name, Graph graph) {
  graphs_.insert_or_assign(std::move(name), std::move(graph));
}

std::vector<std::string> StructuralSource::names() const {
  std::vector<std::string> out;
  for (const auto& [name, graph] : graphs_) out.push_back(name);
  return out;
}

StructuralSource BuildStructures(const Sentence& sentence) {
  const int n = sentence.size();
  StructuralSource sis(n);

  std::vector<std::pair<int, int>> linear;
  for (int i = 1; i < n; ++i) linear.emplace_back(i, i + 1);
  sis.Add(std::string(kLinearStructure), Graph(n, std::move(linear), false));

  std::vector<std::pair<int, int>> dependency;
  for (const Token& t : sentence.tokens) {
    if (t.head < 0 || t.head > n || t.head == t.index) {
      throw DataError("invalid head on token " + std::to_string(t.index));
    }
    if (t.head != 0) dependency.emplace_back(t.head, t.index);
  }
  Graph dep(n, std::move(dependency), true);
  if (!dep.IsAcyclic()) throw DataError("cyclic dependency edges");
  sis.Add(std::string(kDependencyStructure), std::move(dep));
  return sis;
}

AnalyzedSentence Analyze(const Sentence& sentence) {
  return {InformationSource(sentence), BuildStructures(sentence)};
}

}  // namespace snowpredict
