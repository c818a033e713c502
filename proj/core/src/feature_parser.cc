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

#include <charconv>
#include <fstream>
#include <sstream>

#include "snowpredict/error.h"
#include "snowpredict/features.h"

namespace snowpredict {
namespace {

constexpr size_t kMaxCollocationAtoms = 8;

std::vector<std::string_view> Tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size()) break;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

bool IsInteger(std::string_view text, int* value) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), *value);
  return !text.empty() && ec == std::errc() && ptr == text.data() + text.size();
}

class Parser {
 public:
  Parser(std::vector<std::string_view> tokens, const PredicateRegistry& registry)
      : tokens_(std::move(tokens)), registry_(registry) {}

  FeatureType ParseLine() {
    FeatureType type;
    std::string name;
    if (!tokens_.empty() && tokens_[0].size() > 1 && tokens_[0].back() == ':') {
      name = tokens_[0].substr(0, tokens_[0].size() - 1);
      pos_ = 1;
    }
    type = ParseType();
    if (pos_ != tokens_.size()) {
      Fail("unexpected token '" + std::string(tokens_[pos_]) + "'");
    }
    type.name = std::move(name);
    return type;
  }

 private:
  bool AtEnd() const { return pos_ >= tokens_.size(); }
  std::string_view Peek() const { return AtEnd() ? std::string_view() : tokens_[pos_]; }

  std::string_view Next(const char* what) {
    if (AtEnd()) Fail(std::string("expected ") + what);
    return tokens_[pos_++];
  }

  void Expect(std::string_view token) {
    std::string_view got = Next(std::string(token).c_str());
    if (got != token) {
      Fail("expected '" + std::string(token) + "', found '" + std::string(got) + "'");
    }
  }

  int NextInt(const char* what) {
    std::string_view token = Next(what);
    int value = 0;
    if (!IsInteger(token, &value)) {
      Fail(std::string("expected ") + what + ", found '" + std::string(token) + "'");
    }
    return value;
  }

  std::string NextStructure() {
    std::string_view s = Next("structure name");
    if (s != kLinearStructure && s != kDependencyStructure) {
      Fail("unknown structure '" + std::string(s) + "'");
    }
    return std::string(s);
  }

  [[noreturn]] void Fail(const std::string& message) const {
    throw DataError(message);
  }

  FeatureType ParseType() {
    std::string_view keyword = Next("feature type keyword");
    FeatureType type;
    if (keyword == "basic") {
      BasicType basic;
      basic.atom = ParseAtom(Next("atom"), registry_);
      basic.offset = NextInt("offset");
      type.node = std::move(basic);
    } else if (keyword == "proximity") {
      ProximityType prox;
      prox.atom = ParseAtom(Next("atom"), registry_);
      prox.structure = NextStructure();
      prox.left = NextInt("left window bound");
      prox.right = NextInt("right window bound");
      if (Peek() == "offset") {
        prox.tag_offset = true;
        ++pos_;
      }
      type.node = std::move(prox);
    } else if (keyword == "colloc") {
      CollocationType colloc;
      colloc.structure = NextStructure();
      int value = 0;
      if (IsInteger(Peek(), &value)) {
        colloc.has_window = true;
        colloc.left = NextInt("left window bound");
        colloc.right = NextInt("right window bound");
      }
      while (!AtEnd() && Peek() != ";" && Peek() != ")") {
        colloc.atoms.push_back(ParseAtom(Next("atom"), registry_));
      }
      type.node = std::move(colloc);
    } else if (keyword == "and" || keyword == "or" || keyword == "not") {
      CompositeType comp;
      comp.op = keyword == "and"  ? CompositeType::Op::kAnd
                : keyword == "or" ? CompositeType::Op::kOr
                                  : CompositeType::Op::kNot;
      Expect("(");
      comp.children.push_back(ParseType());
      while (Peek() == ";") {
        ++pos_;
        comp.children.push_back(ParseType());
      }
      Expect(")");
      type.node = std::move(comp);
    } else {
      Fail("unknown feature type '" + std::string(keyword) + "'");
    }
    ValidateFeatureType(type);
    return type;
  }

  std::vector<std::string_view> tokens_;
  const PredicateRegistry& registry_;
  size_t pos_ = 0;
};

}  // namespace

Atom ParseAtom(std::string_view token, const PredicateRegistry& registry) {
  Atom atom;
  if (token.empty()) throw DataError("empty atom");
  if (token == "*") {
    atom.kind = Atom::Kind::kAny;
    return atom;
  }
  if (token == "focus") {
    atom.kind = Atom::Kind::kFocus;
    atom.mode = Atom::Mode::kCapture;
    return atom;
  }
  std::string_view name = token;
  if (size_t eq = token.find('='); eq != std::string_view::npos) {
    name = token.substr(0, eq);
    atom.value = token.substr(eq + 1);
    atom.mode = Atom::Mode::kExact;
    if (atom.value.empty()) {
      throw DataError("atom '" + std::string(token) + "' has an empty value");
    }
  } else if (token.back() == '?') {
    name = token.substr(0, token.size() - 1);
    atom.mode = Atom::Mode::kExistential;
  } else {
    atom.mode = Atom::Mode::kCapture;
  }
  if (registry.IsUnary(name)) {
    atom.kind = Atom::Kind::kUnary;
  } else if (registry.IsRelation(name)) {
    atom.kind = Atom::Kind::kRelation;
  } else {
    throw DataError("unknown predicate '" + std::string(name) + "'");
  }
  atom.predicate = name;
  return atom;
}

void ValidateFeatureType(const FeatureType& type) {
  std::visit(
      [](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, ProximityType>) {
          if (node.left > 0 || node.right < 0) {
            throw DataError("proximity window must satisfy left <= 0 <= right");
          }
          if (node.atom.kind == Atom::Kind::kFocus) {
            throw DataError("proximity cannot test the focus atom");
          }
        } else if constexpr (std::is_same_v<T, CollocationType>) {
          if (node.atoms.size() < 2) {
            throw DataError("collocation needs at least two atoms");
          }
          if (node.atoms.size() > kMaxCollocationAtoms) {
            throw DataError("collocation has too many atoms");
          }
          if (node.has_window) {
            if (node.structure != kLinearStructure) {
              throw DataError("collocation windows apply to the linear structure only");
            }
            if (node.left > 0 || node.right < 0) {
              throw DataError("collocation window must satisfy left <= 0 <= right");
            }
          }
        } else if constexpr (std::is_same_v<T, CompositeType>) {
          if (node.children.empty()) throw DataError("empty composition");
          if (node.op == CompositeType::Op::kNot) {
            if (node.children.size() != 1) {
              throw DataError("not takes exactly one operand");
            }
            if (node.children.front().CaptureCount() != 0) {
              throw DataError("not requires an operand without captured values");
            }
          }
        }
      },
      type.node);
}

FeatureType ParseFeatureType(std::string_view line,
                             const PredicateRegistry& registry) {
  Parser parser(Tokenize(line), registry);
  return parser.ParseLine();
}

std::vector<FeatureType> ParseFeatureTypes(std::istream& in,
                                           const PredicateRegistry& registry) {
  std::vector<FeatureType> types;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      types.push_back(ParseFeatureType(line, registry));
    } catch (const DataError& e) {
      throw DataError("feature definitions line " + std::to_string(line_no) +
                      ": " + e.what());
    }
  }
  return types;
}

std::vector<FeatureType> ReadFeatureTypesFile(const std::string& path,
                                              const PredicateRegistry& registry) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open feature definitions " + path);
  return ParseFeatureTypes(in, registry);
}

std::string FormatFeatureType(const FeatureType& type) {
  return type.name.empty() ? type.Definition() : type.name + ": " + type.Definition();
}

PredicateRegistry DefaultRegistry() {
  PredicateRegistry registry;
  for (const char* label : {"subj", "obj", "aux_vrb"}) registry.AddRelation(label);
  return registry;
}

}  // namespace snowpredict
