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

// Feature-type language and its data-driven instantiation.
//
// A feature type is a tree: basic atoms, proximity over a chain, collocations
// over chains, and and/or/not compositions. Instantiating a type on a sentence
// relative to a focus position yields canonical identity strings
//
//     <type text> ::[ <value>]*
//
// where the type text is the type's user-given name or its canonical
// definition, and captured values are space-separated (corpus values never
// contain whitespace). Identical patterns on different sentences produce
// byte-identical identities.
//
// The focus word is masked: wherever the word predicate is read at the focus
// position it yields kFocusMask, and proximity features skip the focus node.

#ifndef SNOWPREDICT_FEATURES_H_
#define SNOWPREDICT_FEATURES_H_

#include <cstddef>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "snowpredict/corpus.h"

namespace snowpredict {

inline constexpr std::string_view kFocusMask = "X";
inline constexpr int kDefaultMaxChainLength = 4;

// One node test inside basic, proximity and collocation types.
//
//   word | pos          unary predicate, captures its value
//   word=V | pos=V      exact value, no capture
//   word? | pos?        existential, no capture
//   LABEL               node bears dependency label LABEL; captures its word
//   LABEL=V             label LABEL and word V
//   LABEL?              label LABEL, no capture
//   focus               the focus node; captures kFocusMask
//   *                   any node, no capture
struct Atom {
  enum class Kind { kUnary, kRelation, kFocus, kAny };
  enum class Mode { kCapture, kExact, kExistential };

  Kind kind = Kind::kAny;
  Mode mode = Mode::kExistential;
  std::string predicate;
  std::string value;

  bool captures() const {
    return kind == Kind::kFocus ||
           ((kind == Kind::kUnary || kind == Kind::kRelation) &&
            mode == Mode::kCapture);
  }
  std::string ToString() const;
  bool operator==(const Atom&) const = default;
};

// Parses one atom token. `registry` decides whether a bare name is a unary
// predicate or a relation label; unregistered names are DataErrors.
Atom ParseAtom(std::string_view token, const PredicateRegistry& registry);

struct FeatureType;

// f(I(w_{p+offset}), alpha) and its existential form.
struct BasicType {
  Atom atom;
  int offset = 0;
  bool operator==(const BasicType&) const = default;
};

// Indicator that `atom` matches some node of the chain around the focus
// (focus excluded). On a graph the chain is every node reachable against edge
// direction within -left steps and along edge direction within right steps;
// on the linear graph this is exactly positions focus+left..focus+right.
struct ProximityType {
  Atom atom;
  std::string structure;
  int left = 0;
  int right = 0;
  bool tag_offset = false;  // prefix the captured value with its offset
  bool operator==(const ProximityType&) const = default;
};

// Restricted conjunction of k atoms along a chain of k nodes. With a window
// (linear structure only) the chains are the contiguous k-node runs inside
// the window; without one they are the k-node directed paths through the
// focus. Atoms read along edge direction, or against it for bottom-up graphs.
struct CollocationType {
  std::vector<Atom> atoms;
  std::string structure;
  bool has_window = false;
  int left = 0;
  int right = 0;
  bool operator==(const CollocationType&) const = default;
};

struct CompositeType {
  enum class Op { kAnd, kOr, kNot };
  Op op = Op::kAnd;
  std::vector<FeatureType> children;
  bool operator==(const CompositeType&) const;
};

struct FeatureType {
  std::string name;  // optional; replaces the definition text in identities
  std::variant<BasicType, ProximityType, CollocationType, CompositeType> node;

  // Canonical definition text (without the name).
  std::string Definition() const;
  // Identity prefix: the name if given, else the definition.
  std::string Prefix() const { return name.empty() ? Definition() : name; }
  // Number of values captured by every instance; -1 if it varies (an or over
  // children with different capture counts).
  int CaptureCount() const;

  bool operator==(const FeatureType&) const = default;
};

// ---------------------------------------------------------------------------
// Feature definition files
//
//   line    := [NAME ':'] type
//   type    := 'basic' ATOM OFFSET
//            | 'proximity' ATOM STRUCT LEFT RIGHT ['offset']
//            | 'colloc' STRUCT [LEFT RIGHT] ATOM ATOM+
//            | ('and' | 'or') '(' type (';' type)* ')'
//            | 'not' '(' type ')'
//
// Tokens are whitespace separated; '(' ';' ')' must stand alone. '#' starts
// a comment line.

// Throws DataError with the line number on any syntax or validity error.
std::vector<FeatureType> ParseFeatureTypes(std::istream& in,
                                           const PredicateRegistry& registry);
std::vector<FeatureType> ReadFeatureTypesFile(const std::string& path,
                                              const PredicateRegistry& registry);
FeatureType ParseFeatureType(std::string_view line,
                             const PredicateRegistry& registry);
// One definition per line, names preserved; parses back to equal types.
std::string FormatFeatureType(const FeatureType& type);

// Checks window and arity invariants; throws DataError.
void ValidateFeatureType(const FeatureType& type);

// Registry for feature files whose labels are not known from a corpus yet:
// word, pos and the dependency labels used by the shipped feature sets.
PredicateRegistry DefaultRegistry();

// ---------------------------------------------------------------------------
// Chains

using Chain = std::vector<int>;

// C(focus, [left, right]) intersected with the sentence, in order.
Chain LinearChain(const StructuralSource& sis, int focus, int left, int right);

// All directed paths with at most `max_length` nodes that contain `focus`, in
// edge direction, sorted lexicographically. Throws DataError for an unknown
// graph name.
std::vector<Chain> DagChains(const StructuralSource& sis,
                             std::string_view graph_name, int focus,
                             int max_length = kDefaultMaxChainLength);

// f(I(w_position), alpha) for a single atom, without focus masking.
bool EvalBasic(const Atom& atom, const InformationSource& is, int position);

// ---------------------------------------------------------------------------
// Instantiation

// Sorted, duplicate-free identities of all active features.
std::vector<std::string> Instantiate(std::span<const FeatureType> types,
                                     const InformationSource& is,
                                     const StructuralSource& sis, int focus);

inline std::vector<std::string> Instantiate(std::span<const FeatureType> types,
                                            const AnalyzedSentence& sentence,
                                            int focus) {
  return Instantiate(types, sentence.is, sentence.sis, focus);
}

// Active/inactive test of one type (e.g. a disjunction) at a focus.
bool IsActive(const FeatureType& type, const InformationSource& is,
              const StructuralSource& sis, int focus);

}  // namespace snowpredict

#endif  // SNOWPREDICT_FEATURES_H_
