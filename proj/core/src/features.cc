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

#include "snowpredict/features.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "snowpredict/error.h"

namespace snowpredict {
namespace {

using Tuple = std::vector<std::string>;
using TupleSet = std::set<Tuple>;

std::string FormatOffset(int offset) {
  return (offset > 0 ? "+" : "") + std::to_string(offset);
}

const Graph& RequireGraph(const StructuralSource& sis, std::string_view name) {
  const Graph* graph = sis.Find(name);
  if (!graph) throw DataError("unknown structure '" + std::string(name) + "'");
  return *graph;
}

// Evaluation state for one (sentence, focus) pair.
class Context {
 public:
  Context(const InformationSource& is, const StructuralSource& sis, int focus)
      : is_(is), sis_(sis), focus_(focus) {}

  int size() const { return is_.size(); }
  int focus() const { return focus_; }
  const StructuralSource& sis() const { return sis_; }

  std::string_view Word(int node) const {
    return node == focus_ ? kFocusMask : is_.word(node);
  }

  bool Match(const Atom& atom, int node, Tuple* captures) const {
    if (node < 1 || node > size()) return false;
    std::string_view value;
    switch (atom.kind) {
      case Atom::Kind::kAny:
        return true;
      case Atom::Kind::kFocus:
        if (node != focus_) return false;
        captures->emplace_back(kFocusMask);
        return true;
      case Atom::Kind::kUnary: {
        if (atom.predicate == kWordPredicate) {
          value = Word(node);
        } else {
          auto v = is_.Unary(atom.predicate, node);
          if (!v) return false;
          value = *v;
        }
        break;
      }
      case Atom::Kind::kRelation:
        if (!is_.HasRelation(atom.predicate, node)) return false;
        value = Word(node);
        break;
    }
    if (value.empty()) return false;
    switch (atom.mode) {
      case Atom::Mode::kCapture:
        captures->emplace_back(value);
        return true;
      case Atom::Mode::kExact:
        return value == atom.value;
      case Atom::Mode::kExistential:
        return true;
    }
    return false;
  }

 private:
  const InformationSource& is_;
  const StructuralSource& sis_;
  int focus_;
};

TupleSet Evaluate(const FeatureType& type, const Context& ctx);

TupleSet EvaluateBasic(const BasicType& basic, const Context& ctx) {
  TupleSet out;
  Tuple captures;
  if (ctx.Match(basic.atom, ctx.focus() + basic.offset, &captures)) {
    out.insert(std::move(captures));
  }
  return out;
}

// Nodes within `steps` hops of `start`, with their hop count.
void Reach(const Graph& graph, int start, int steps, bool forward,
           std::vector<int>* distance) {
  std::vector<int> frontier = {start};
  for (int hop = 1; hop <= steps && !frontier.empty(); ++hop) {
    std::vector<int> next;
    for (int v : frontier) {
      const auto& neighbours =
          forward ? graph.successors(v) : graph.predecessors(v);
      for (int w : neighbours) {
        if ((*distance)[w] != 0 || w == start) continue;
        (*distance)[w] = forward ? hop : -hop;
        next.push_back(w);
      }
    }
    frontier = std::move(next);
  }
}

TupleSet EvaluateProximity(const ProximityType& prox, const Context& ctx) {
  const Graph& graph = RequireGraph(ctx.sis(), prox.structure);
  std::vector<int> distance(ctx.size() + 1, 0);
  Reach(graph, ctx.focus(), -prox.left, false, &distance);
  Reach(graph, ctx.focus(), prox.right, true, &distance);
  TupleSet out;
  for (int node = 1; node <= ctx.size(); ++node) {
    if (distance[node] == 0) continue;
    Tuple captures;
    if (prox.tag_offset) captures.push_back(FormatOffset(distance[node]));
    if (ctx.Match(prox.atom, node, &captures)) out.insert(std::move(captures));
  }
  return out;
}

void MatchChain(const std::vector<Atom>& atoms, const Chain& chain,
                bool reversed, const Context& ctx, TupleSet* out) {
  const size_t k = atoms.size();
  Tuple captures;
  for (size_t i = 0; i < k; ++i) {
    int node = reversed ? chain[k - 1 - i] : chain[i];
    if (!ctx.Match(atoms[i], node, &captures)) return;
  }
  out->insert(std::move(captures));
}

TupleSet EvaluateCollocation(const CollocationType& colloc, const Context& ctx) {
  const Graph& graph = RequireGraph(ctx.sis(), colloc.structure);
  const int k = static_cast<int>(colloc.atoms.size());
  TupleSet out;
  if (colloc.has_window) {
    Chain window = LinearChain(ctx.sis(), ctx.focus(), colloc.left, colloc.right);
    for (int start = 0; start + k <= static_cast<int>(window.size()); ++start) {
      Chain run(window.begin() + start, window.begin() + start + k);
      MatchChain(colloc.atoms, run, false, ctx, &out);
    }
    return out;
  }
  for (const Chain& chain : DagChains(ctx.sis(), colloc.structure, ctx.focus(), k)) {
    if (static_cast<int>(chain.size()) != k) continue;
    MatchChain(colloc.atoms, chain, graph.bottom_up(), ctx, &out);
  }
  return out;
}

TupleSet EvaluateComposite(const CompositeType& comp, const Context& ctx) {
  TupleSet out;
  switch (comp.op) {
    case CompositeType::Op::kOr:
      for (const FeatureType& child : comp.children) {
        TupleSet part = Evaluate(child, ctx);
        out.insert(part.begin(), part.end());
      }
      return out;
    case CompositeType::Op::kNot:
      if (Evaluate(comp.children.front(), ctx).empty()) out.insert(Tuple{});
      return out;
    case CompositeType::Op::kAnd: {
      bool counted = std::any_of(
          comp.children.begin(), comp.children.end(),
          [](const FeatureType& c) { return c.CaptureCount() < 0; });
      out.insert(Tuple{});
      for (const FeatureType& child : comp.children) {
        TupleSet part = Evaluate(child, ctx);
        if (part.empty()) return {};
        TupleSet product;
        for (const Tuple& prefix : out) {
          for (const Tuple& suffix : part) {
            Tuple joined = prefix;
            if (counted) joined.push_back(std::to_string(suffix.size()));
            joined.insert(joined.end(), suffix.begin(), suffix.end());
            product.insert(std::move(joined));
          }
        }
        out = std::move(product);
      }
      return out;
    }
  }
  return out;
}

TupleSet Evaluate(const FeatureType& type, const Context& ctx) {
  return std::visit(
      [&](const auto& node) -> TupleSet {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, BasicType>) {
          return EvaluateBasic(node, ctx);
        } else if constexpr (std::is_same_v<T, ProximityType>) {
          return EvaluateProximity(node, ctx);
        } else if constexpr (std::is_same_v<T, CollocationType>) {
          return EvaluateCollocation(node, ctx);
        } else {
          return EvaluateComposite(node, ctx);
        }
      },
      type.node);
}

// Depth-first enumeration of simple paths from `start`, `start` first.
void Paths(const Graph& graph, bool forward, int max_nodes, Chain* path,
           std::vector<Chain>* out) {
  out->push_back(*path);
  if (static_cast<int>(path->size()) == max_nodes) return;
  const auto& neighbours =
      forward ? graph.successors(path->back()) : graph.predecessors(path->back());
  for (int w : neighbours) {
    path->push_back(w);
    Paths(graph, forward, max_nodes, path, out);
    path->pop_back();
  }
}

}  // namespace

std::string Atom::ToString() const {
  switch (kind) {
    case Kind::kAny:
      return "*";
    case Kind::kFocus:
      return "focus";
    case Kind::kUnary:
    case Kind::kRelation:
      switch (mode) {
        case Mode::kCapture:
          return predicate;
        case Mode::kExact:
          return predicate + "=" + value;
        case Mode::kExistential:
          return predicate + "?";
      }
  }
  return {};
}

bool CompositeType::operator==(const CompositeType& other) const {
  return op == other.op && children == other.children;
}

std::string FeatureType::Definition() const {
  return std::visit(
      [](const auto& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, BasicType>) {
          return "basic " + node.atom.ToString() + " " + std::to_string(node.offset);
        } else if constexpr (std::is_same_v<T, ProximityType>) {
          std::string s = "proximity " + node.atom.ToString() + " " +
                          node.structure + " " + std::to_string(node.left) +
                          " " + std::to_string(node.right);
          if (node.tag_offset) s += " offset";
          return s;
        } else if constexpr (std::is_same_v<T, CollocationType>) {
          std::string s = "colloc " + node.structure;
          if (node.has_window) {
            s += " " + std::to_string(node.left) + " " + std::to_string(node.right);
          }
          for (const Atom& a : node.atoms) s += " " + a.ToString();
          return s;
        } else {
          std::string s = node.op == CompositeType::Op::kAnd  ? "and ("
                          : node.op == CompositeType::Op::kOr ? "or ("
                                                              : "not (";
          for (size_t i = 0; i < node.children.size(); ++i) {
            s += (i == 0 ? " " : " ; ") + node.children[i].Definition();
          }
          return s + " )";
        }
      },
      node);
}

int FeatureType::CaptureCount() const {
  return std::visit(
      [](const auto& node) -> int {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, BasicType>) {
          return node.atom.captures() ? 1 : 0;
        } else if constexpr (std::is_same_v<T, ProximityType>) {
          return (node.atom.captures() ? 1 : 0) + (node.tag_offset ? 1 : 0);
        } else if constexpr (std::is_same_v<T, CollocationType>) {
          return static_cast<int>(std::count_if(
              node.atoms.begin(), node.atoms.end(),
              [](const Atom& a) { return a.captures(); }));
        } else {
          if (node.op == CompositeType::Op::kNot) return 0;
          int total = 0;
          int first = -2;
          for (const FeatureType& child : node.children) {
            int c = child.CaptureCount();
            if (c < 0) return -1;
            if (node.op == CompositeType::Op::kOr) {
              if (first != -2 && c != first) return -1;
              first = c;
              total = c;
            } else {
              total += c;
            }
          }
          return total;
        }
      },
      node);
}

Chain LinearChain(const StructuralSource& sis, int focus, int left, int right) {
  if (focus < 1 || focus > sis.size()) {
    throw std::out_of_range("focus position out of range");
  }
  Chain chain;
  const int lo = std::max(1, focus + std::min(left, 0));
  const int hi = std::min(sis.size(), focus + std::max(right, 0));
  for (int i = lo; i <= hi; ++i) chain.push_back(i);
  return chain;
}

std::vector<Chain> DagChains(const StructuralSource& sis,
                             std::string_view graph_name, int focus,
                             int max_length) {
  const Graph& graph = RequireGraph(sis, graph_name);
  if (focus < 1 || focus > graph.num_nodes()) {
    throw std::out_of_range("focus position out of range");
  }
  if (max_length < 1) return {};
  std::vector<Chain> up;
  std::vector<Chain> down;
  Chain path = {focus};
  Paths(graph, false, max_length, &path, &up);
  Paths(graph, true, max_length, &path, &down);

  std::vector<Chain> chains;
  for (const Chain& u : up) {
    for (const Chain& d : down) {
      if (u.size() + d.size() - 1 > static_cast<size_t>(max_length)) continue;
      Chain c(u.rbegin(), u.rend());
      c.insert(c.end(), d.begin() + 1, d.end());
      chains.push_back(std::move(c));
    }
  }
  std::sort(chains.begin(), chains.end());
  chains.erase(std::unique(chains.begin(), chains.end()), chains.end());
  return chains;
}

bool EvalBasic(const Atom& atom, const InformationSource& is, int position) {
  const StructuralSource empty(is.size());
  Context ctx(is, empty, 0);
  Tuple ignored;
  return ctx.Match(atom, position, &ignored);
}

std::vector<std::string> Instantiate(std::span<const FeatureType> types,
                                     const InformationSource& is,
                                     const StructuralSource& sis, int focus) {
  if (focus < 1 || focus > is.size()) {
    throw std::out_of_range("focus position out of range");
  }
  Context ctx(is, sis, focus);
  std::vector<std::string> identities;
  for (const FeatureType& type : types) {
    const std::string prefix = type.Prefix() + " ::";
    for (const Tuple& tuple : Evaluate(type, ctx)) {
      std::string id = prefix;
      for (const std::string& value : tuple) {
        id += ' ';
        id += value;
      }
      identities.push_back(std::move(id));
    }
  }
  std::sort(identities.begin(), identities.end());
  identities.erase(std::unique(identities.begin(), identities.end()),
                   identities.end());
  return identities;
}

bool IsActive(const FeatureType& type, const InformationSource& is,
              const StructuralSource& sis, int focus) {
  return !Evaluate(type, Context(is, sis, focus)).empty();
}

}  // namespace snowpredict
