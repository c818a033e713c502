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

#include "snowpredict/synth.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "snowpredict/error.h"

namespace snowpredict {

void SynthConfig::Validate() const {
  if (verbs < 2 || verbs % 2 != 0) throw DataError("synth: verbs must be even and >= 2");
  if (sentences < 1) throw DataError("synth: sentences must be positive");
  if (!(pair_ratio >= 1.0)) throw DataError("synth: pair_ratio must be >= 1");
  for (double p : {aux_rate, left_cue_rate, right_cue_rate, left_cue_reliability,
                   right_cue_reliability, role_noise, pp_rate}) {
    if (!(p >= 0.0 && p <= 1.0)) throw DataError("synth: rates must lie in [0, 1]");
  }
  if (nouns_per_verb < 1 || cues_per_verb < 1 || adverbs < 1 || fillers < 1) {
    throw DataError("synth: vocabulary sizes must be positive");
  }
}

namespace {

// Draws straight from the engine so output is identical across standard
// libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double Uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool Bernoulli(double p) { return Uniform() < p; }
  std::size_t Index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  // Index drawn from unnormalized cumulative weights.
  std::size_t Weighted(const std::vector<double>& cumulative) {
    double u = Uniform() * cumulative.back();
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    return std::min<std::size_t>(it - cumulative.begin(), cumulative.size() - 1);
  }
  template <typename T>
  const T& Pick(const std::vector<T>& v) { return v[Index(v.size())]; }

 private:
  std::mt19937_64 engine_;
};

std::string Name(const char* prefix, int a, int b = -1) {
  char buf[48];
  if (b < 0) {
    std::snprintf(buf, sizeof(buf), "%s%02d", prefix, a);
  } else {
    std::snprintf(buf, sizeof(buf), "%s%02d%c", prefix, a, 'a' + b % 26);
  }
  return buf;
}

struct Slot {
  std::string form;
  std::string pos;
  int head;  // slot index, -1 for the root
  std::string deprel;
};

}  // namespace

SynthCorpus GenerateSyntheticCorpus(const SynthConfig& config) {
  config.Validate();
  Rng rng(config.seed);
  SynthCorpus corpus;

  const int pairs = config.verbs / 2;
  for (int v = 0; v < config.verbs; ++v) {
    PlantedVerb p;
    p.verb = Name("v", v);
    p.mate = Name("v", v ^ 1);
    for (int k = 0; k < config.nouns_per_verb; ++k) p.subjects.push_back(Name("n", v, k));
    for (int k = 0; k < config.cues_per_verb; ++k) {
      p.left_cues.push_back(Name("lp", v, k) + " " + Name("lq", v, k));
      p.right_cues.push_back(Name("r", v, k));
    }
    corpus.planted.push_back(std::move(p));
  }
  std::vector<std::string> adverbs, adjectives, nouns;
  for (int k = 0; k < config.adverbs; ++k) adverbs.push_back("adv" + std::to_string(k));
  std::vector<double> zipf;
  double acc = 0.0;
  for (int k = 0; k < config.fillers; ++k) {
    adjectives.push_back("adj" + std::to_string(k));
    nouns.push_back("obj" + std::to_string(k));
    acc += 1.0 / (k + 1);
    zipf.push_back(acc);
  }
  std::vector<double> pair_weights;
  acc = 0.0;
  for (int p = 0; p < pairs; ++p) {
    acc += std::pow(config.pair_ratio, p);
    pair_weights.push_back(acc);
  }

  std::vector<std::uint64_t> counts(config.verbs, 0);
  std::vector<Slot> slots;
  for (int n = 0; n < config.sentences; ++n) {
    const int pair = static_cast<int>(rng.Weighted(pair_weights));
    const int label = 2 * pair + (rng.Bernoulli(0.5) ? 1 : 0);
    const int mate = label ^ 1;
    ++counts[label];
    const PlantedVerb& gold = corpus.planted[label];
    const PlantedVerb& other = corpus.planted[mate];
    const bool aux = rng.Bernoulli(config.aux_rate);
    const bool left = rng.Bernoulli(config.left_cue_rate);
    const bool right = rng.Bernoulli(config.right_cue_rate);
    const bool pp = rng.Bernoulli(config.pp_rate);

    slots.clear();
    auto add = [&](std::string form, std::string pos) {
      slots.push_back({std::move(form), std::move(pos), -1, ""});
      return static_cast<int>(slots.size()) - 1;
    };
    const int det1 = add("the", "DT");
    const int subj = add(rng.Pick(rng.Bernoulli(config.role_noise) ? other.subjects
                                                                    : gold.subjects),
                         "NN");
    const int adv1 = add(rng.Pick(adverbs), "RB");
    const int mid = aux ? add("will", "MD") : add(rng.Pick(adverbs), "RB");
    int lcue1 = -1, lcue2 = -1;
    if (left) {
      const std::string& phrase =
          rng.Pick(rng.Bernoulli(config.left_cue_reliability) ? gold.left_cues
                                                              : other.left_cues);
      const auto space = phrase.find(' ');
      lcue1 = add(phrase.substr(0, space), "RB");
      lcue2 = add(phrase.substr(space + 1), "RB");
    }
    const int verb = add(gold.verb, "VB");
    const int det2 = add("the", "DT");
    const int adj = add(adjectives[rng.Weighted(zipf)], "JJ");
    const int obj = add(rng.Pick(rng.Bernoulli(config.role_noise) ? gold.subjects
                                                                   : other.subjects),
                        "NN");
    int prep = -1, det3 = -1, pobj = -1;
    if (pp) {
      prep = add("in", "IN");
      det3 = add("the", "DT");
      pobj = add(nouns[rng.Weighted(zipf)], "NN");
    }
    int rcue = -1;
    if (right) {
      rcue = add(rng.Pick(rng.Bernoulli(config.right_cue_reliability) ? gold.right_cues
                                                                       : other.right_cues),
                 "RB");
    }
    const int stop = add(".", ".");

    auto link = [&](int dep, int head, const char* rel) {
      slots[dep].head = head;
      slots[dep].deprel = rel;
    };
    link(det1, subj, "det");
    if (aux) {
      link(subj, mid, "subj");
      link(mid, verb, "aux_vrb");
    } else {
      link(subj, verb, "subj");
      link(mid, verb, "ad");
    }
    link(adv1, verb, "ad");
    if (lcue1 >= 0) {
      link(lcue1, lcue2, "mod");
      link(lcue2, verb, "ad");
    }
    link(det2, obj, "det");
    link(adj, obj, "attr");
    link(obj, verb, "obj");
    if (pp) {
      link(prep, verb, "ad");
      link(det3, pobj, "det");
      link(pobj, prep, "pcomp");
    }
    if (rcue >= 0) link(rcue, verb, "ad");
    link(stop, verb, "punct");

    Sentence s;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      Token t;
      t.index = static_cast<int>(i) + 1;
      t.form = std::move(slots[i].form);
      t.pos = std::move(slots[i].pos);
      t.head = slots[i].head + 1;
      t.deprel = std::move(slots[i].deprel);
      s.tokens.push_back(std::move(t));
    }
    corpus.sentences.push_back(std::move(s));
  }

  for (int p = 0; p < pairs; ++p) {
    ConfusionSet set;
    set.tag = std::string(kPairTag);
    set.members = {corpus.planted[2 * p].verb, corpus.planted[2 * p + 1].verb};
    set.frequencies = {counts[2 * p], counts[2 * p + 1]};
    corpus.pairs.push_back(std::move(set));
  }
  return corpus;
}

void WriteManifest(std::ostream& out, const SynthCorpus& corpus) {
  auto join = [](const std::vector<std::string>& words) {
    std::string s;
    for (const auto& w : words) {
      if (!s.empty()) s += ' ';
      s += w;
    }
    return s;
  };
  for (const auto& p : corpus.planted) {
    out << p.verb << "\tmate\t" << p.mate << '\n';
    out << p.verb << "\tsubj\t" << join(p.subjects) << '\n';
    out << p.verb << "\tleft\t" << join(p.left_cues) << '\n';
    out << p.verb << "\tright\t" << join(p.right_cues) << '\n';
  }
}

}  // namespace snowpredict
