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

// Synthetic dependency-annotated corpora with planted verb cues.
//
// Each sentence has the shape
//
//   the SUBJ ADV (will | ADV) [L1 L2] VERB the ADJ OBJ [in the NOUN] [RIGHT] .
//
// Verbs come in pairs of equal expected frequency, successive pairs being
// `pair_ratio` times more frequent. The subject is drawn from the verb's own
// noun class and the object from its pair-mate's, so word proximity alone
// does not separate the pair; the subject sits outside a +-2 window and is
// reachable only through the dependency graph. Two optional cues carry the
// linear signal: a weaker two-word phrase right before the verb, which shows
// up in many overlapping window features, and a stronger single word near the
// end of the sentence.

#ifndef SNOWPREDICT_SYNTH_H_
#define SNOWPREDICT_SYNTH_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "snowpredict/confusion.h"
#include "snowpredict/corpus.h"

namespace snowpredict {

struct SynthConfig {
  int verbs = 20;  // even
  int sentences = 20000;
  std::uint64_t seed = 7;
  double pair_ratio = 1.25;
  double aux_rate = 0.5;
  double left_cue_rate = 0.5;
  double right_cue_rate = 0.85;
  double left_cue_reliability = 0.75;
  double right_cue_reliability = 0.95;
  double role_noise = 0.02;
  double pp_rate = 0.5;
  int nouns_per_verb = 6;
  int cues_per_verb = 3;
  int adverbs = 40;
  int fillers = 3000;  // Zipf-distributed adjectives and nouns

  void Validate() const;  // throws DataError
};

struct PlantedVerb {
  std::string verb;
  std::string mate;
  std::vector<std::string> subjects;
  std::vector<std::string> left_cues;  // two-word phrases, space separated
  std::vector<std::string> right_cues;
};

struct SynthCorpus {
  std::vector<Sentence> sentences;
  std::vector<ConfusionSet> pairs;  // planted, frequencies as generated
  std::vector<PlantedVerb> planted;
};

SynthCorpus GenerateSyntheticCorpus(const SynthConfig& config);

// `verb<TAB>kind<TAB>words` lines, kind in {mate, subj, left, right}.
void WriteManifest(std::ostream& out, const SynthCorpus& corpus);

}  // namespace snowpredict

#endif  // SNOWPREDICT_SYNTH_H_
