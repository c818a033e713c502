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

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "snowpredict/error.h"
#include "snowpredict/snow.h"

namespace snowpredict {
namespace {

constexpr std::string_view kMagic = "snowpredict-model";

// Shortest text that parses back to the same double.
std::string FormatDouble(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

std::vector<std::string> SplitTabs(const std::string& line) {
  std::vector<std::string> fields;
  size_t start = 0;
  while (true) {
    size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return fields;
}

class ModelReader {
 public:
  explicit ModelReader(std::istream& in) : in_(in) {}

  std::vector<std::string> NextFields() {
    std::string line;
    if (!std::getline(in_, line)) throw DataError("truncated model file");
    ++line_no_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return SplitTabs(line);
  }

  std::string NextLine() {
    std::string line;
    if (!std::getline(in_, line)) throw DataError("truncated model file");
    ++line_no_;
    return line;
  }

  [[noreturn]] void Fail(const std::string& what) const {
    throw DataError("model line " + std::to_string(line_no_) + ": " + what);
  }

  double ParseDouble(const std::string& text) const {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      Fail("bad number '" + text + "'");
    }
    return value;
  }

  std::uint64_t ParseUnsigned(const std::string& text) const {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      Fail("bad count '" + text + "'");
    }
    return value;
  }

 private:
  std::istream& in_;
  int line_no_ = 0;
};

}  // namespace

void SaveModel(std::ostream& out, const Network& network,
               std::span<const std::string> feature_definitions) {
  const LearnerConfig& c = network.config();
  out << kMagic << '\t' << kModelVersion << '\n';
  out << "rule\t" << UpdateRuleName(c.rule) << '\n';
  out << "winnow.promotion\t" << FormatDouble(c.winnow.promotion) << '\n';
  out << "winnow.demotion\t" << FormatDouble(c.winnow.demotion) << '\n';
  out << "winnow.threshold\t" << FormatDouble(c.winnow.threshold) << '\n';
  out << "winnow.init_weight\t" << FormatDouble(c.winnow.init_weight) << '\n';
  out << "winnow.epochs\t" << c.winnow.epochs << '\n';
  out << "nb.smoothing\t" << FormatDouble(c.nb.smoothing) << '\n';
  out << "perceptron.learning_rate\t" << FormatDouble(c.perceptron.learning_rate) << '\n';
  out << "perceptron.threshold\t" << FormatDouble(c.perceptron.threshold) << '\n';
  out << "perceptron.init_weight\t" << FormatDouble(c.perceptron.init_weight) << '\n';
  out << "perceptron.epochs\t" << c.perceptron.epochs << '\n';

  out << "features\t" << feature_definitions.size() << '\n';
  for (const std::string& def : feature_definitions) out << def << '\n';

  std::vector<TargetId> order(network.size());
  for (TargetId t = 0; t < order.size(); ++t) order[t] = t;
  std::sort(order.begin(), order.end(), [&](TargetId a, TargetId b) {
    return network.target(a).label < network.target(b).label;
  });

  out << "targets\t" << network.size() << '\n';
  for (TargetId t : order) {
    const TargetNode& node = network.target(t);
    std::vector<std::pair<FeatureId, double>> links(node.weights.begin(),
                                                    node.weights.end());
    std::sort(links.begin(), links.end());
    out << "target\t" << node.label << '\t' << FormatDouble(node.threshold) << '\t'
        << node.prior << '\t' << links.size() << '\n';
    for (auto [id, weight] : links) out << id << '\t' << FormatDouble(weight) << '\n';
  }
  out << "end\n";
}

void SaveModelFile(const std::string& path, const Network& network,
                   std::span<const std::string> feature_definitions) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write model " + path);
  SaveModel(out, network, feature_definitions);
  if (!out) throw DataError("failed writing model " + path);
}

Model LoadModel(std::istream& in) {
  ModelReader reader(in);
  auto header = reader.NextFields();
  if (header.size() != 2 || header[0] != kMagic) {
    throw DataError("not a snowpredict model file (bad magic)");
  }
  if (header[1] != std::to_string(kModelVersion)) {
    throw DataError("unsupported model version " + header[1] + " (expected " +
                    std::to_string(kModelVersion) + ")");
  }

  LearnerConfig config;
  std::vector<std::string> fields;
  while (true) {
    fields = reader.NextFields();
    if (fields.size() != 2) reader.Fail("expected key and value");
    const std::string& key = fields[0];
    const std::string& value = fields[1];
    if (key == "features") break;
    if (key == "rule") {
      auto rule = ParseUpdateRule(value);
      if (!rule) reader.Fail("unknown rule '" + value + "'");
      config.rule = *rule;
    } else if (key == "winnow.promotion") {
      config.winnow.promotion = reader.ParseDouble(value);
    } else if (key == "winnow.demotion") {
      config.winnow.demotion = reader.ParseDouble(value);
    } else if (key == "winnow.threshold") {
      config.winnow.threshold = reader.ParseDouble(value);
    } else if (key == "winnow.init_weight") {
      config.winnow.init_weight = reader.ParseDouble(value);
    } else if (key == "winnow.epochs") {
      config.winnow.epochs = static_cast<int>(reader.ParseUnsigned(value));
    } else if (key == "nb.smoothing") {
      config.nb.smoothing = reader.ParseDouble(value);
    } else if (key == "perceptron.learning_rate") {
      config.perceptron.learning_rate = reader.ParseDouble(value);
    } else if (key == "perceptron.threshold") {
      config.perceptron.threshold = reader.ParseDouble(value);
    } else if (key == "perceptron.init_weight") {
      config.perceptron.init_weight = reader.ParseDouble(value);
    } else if (key == "perceptron.epochs") {
      config.perceptron.epochs = static_cast<int>(reader.ParseUnsigned(value));
    } else {
      reader.Fail("unknown config key '" + key + "'");
    }
  }
  config.Validate();

  Model model{Network(config), {}};
  const std::uint64_t num_features = reader.ParseUnsigned(fields[1]);
  for (std::uint64_t i = 0; i < num_features; ++i) {
    model.feature_definitions.push_back(reader.NextLine());
  }

  fields = reader.NextFields();
  if (fields.size() != 2 || fields[0] != "targets") reader.Fail("expected targets");
  const std::uint64_t num_targets = reader.ParseUnsigned(fields[1]);
  for (std::uint64_t i = 0; i < num_targets; ++i) {
    fields = reader.NextFields();
    if (fields.size() != 5 || fields[0] != "target") reader.Fail("expected target block");
    if (model.network.Find(fields[1])) reader.Fail("duplicate target " + fields[1]);
    TargetNode& node = model.network.mutable_target(model.network.AddTarget(fields[1]));
    node.threshold = reader.ParseDouble(fields[2]);
    node.prior = reader.ParseUnsigned(fields[3]);
    const std::uint64_t links = reader.ParseUnsigned(fields[4]);
    node.weights.reserve(links);
    for (std::uint64_t j = 0; j < links; ++j) {
      fields = reader.NextFields();
      if (fields.size() != 2) reader.Fail("expected feature id and weight");
      const std::uint64_t id = reader.ParseUnsigned(fields[0]);
      node.weights[static_cast<FeatureId>(id)] = reader.ParseDouble(fields[1]);
    }
  }
  fields = reader.NextFields();
  if (fields.size() != 1 || fields[0] != "end") reader.Fail("expected end");
  return model;
}

Model LoadModelFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open model " + path);
  return LoadModel(in);
}

}  // namespace snowpredict
