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

#include "snowpredict/log.h"

#include <cstdlib>
#include <string>

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

namespace snowpredict {

void InitLogging() {
  auto logger = spdlog::get("snowpredict");
  if (!logger) logger = spdlog::stderr_color_mt("snowpredict");
  spdlog::set_default_logger(logger);
  spdlog::set_pattern("%^[%l]%$ %v");

  auto level = spdlog::level::warn;
  if (const char* env = std::getenv("SNOWPREDICT_LOG"); env && *env) {
    level = spdlog::level::from_str(env);
  }
  spdlog::set_level(level);
}

}  // namespace snowpredict
