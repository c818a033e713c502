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

#ifndef SNOWPREDICT_ERROR_H_
#define SNOWPREDICT_ERROR_H_

#include <stdexcept>
#include <string>

namespace snowpredict {

// Raised for malformed or inconsistent input data (corpus, model, lexicon,
// feature definitions). The CLI maps it to exit status 2.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace snowpredict

#endif  // SNOWPREDICT_ERROR_H_
