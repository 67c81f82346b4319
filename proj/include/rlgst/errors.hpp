// Copyright 2026 The rlgst authors
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

#ifndef RLGST_ERRORS_HPP
#define RLGST_ERRORS_HPP

#include <stdexcept>

namespace rlgst {

// Bad configuration or inconsistent inputs (exit code 2).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Unreadable or schema-violating files (exit code 4).
struct FileFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace rlgst

#endif
