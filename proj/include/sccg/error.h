// Copyright 2026 The SCCG Toolkit Authors
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

#ifndef SCCG_ERROR_H_
#define SCCG_ERROR_H_

#include <stdexcept>
#include <string>

namespace sccg {

// Failure categories. The numeric values double as CLI exit codes.
enum class ErrorCode : int {
  kInvalidArgument = 2,
  kSizeCap = 3,
  kIo = 4,
  kMalformedInput = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline Error InvalidArgument(const std::string& what) {
  return Error(ErrorCode::kInvalidArgument, what);
}

inline Error SizeCapExceeded(const std::string& what) {
  return Error(ErrorCode::kSizeCap, what);
}

inline Error IoError(const std::string& what) {
  return Error(ErrorCode::kIo, what);
}

// `line` is 1-based; 0 means the error is not tied to a line.
inline Error MalformedInput(const std::string& what, std::size_t line = 0) {
  if (line == 0) return Error(ErrorCode::kMalformedInput, what);
  return Error(ErrorCode::kMalformedInput,
               "line " + std::to_string(line) + ": " + what);
}

}  // namespace sccg

#endif  // SCCG_ERROR_H_
