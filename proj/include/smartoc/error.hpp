// Copyright 2026 The SMART-OC Authors
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

#ifndef SMARTOC_ERROR_HPP_
#define SMARTOC_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace smartoc {

enum class ErrorCode {
  kParse,
  kValidation,
  kInvalidRoot,
  kNoConnection,
  kNoFeasibleNode,
  kLengthMismatch,
  kMalformedTrace,
  kIo,
};

const char* ErrorCodeName(ErrorCode code);

// Every failure the library reports is an Error. `where` is a field path for
// validation errors ("risk.d_min_m"), a line number for malformed traces, and
// empty otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string where = {});

  ErrorCode code() const { return code_; }
  const std::string& where() const { return where_; }

 private:
  ErrorCode code_;
  std::string where_;
};

}  // namespace smartoc

#endif  // SMARTOC_ERROR_HPP_
