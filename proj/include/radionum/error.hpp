// Copyright 2026 The radionum Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RADIONUM_ERROR_HPP
#define RADIONUM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace radionum {

enum class ErrorCode {
  kParse,            // malformed tree or labeling input
  kInvalidArgument,  // bad parameter (k out of range, size mismatch, ...)
  kDomain,           // operation undefined for this tree (e.g. diameter < 2)
  kRefused,          // composition refused (base with two weight centers)
  kCapExceeded,      // exact solver order cap
  kBudgetExceeded,   // node budget ran out before a proven answer
  kNotAttained,      // lower bound not attained where a certificate was required
  kIo,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace radionum

#endif  // RADIONUM_ERROR_HPP
