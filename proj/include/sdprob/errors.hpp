/*
 * Copyright 2026 The sdprob Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sdprob {

enum class ErrorCode {
  InvalidArgument = 1,
  Domain = 2,
  NotPositiveDefinite = 3,
  NotConverged = 4,
  Unachievable = 5,
  Config = 6,
  Io = 7,
};

const char* to_string(ErrorCode code) noexcept;

// Single exception type for the library; the code is what the C API hands out.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the Levinson gate and Cholesky checks; carries the 1-based order
// at which positive definiteness was lost.
class NotPositiveDefinite : public Error {
 public:
  NotPositiveDefinite(std::size_t order, const std::string& what)
      : Error(ErrorCode::NotPositiveDefinite, what), order_(order) {}

  std::size_t order() const noexcept { return order_; }

 private:
  std::size_t order_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool cond, const std::string& what,
                    ErrorCode code = ErrorCode::InvalidArgument) {
  if (!cond) throw Error(code, what);
}

}  // namespace sdprob
