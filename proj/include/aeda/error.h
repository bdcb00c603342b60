//
// Copyright 2026 The AEDA Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef AEDA_ERROR_H_
#define AEDA_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aeda {

// Errors caused by bad user input (files, flags, configs). Programming
// contract violations use std::invalid_argument / std::logic_error instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parse failure in a line-oriented file. line() is 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

  size_t line() const { return line_; }

 private:
  size_t line_;
};

}  // namespace aeda

#endif  // AEDA_ERROR_H_
