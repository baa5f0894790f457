// Copyright 2026 The Uzannot Authors.
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

#ifndef UZANNOT_ERRORS_H_
#define UZANNOT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace uzannot {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input text does not follow one of the line-oriented or XML formats.
class FormatError : public Error {
 public:
  using Error::Error;
};

// A referenced record or identifier does not exist.
class NotFoundError : public Error {
 public:
  using Error::Error;
};

// The operation contradicts current state: duplicate ids, uniqueness
// violations, illegal state transitions.
class ConflictError : public Error {
 public:
  using Error::Error;
};

// Filesystem or durability failure.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace uzannot

#endif  // UZANNOT_ERRORS_H_
