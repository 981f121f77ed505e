// Copyright 2026 The supercolor Authors
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

#ifndef SUPERCOLOR_ERROR_HPP_
#define SUPERCOLOR_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace supercolor {

// Malformed or inconsistent caller input (bad names, mismatched ground sets,
// unparsable files).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file (bad JSON, duplicate sets, unknown element names).
class ParseError : public InputError {
 public:
  using InputError::InputError;
};

// A documented precondition of an operation does not hold, e.g. a set
// function that is not intersecting-supermodular.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A guaranteed postcondition failed. Always a bug in this library.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A search cap or budget would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A random generator exhausted its resampling budget.
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace supercolor

#endif  // SUPERCOLOR_ERROR_HPP_
