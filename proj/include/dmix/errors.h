// Copyright 2026 The dmix Authors. All Rights Reserved.
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

#pragma once

#include <stdexcept>
#include <string>

namespace dmix {

// Root of every error raised by the library. Callers that only need to know
// "something about this item is wrong" catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands disagree on height/width/channels or label length.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A scalar parameter is outside its admissible range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// A foreground mask does not fit its image or is out of range.
class MaskError : public Error {
 public:
  using Error::Error;
};

// A numerical post-condition failed (e.g. inverse DFT left a large
// imaginary residue).
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Malformed manifest or CLI input.
class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Well-formed input that violates a semantic constraint (e.g. class index
// out of range).
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace dmix
