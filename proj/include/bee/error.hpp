/* Copyright 2026 The Bee Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <stdexcept>
#include <string>

namespace bee {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unknown column, duplicate column, or mismatched table schemas.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// Row handle out of range or row value not present.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// Projection onto an empty column list.
class InvalidProjection : public Error {
 public:
  using Error::Error;
};

/// A value does not have the type its column or operator requires.
class TypeMismatch : public Error {
 public:
  using Error::Error;
};

/// 64-bit signed overflow. Integer arithmetic never wraps.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Malformed JSON document, program text, or feature text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A substring/concat feature found no match in its input.
class ExtractionMiss : public Error {
 public:
  using Error::Error;
};

/// A program statement violates a static validity rule.
class ValidityError : public Error {
 public:
  using Error::Error;
};

/// The synthesizer produced something it could not verify. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace bee
