/**************************************************************************
 * errors.hpp
 *
 * Copyright 2026 The lcpcodes Authors
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
 **************************************************************************/

#pragma once

#include <stdexcept>
#include <string>

namespace lcp {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that fails a validation rule (bad ring parameters, bad element,
/// mismatched algebras, ...). The CLI maps these to exit code 2.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class InvalidRingError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class MalformedElementError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotInvertibleError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class UnsupportedProjectionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class LengthMismatchError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class AlgebraMismatchError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class SizeLimitError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotLcpError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

enum class GroupErrorKind {
  kShape,
  kIndexRange,
  kLatinSquare,
  kMissingIdentity,
  kAssociativity,
  kMissingInverse,
};

class GroupValidationError : public ValidationError {
 public:
  GroupValidationError(GroupErrorKind kind, const std::string& what)
      : ValidationError(what), kind_(kind) {}

  GroupErrorKind kind() const noexcept { return kind_; }

 private:
  GroupErrorKind kind_;
};

/// A resource cap (enumeration size, ideal search size) was exceeded.
/// The CLI maps these to exit code 3.
class EnumerationTooLargeError : public Error {
 public:
  using Error::Error;
};

}  // namespace lcp
