// Copyright 2026 The HTS Geometry Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HTS_ERRORS_H_
#define HTS_ERRORS_H_

#include <stdexcept>
#include <string>

namespace hts {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition violated (out-of-range parameter, length mismatch, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A box or line with zero extent where a positive one is required.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

// Image point with no preimage in a crop mapping.
class NoPreimageError : public Error {
 public:
  using Error::Error;
};

// Iterative solve failed; carries the best residual reached.
class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

// Malformed document or schema violation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// File could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace hts

#endif  // HTS_ERRORS_H_
