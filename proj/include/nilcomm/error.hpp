// Copyright 2026 The nilcomm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nilcomm {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller violated a precondition (bad sizes, unsupported field, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class FieldMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Division by zero, singular matrix, non-nilpotent input and friends.
class DomainError : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed the configured visit cap. Raised before any
// work starts; counts are never silently truncated.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, long double requested,
                 std::uint64_t budget)
      : Error(what), requested_(requested), budget_(budget) {}

  long double requested() const { return requested_; }
  std::uint64_t budget() const { return budget_; }

 private:
  long double requested_;
  std::uint64_t budget_;
};

}  // namespace nilcomm
