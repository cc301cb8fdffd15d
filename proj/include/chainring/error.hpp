/* Copyright (C) 2026 The chainring authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */

#ifndef CHAINRING_ERROR_HPP
#define CHAINRING_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace chainring {

/// Domain error kinds. The CLI reports these by name.
enum class ErrorKind {
  NotPrime,
  ReducibleModulus,
  DegreeMismatch,
  RingMismatch,
  NonUnit,
  NotTeichmuller,
  NotInBase,
  SizeGuardExceeded,
  OrderUnavailable,
  NotCoprime,
  InvalidSubgroup,
  NonUnitDeterminant,
  NotRsfInput,
  LengthMismatch,
  Mismatch,
  HermitianRequiresEvenDegree,
  NotSubcode,
  UnknownRepresentative,
  EmptyDefiningSet,
  NotQInvariant,
  NotInterval,
  ZeroCode,
  UnknownSuite,
  UnknownFixture,
  ParseError,
  Unsupported,
  Internal,
};

std::string_view error_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace chainring

#endif  // CHAINRING_ERROR_HPP
