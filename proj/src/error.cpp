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

#include "chainring/error.hpp"

namespace chainring {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::NonUnit: return "NonUnit";
    case ErrorKind::NotTeichmuller: return "NotTeichmuller";
    case ErrorKind::NotInBase: return "NotInBase";
    case ErrorKind::SizeGuardExceeded: return "SizeGuardExceeded";
    case ErrorKind::OrderUnavailable: return "OrderUnavailable";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::InvalidSubgroup: return "InvalidSubgroup";
    case ErrorKind::NonUnitDeterminant: return "NonUnitDeterminant";
    case ErrorKind::NotRsfInput: return "NotRsfInput";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::Mismatch: return "Mismatch";
    case ErrorKind::HermitianRequiresEvenDegree: return "HermitianRequiresEvenDegree";
    case ErrorKind::NotSubcode: return "NotSubcode";
    case ErrorKind::UnknownRepresentative: return "UnknownRepresentative";
    case ErrorKind::EmptyDefiningSet: return "EmptyDefiningSet";
    case ErrorKind::NotQInvariant: return "NotQInvariant";
    case ErrorKind::NotInterval: return "NotInterval";
    case ErrorKind::ZeroCode: return "ZeroCode";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::UnknownFixture: return "UnknownFixture";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::Internal: return "Internal";
  }
  return "Internal";
}

}  // namespace chainring
