// Copyright 2026 The bsk Authors
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

#include "bsk/error.hpp"

namespace bsk {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kNotOrdered: return "NotOrdered";
    case ErrorCode::kStrandMismatch: return "StrandMismatch";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNotDivisible: return "NotDivisible";
    case ErrorCode::kNotInImage: return "NotInImage";
    case ErrorCode::kNotDescending: return "NotDescending";
    case ErrorCode::kNoSquare: return "NoSquare";
    case ErrorCode::kUnresolvable: return "Unresolvable";
    case ErrorCode::kInternalInconsistency: return "InternalInconsistency";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kVerificationFailure: return "VerificationFailure";
  }
  return "Unknown";
}

}  // namespace bsk
