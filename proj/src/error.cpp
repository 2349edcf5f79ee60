// Copyright 2026 The holescan Authors
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

#include "holescan/error.h"

namespace holescan {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDegenerateTriangle:
      return "DegenerateTriangle";
    case ErrorCode::kIndexOutOfRange:
      return "IndexOutOfRange";
    case ErrorCode::kDuplicateTriangle:
      return "DuplicateTriangle";
    case ErrorCode::kNonFinitePosition:
      return "NonFinitePosition";
    case ErrorCode::kEdgeNotInTriangle:
      return "EdgeNotInTriangle";
    case ErrorCode::kNotHalfEdge:
      return "NotHalfEdge";
    case ErrorCode::kNotEdgeManifold:
      return "NotEdgeManifold";
    case ErrorCode::kInvalidSplit:
      return "InvalidSplit";
    case ErrorCode::kOrphanBoundary:
      return "OrphanBoundary";
    case ErrorCode::kMalformedHeader:
      return "MalformedHeader";
    case ErrorCode::kUnsupportedFormat:
      return "UnsupportedFormat";
    case ErrorCode::kNonTriangleFace:
      return "NonTriangleFace";
    case ErrorCode::kMalformedData:
      return "MalformedData";
    case ErrorCode::kIoFailure:
      return "IoFailure";
    case ErrorCode::kInvalidSpec:
      return "InvalidSpec";
    case ErrorCode::kInvariantViolation:
      return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace holescan
