// Copyright 2026 The eaqec Authors
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

#include "eaqec/error.h"

namespace eaqec {

const char *error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidArgument:
            return "InvalidArgument";
        case ErrorKind::NonPrime:
            return "NonPrime";
        case ErrorKind::UnsupportedSize:
            return "UnsupportedSize";
        case ErrorKind::DivisionByZero:
            return "DivisionByZero";
        case ErrorKind::FieldMismatch:
            return "FieldMismatch";
        case ErrorKind::LengthMismatch:
            return "LengthMismatch";
        case ErrorKind::ShapeMismatch:
            return "ShapeMismatch";
        case ErrorKind::ZeroCode:
            return "ZeroCode";
        case ErrorKind::BudgetExceeded:
            return "BudgetExceeded";
        case ErrorKind::Infeasible:
            return "Infeasible";
        case ErrorKind::Cancelled:
            return "Cancelled";
        case ErrorKind::DependentGenerators:
            return "DependentGenerators";
        case ErrorKind::LengthExceedsDegree:
            return "LengthExceedsDegree";
        case ErrorKind::FormulaMismatch:
            return "FormulaMismatch";
        case ErrorKind::NegativeLogicalDim:
            return "NegativeLogicalDim";
        case ErrorKind::ConstraintViolation:
            return "ConstraintViolation";
        case ErrorKind::DualityFailure:
            return "DualityFailure";
        case ErrorKind::Parse:
            return "Parse";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {
}

}  // namespace eaqec
