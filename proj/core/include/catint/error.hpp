// Copyright 2026 The catint Authors
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

#ifndef CATINT_ERROR_HPP
#define CATINT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace catint {

enum class Errc {
    OrderViolation,
    NonFinite,
    DimensionMismatch,
    DepthTooLarge,
    OutOfDomain,
    AmbientMismatch,
    BadExponent,
    ArityMismatch,
    BadPieces,
    NotMonotone,
    DomainMismatch,
    EmptyWeights,
    OutOfAmbient,
    BackingMismatch,
    TauNotHomomorphism,
    InversionFailed,
    InfiniteDimensional,
    InfiniteGlobalDimension,
    MethodDisagreement,
    PathNotInPresentation,
    NonIntegerResult,
    NotPermitted,
    BijectionFailure,
    NotValidated,
    SyntaxError,
    UnknownVertex,
    UnknownArrow,
    DuplicateVertex,
    DuplicateArrow,
    NonQuadraticRelation,
    NonComposableRelation,
    DomainAnnotationMissing,
};

std::string_view errc_name(Errc code) noexcept;

/// Domain error raised by every catint operation. The code identifies the
/// contract that was violated; the message carries the witness.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace catint

#endif  // CATINT_ERROR_HPP
