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

#include "catint/error.hpp"

namespace catint {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::OrderViolation: return "OrderViolation";
        case Errc::NonFinite: return "NonFinite";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::DepthTooLarge: return "DepthTooLarge";
        case Errc::OutOfDomain: return "OutOfDomain";
        case Errc::AmbientMismatch: return "AmbientMismatch";
        case Errc::BadExponent: return "BadExponent";
        case Errc::ArityMismatch: return "ArityMismatch";
        case Errc::BadPieces: return "BadPieces";
        case Errc::NotMonotone: return "NotMonotone";
        case Errc::DomainMismatch: return "DomainMismatch";
        case Errc::EmptyWeights: return "EmptyWeights";
        case Errc::OutOfAmbient: return "OutOfAmbient";
        case Errc::BackingMismatch: return "BackingMismatch";
        case Errc::TauNotHomomorphism: return "TauNotHomomorphism";
        case Errc::InversionFailed: return "InversionFailed";
        case Errc::InfiniteDimensional: return "InfiniteDimensional";
        case Errc::InfiniteGlobalDimension: return "InfiniteGlobalDimension";
        case Errc::MethodDisagreement: return "MethodDisagreement";
        case Errc::PathNotInPresentation: return "PathNotInPresentation";
        case Errc::NonIntegerResult: return "NonIntegerResult";
        case Errc::NotPermitted: return "NotPermitted";
        case Errc::BijectionFailure: return "BijectionFailure";
        case Errc::NotValidated: return "NotValidated";
        case Errc::SyntaxError: return "SyntaxError";
        case Errc::UnknownVertex: return "UnknownVertex";
        case Errc::UnknownArrow: return "UnknownArrow";
        case Errc::DuplicateVertex: return "DuplicateVertex";
        case Errc::DuplicateArrow: return "DuplicateArrow";
        case Errc::NonQuadraticRelation: return "NonQuadraticRelation";
        case Errc::NonComposableRelation: return "NonComposableRelation";
        case Errc::DomainAnnotationMissing: return "DomainAnnotationMissing";
    }
    return "Unknown";
}

}  // namespace catint
