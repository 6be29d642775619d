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

#ifndef CATINT_JSON_IO_HPP
#define CATINT_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "catint/dsl.hpp"
#include "catint/integrator.hpp"
#include "catint/iposet.hpp"
#include "catint/measure.hpp"
#include "catint/quiver.hpp"
#include "catint/step_function.hpp"

namespace catint {

// Interval: [lo, hi]. Box: array of intervals. MeasurableSet: array of boxes.
void to_json(nlohmann::json& j, const Interval& iv);
void from_json(const nlohmann::json& j, Interval& iv);
void to_json(nlohmann::json& j, const Box& b);
void from_json(const nlohmann::json& j, Box& b);
void to_json(nlohmann::json& j, const MeasurableSet& s);

// StepFunction: {"ambient": box, "pieces": [{"box": box, "coeff": k}, ...]}
void to_json(nlohmann::json& j, const StepFunction& f);
void from_json(const nlohmann::json& j, StepFunction& f);

// {"lower", "upper", "width"}
void to_json(nlohmann::json& j, const Enclosure& e);

// {"set", "value"}
void to_json(nlohmann::json& j, const SigmaPair& p);
// {"interval", "value", "alpha"}; alpha is null when absent.
void to_json(nlohmann::json& j, const IPosetElement& e);

// {"name", "vertices", "arrows": [{"name", "source", "target"}], "relations": [[a, b]]}
void to_json(nlohmann::json& j, const QuiverDoc& d);
// {"kind", "arrows", "length"}
void to_json(nlohmann::json& j, const Thread& t);

}  // namespace catint

#endif  // CATINT_JSON_IO_HPP
