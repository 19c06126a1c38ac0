#pragma once

#include <string>

#include "permod/anyon_model.hpp"

namespace permod {

/// Load a model document (JSON, UTF-8). Keys: labels, unit, dual, fusion,
/// F, R, twist, qdim, S, T; unknown keys are rejected. Every admissible
/// F- and R-symbol must be present exactly once. With verify=true the
/// pentagon and hexagon equations are checked and violations throw.
AnyonModel load_model(const std::string& text, bool verify = true, double tol = kDefaultTol);
AnyonModel load_model_file(const std::string& path, bool verify = true,
                           double tol = kDefaultTol);

/// Serialize a model to the same document format (deterministic key and
/// entry order).
std::string model_to_json(const AnyonModel& model);

/// Resolve a --model argument: a built-in name or a path to a model file.
AnyonModel resolve_model(const std::string& ref, bool verify = true);

} // namespace permod
