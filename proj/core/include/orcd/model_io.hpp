#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "orcd/models.hpp"

namespace orcd {

using ModelSpec = std::variant<DiscreteOrcd, ParallelBinaryMrcd, BinaryMrcd, GaussianMrcd>;

/// Parses a model document. Errors are ValidationError with a JSON-pointer
/// style path to the offending field.
ModelSpec parse_model(std::string_view json_text);
ModelSpec load_model(const std::filesystem::path& path);

std::string model_to_json(const ModelSpec& model, int indent = 2);

/// Discrete view of a model; Gaussian models have none and raise UsageError.
DiscreteOrcd to_discrete(const ModelSpec& model);

}  // namespace orcd
