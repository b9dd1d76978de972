#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "piltz/field.hpp"

namespace piltz {

// Field-descriptor files hold one JSON object per field (a bare object or an
// array of objects):
//   {"label": "...", "type": "quadratic"|"monogenic"|"rational",
//    "d": int | "coeffs": [leading, ..., constant],
//    "invariants": {"h": int, "R": float, "w": int}}
// Unknown keys are rejected.

FieldDescriptor field_from_json(const nlohmann::json& obj);
nlohmann::json field_to_json(const FieldDescriptor& field);

std::vector<FieldDescriptor> load_fields(const std::filesystem::path& path);
void save_fields(const std::filesystem::path& path, const std::vector<FieldDescriptor>& fields);

/// Q, Q(i), Q(sqrt -3), Q(sqrt 2), Q(sqrt 5), and the monogenic cubic, quartic
/// and quintic fields of discriminant -23, -283 and 2869, with invariants.
const std::vector<FieldDescriptor>& builtin_fields();

/// Looks the label up in `path` when given, otherwise among the built-ins.
FieldDescriptor find_field(const std::string& label, const std::filesystem::path& path = {});

}  // namespace piltz
