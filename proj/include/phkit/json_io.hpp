#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "phkit/errors.hpp"
#include "phkit/metric_forms.hpp"
#include "phkit/quadric_surface.hpp"

namespace phkit {

using Json = nlohmann::ordered_json;

/// Throws Error(IoError) if the file cannot be read, Error(InvalidInput) if it is not JSON.
Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// Accepts {"entries": [[[re, im], [re, im]], [[re, im], [re, im]]]} or
/// {"pauli": {"h0": [re, im], "hR": [x, y, z], "hI": [x, y, z]}}.
PauliForm pauli_from_json(const Json& j);

/// Either matrix form above (must be Hermitian) or {"d": r, "gR": [a, b, c]}.
HermitianMetric metric_from_json(const Json& j, const Tolerance& tol = {});

Json to_json(const Vec3& v);
Json to_json(const Mat3& m);
Json to_json(Complex z);
Json to_json(const PauliForm& p);
Json to_json(const HermitianMetric& g);
Json to_json(const QuadraticSurface& s);

Vec3 vec3_from_json(const Json& j);
Mat3 mat3_from_json(const Json& j);

/// Serializes with every number printed to 17 significant digits.
std::string dump(const Json& j, int indent = 2);

/// 1 for validation errors, 2 for I/O errors.
int exit_code(ErrorKind kind);

}  // namespace phkit
