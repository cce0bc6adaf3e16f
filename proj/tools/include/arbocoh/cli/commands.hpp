#pragma once

#include <complex>
#include <string>

#include <nlohmann/json.hpp>

#include "arbocoh/classify.hpp"
#include "arbocoh/cli/config.hpp"

namespace arbocoh::cli {

/// "0.5", "1/2+2i", "0.3-1.5i", "2i". Throws InvalidArgument.
std::complex<double> parse_complex(const std::string& text);

/// A Shape JSON object or a builder string: "vertex:q", "edge:q", "star:q",
/// "y:q", "centipede:q:k".
Shape parse_shape(const nlohmann::json& j);

/// {"tag": "spherical"|"special"|"cuspidal", "q", "z", "sign", "shape", "irrep"}.
/// "irrep" is a row index, a character fingerprint or "sign-kernel-st". Every
/// failure is reported as InvalidDescriptor.
RepDescriptor parse_descriptor(const nlohmann::json& j, const Config& cfg);

nlohmann::ordered_json cmd_classify(const nlohmann::json& descriptor, int n, const Config& cfg);
nlohmann::ordered_json cmd_spectrum(const nlohmann::json& shape, const Config& cfg);
nlohmann::ordered_json cmd_shapes_enumerate(int q, int max_diameter, const Config& cfg);
nlohmann::ordered_json cmd_chartab(const nlohmann::json& shape, const Config& cfg);
/// Random flip instance of the configured depth and its witness.
nlohmann::ordered_json cmd_flip_demo(const Config& cfg);
nlohmann::ordered_json cmd_spherical_check(int q, const std::string& z, int max_distance, const Config& cfg);

}  // namespace arbocoh::cli
