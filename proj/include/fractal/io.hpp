#pragma once

#include <json.hpp>
#include <span>
#include <string>
#include <vector>

#include "fractal/measure.hpp"
#include "fractal/operators.hpp"
#include "fractal/spectral.hpp"
#include "fractal/ssm.hpp"
#include "fractal/verify.hpp"

namespace fractal::io {

using json = nlohmann::json;

inline constexpr const char* kOperatorSchema = "fractal-op/1";
inline constexpr const char* kSpectralSchema = "fractal-spectral/1";
inline constexpr const char* kSsmSchema = "fractal-ssm/1";
inline constexpr const char* kModelSchema = "fractal-model/1";

struct Model {
  FilterBankConfig config;
  std::vector<SpectralInit> channels;
  LayerWeights weights;
};

// Decoders throw SchemaError on a wrong schema_version or missing fields and ShapeError
// on inconsistent array lengths.
json operators_to_json(const HippoOperators& op);
HippoOperators operators_from_json(const json& j);

json spectral_to_json(const SpectralInit& init);
SpectralInit spectral_from_json(const json& j);

json ssm_to_json(const DiscreteDiagonalSSM& ssm);
DiscreteDiagonalSSM ssm_from_json(const json& j);

json model_to_json(const Model& model);
Model model_from_json(const json& j);

json report_to_json(const OracleReport& report);
json reports_to_json(std::span<const OracleReport> reports);
std::string format_reports(std::span<const OracleReport> reports);

std::string table_to_csv(const Table& table);

/// Rows of `t,u_0,...,u_{U-1}`; the leading t column is dropped.
SequenceBatch parse_input_csv(const std::string& text);
/// Rows of `t,z_0,...` with t the step index.
std::string output_to_csv(const SequenceBatch& z);

/// %.17g, with negative zero written as 0.
std::string format_double(double v);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace fractal::io
