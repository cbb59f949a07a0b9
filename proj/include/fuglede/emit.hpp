#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace fuglede {

/// One emitted measurement. `params` is a flat JSON object; keys serialise in
/// sorted order.
struct ResultRecord {
  std::string command;
  nlohmann::json params = nlohmann::json::object();
  std::string metric;
  double value = 0.0;
  std::uint64_t seed = 0;
  double wall_time_ms = 0.0;

  friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

enum class OutputFormat { Csv, Json };

inline constexpr const char* kCsvHeader = "command,param_json,metric,value,seed,wall_time_ms";

/// %.17g; nan / inf / -inf spelled out.
std::string format_real(double v);
/// RFC 4180: quote when the field holds a comma, quote, CR or LF.
std::string csv_field(const std::string& s);

std::string render(const std::vector<ResultRecord>& records, OutputFormat format);
/// Inverse of the JSON rendering.
std::vector<ResultRecord> parse_json_records(const std::string& text);

/// Writes to `path` ("-" for stdout). Throws Error on IO failure.
void emit(const std::vector<ResultRecord>& records, OutputFormat format, const std::string& path);

} // namespace fuglede
