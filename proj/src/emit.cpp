#include "fuglede/emit.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "fuglede/errors.hpp"

namespace fuglede {

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

namespace {

nlohmann::json real_to_json(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

double json_to_real(const nlohmann::json& j) {
  return j.is_null() ? std::nan("") : j.get<double>();
}

} // namespace

std::string render(const std::vector<ResultRecord>& records, OutputFormat format) {
  if (format == OutputFormat::Csv) {
    std::string out = std::string(kCsvHeader) + "\n";
    for (const auto& r : records) {
      out += csv_field(r.command) + ',' + csv_field(r.params.dump()) + ',' + csv_field(r.metric) + ',' +
             format_real(r.value) + ',' + std::to_string(r.seed) + ',' + format_real(r.wall_time_ms) + '\n';
    }
    return out;
  }
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records) {
    arr.push_back({{"command", r.command},
                   {"params", r.params},
                   {"metric", r.metric},
                   {"value", real_to_json(r.value)},
                   {"seed", r.seed},
                   {"wall_time_ms", real_to_json(r.wall_time_ms)}});
  }
  return arr.dump(2) + "\n";
}

std::vector<ResultRecord> parse_json_records(const std::string& text) {
  const auto arr = nlohmann::json::parse(text);
  std::vector<ResultRecord> out;
  for (const auto& j : arr) {
    out.push_back({j.at("command").get<std::string>(), j.at("params"), j.at("metric").get<std::string>(),
                   json_to_real(j.at("value")), j.at("seed").get<std::uint64_t>(), json_to_real(j.at("wall_time_ms"))});
  }
  return out;
}

void emit(const std::vector<ResultRecord>& records, OutputFormat format, const std::string& path) {
  const std::string text = render(records, format);
  if (path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw Error("emit: cannot open '" + path + "' for writing");
  os << text;
  if (!os) throw Error("emit: write to '" + path + "' failed");
}

} // namespace fuglede
