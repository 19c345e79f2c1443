#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace sullivan::cli {

inline constexpr const char* kSchemaVersion = "1.0";
inline constexpr const char* kEngineVersion = "1.0.0";

enum class Format { json, csv, md };

struct Table {
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  std::string command;
  std::vector<std::string> argv;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json outputs = nlohmann::json::object();
  Table table;
  std::vector<std::string> notes;
  int exit_code = 0;
};

// RFC 4180: fields with a comma, quote, CR or LF are quoted, quotes doubled.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string render_csv(const Table& t) {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + csv_field(cells[i]);
    out += "\r\n";
  };
  line(t.headers);
  for (const auto& r : t.rows) line(r);
  return out;
}

inline std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c == '\n' ? ' ' : c;
  }
  return out;
}

inline std::string render_md(const Table& t, const std::vector<std::string>& notes) {
  std::string out = "|";
  for (const auto& h : t.headers) out += " " + md_cell(h) + " |";
  out += "\n|";
  for (std::size_t i = 0; i < t.headers.size(); ++i) out += "---|";
  out += "\n";
  for (const auto& r : t.rows) {
    out += "|";
    for (const auto& c : r) out += " " + md_cell(c) + " |";
    out += "\n";
  }
  for (const auto& n : notes) out += "\n> " + n + "\n";
  return out;
}

inline nlohmann::json render_json(const Report& r, const nlohmann::json& wall_time_ms) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = r.command;
  j["argv"] = r.argv;
  j["inputs"] = r.inputs;
  j["outputs"] = r.outputs;
  j["notes"] = r.notes;
  j["wall_time_ms"] = wall_time_ms;
  j["engine_version"] = kEngineVersion;
  return j;
}

}  // namespace sullivan::cli
