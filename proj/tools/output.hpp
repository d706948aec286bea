#pragma once

#include <json.hpp>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace gha::cli {

enum class Format { Json, Csv, Markdown };

/// Tabular block of a document; every row holds one value per column.
struct Section {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::ordered_json>> rows;
};

/// Command output: scalar fields followed by zero or more row sections.
///
/// JSON renders one top-level object in insertion order. CSV renders the first
/// section only (RFC 4180). Markdown renders fields as a list and every section
/// as a table.
struct Document {
  nlohmann::ordered_json fields = nlohmann::ordered_json::object();
  std::vector<Section> sections;
};

/// Shortest decimal string that parses back to exactly `value`.
std::string format_double(double value);

std::string render(const Document& doc, Format format, bool with_meta);

}  // namespace gha::cli
