#include "output.hpp"

#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>

namespace gha::cli {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 64> buffer{};
  const auto result = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return {buffer.data(), result.ptr};
}

namespace {

std::string scalar_text(const nlohmann::ordered_json& value) {
  if (value.is_number_float()) return format_double(value.get<double>());
  if (value.is_number_integer()) return std::to_string(value.get<long long>());
  if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
  if (value.is_string()) return value.get<std::string>();
  if (value.is_null()) return "";
  return value.dump();
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (const char ch : text) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  quoted += '"';
  return quoted;
}

std::string md_cell(const std::string& text) {
  std::string out;
  for (const char ch : text) {
    if (ch == '|') out += '\\';
    out += ch;
  }
  return out;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  std::array<char, 32> buffer{};
  const std::size_t length = std::strftime(buffer.data(), buffer.size(), "%Y-%m-%dT%H:%M:%SZ", &utc);
  return {buffer.data(), length};
}

nlohmann::ordered_json meta_block() {
  nlohmann::ordered_json meta;
  meta["tool"] = "gha";
  meta["version"] = "0.1.0";
  meta["generated_at"] = utc_timestamp();
  return meta;
}

std::string render_json(const Document& doc, bool with_meta) {
  nlohmann::ordered_json root = doc.fields;
  for (const auto& section : doc.sections) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : section.rows) {
      nlohmann::ordered_json object = nlohmann::ordered_json::object();
      for (std::size_t c = 0; c < section.columns.size(); ++c) {
        object[section.columns[c]] = row[c];
      }
      rows.push_back(std::move(object));
    }
    root[section.name] = std::move(rows);
  }
  if (with_meta) root["meta"] = meta_block();
  return root.dump(2) + "\n";
}

std::string render_csv(const Document& doc) {
  std::string out;
  if (doc.sections.empty()) {
    // Fields only: one header row, one value row.
    std::string header;
    std::string values;
    for (const auto& [key, value] : doc.fields.items()) {
      if (!header.empty()) {
        header += ',';
        values += ',';
      }
      header += csv_field(key);
      values += csv_field(value.is_structured() ? value.dump() : scalar_text(value));
    }
    return header + "\r\n" + values + "\r\n";
  }
  const Section& section = doc.sections.front();
  for (std::size_t c = 0; c < section.columns.size(); ++c) {
    if (c > 0) out += ',';
    out += csv_field(section.columns[c]);
  }
  out += "\r\n";
  for (const auto& row : section.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += ',';
      out += csv_field(scalar_text(row[c]));
    }
    out += "\r\n";
  }
  return out;
}

void render_fields_md(const nlohmann::ordered_json& fields, const std::string& indent,
                      std::string& out) {
  for (const auto& [key, value] : fields.items()) {
    if (value.is_object()) {
      out += indent + "- **" + key + "**:\n";
      render_fields_md(value, indent + "  ", out);
    } else {
      out += indent + "- **" + key + "**: " +
             md_cell(value.is_array() ? value.dump() : scalar_text(value)) + "\n";
    }
  }
}

std::string render_markdown(const Document& doc, bool with_meta) {
  std::string out;
  nlohmann::ordered_json fields = doc.fields;
  if (with_meta) fields["meta"] = meta_block();
  render_fields_md(fields, "", out);
  for (const auto& section : doc.sections) {
    out += "\n### " + section.name + "\n\n|";
    for (const auto& column : section.columns) out += " " + md_cell(column) + " |";
    out += "\n|";
    for (std::size_t c = 0; c < section.columns.size(); ++c) out += " --- |";
    out += "\n";
    for (const auto& row : section.rows) {
      out += "|";
      for (const auto& value : row) out += " " + md_cell(scalar_text(value)) + " |";
      out += "\n";
    }
  }
  return out;
}

}  // namespace

std::string render(const Document& doc, Format format, bool with_meta) {
  switch (format) {
    case Format::Json:
      return render_json(doc, with_meta);
    case Format::Csv:
      return render_csv(doc);
    case Format::Markdown:
      return render_markdown(doc, with_meta);
  }
  return {};
}

}  // namespace gha::cli
