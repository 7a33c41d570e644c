#include "cli/report.hpp"

#include <charconv>
#include <cmath>
#include <json.hpp>

namespace cauchy::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) {
    if (!std::isfinite(*d)) return nullptr;
    return *d == 0.0 ? 0.0 : *d;
  }
  if (const auto* i = std::get_if<long long>(&c)) return *i;
  if (const auto* b = std::get_if<bool>(&c)) return *b;
  return std::get<std::string>(c);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string to_text(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
  if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  if (const auto* b = std::get_if<bool>(&c)) return *b ? "true" : "false";
  return csv_escape(std::get<std::string>(c));
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

Table& Report::table(const std::string& name, std::vector<std::string> columns) {
  tables.push_back(Table{name, std::move(columns), {}});
  return tables.back();
}

void Report::write(std::ostream& os, Format format) const {
  if (format == Format::Json) {
    ordered_json j;
    j["schema"] = "cauchy-kit/1";
    j["command"] = command;
    ordered_json m = ordered_json::object();
    for (const auto& [k, v] : meta) m[k] = to_json(v);
    j["config"] = m;
    ordered_json s = ordered_json::object();
    for (const auto& [k, v] : scalars) s[k] = to_json(v);
    j["scalars"] = s;
    ordered_json ts = ordered_json::object();
    for (const auto& t : tables) {
      ordered_json rows = ordered_json::array();
      for (const auto& r : t.rows) {
        ordered_json row = ordered_json::object();
        for (std::size_t c = 0; c < t.columns.size() && c < r.size(); ++c) row[t.columns[c]] = to_json(r[c]);
        rows.push_back(row);
      }
      ts[t.name] = rows;
    }
    j["tables"] = ts;
    os << j.dump(2) << '\n';
    return;
  }
  os << "# schema,cauchy-kit/1\n# command," << command << '\n';
  for (const auto& [k, v] : meta) os << "# " << k << ',' << to_text(v) << '\n';
  if (!scalars.empty()) {
    os << "\n[scalars]\nname,value\n";
    for (const auto& [k, v] : scalars) os << k << ',' << to_text(v) << '\n';
  }
  for (const auto& t : tables) {
    os << "\n[" << t.name << "]\n";
    for (std::size_t c = 0; c < t.columns.size(); ++c) os << (c ? "," : "") << t.columns[c];
    os << '\n';
    for (const auto& r : t.rows) {
      for (std::size_t c = 0; c < r.size(); ++c) os << (c ? "," : "") << to_text(r[c]);
      os << '\n';
    }
  }
}

}  // namespace cauchy::cli
