#pragma once

#include <json.hpp>
#include <string>

#include "instanton/report.hpp"
#include "instanton/results.hpp"

namespace instanton::io {

using nlohmann::json;

enum class Format { json, csv, text };
Format parse_format(const std::string& s);

json to_json(const IdentityResult& r, const std::string& suite);
json to_json(const Report& r);

// {class, rows: [{delta, dim, euler, betti, singular}]}; every rational is a
// "p/q" string.
json to_json(const EulerTable& t);
EulerTable table_from_json(const json& j);

std::string table_csv(const EulerTable& t);
std::string table_text(const EulerTable& t);

std::string report_csv(const std::vector<Report>& reports);
std::string report_text(const std::vector<Report>& reports);

json series_json(const QSeries& s);

// RFC 4180 quoting for one CSV field.
std::string csv_field(const std::string& s);

}  // namespace instanton::io
