#include "io.hpp"

#include <iomanip>
#include <sstream>

#include "instanton/errors.hpp"

namespace instanton::io {

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "text") return Format::text;
  throw DomainError("unknown format '" + s + "'");
}

json to_json(const IdentityResult& r, const std::string& suite) {
  json j{{"suite", suite},
         {"name", r.name},
         {"pass", r.pass},
         {"checked_to", to_string(r.checked_to)},
         {"first_difference", nullptr},
         {"detail", r.detail},
         {"seconds", r.seconds}};
  if (r.first_difference) j["first_difference"] = to_string(*r.first_difference);
  return j;
}

json to_json(const Report& r) {
  json items = json::array();
  for (const auto& i : r.items) items.push_back(to_json(i, r.suite));
  return {{"suite", r.suite}, {"passed", r.passed()}, {"items", items}};
}

json to_json(const EulerTable& t) {
  json rows = json::array();
  for (const auto& r : t.rows) {
    json row{{"delta", to_string(r.delta)},
             {"dim", to_int64(r.dim)},
             {"euler", to_string(r.euler)},
             {"betti", nullptr},
             {"singular", r.singular}};
    if (r.betti) {
      json b = json::array();
      for (const auto& x : *r.betti) b.push_back(to_int64(x));
      row["betti"] = b;
    }
    rows.push_back(row);
  }
  return {{"class", std::string(table_class_string(t.cls))}, {"rows", rows}};
}

EulerTable table_from_json(const json& j) {
  EulerTable t{parse_table_class(j.at("class").get<std::string>()), {}};
  for (const auto& row : j.at("rows")) {
    EulerRow r;
    r.delta = parse_rational(row.at("delta").get<std::string>());
    r.dim = Integer(std::to_string(row.at("dim").get<std::int64_t>()));
    r.euler = parse_rational(row.at("euler").get<std::string>());
    r.singular = row.at("singular").get<bool>();
    if (!row.at("betti").is_null()) {
      std::vector<Integer> b;
      for (const auto& x : row.at("betti")) b.emplace_back(std::to_string(x.get<std::int64_t>()));
      r.betti = std::move(b);
    }
    t.rows.push_back(std::move(r));
  }
  return t;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

namespace {

std::string betti_string(const EulerRow& r, const char* sep) {
  if (!r.betti) return "";
  std::string s;
  for (std::size_t i = 0; i < r.betti->size(); ++i) {
    if (i) s += sep;
    s += (*r.betti)[i].get_str();
  }
  return s;
}

}  // namespace

std::string table_csv(const EulerTable& t) {
  std::ostringstream os;
  os << "class,delta,dim,euler,betti,singular\n";
  for (const auto& r : t.rows)
    os << table_class_string(t.cls) << ',' << to_string(r.delta) << ',' << r.dim.get_str() << ','
       << to_string(r.euler) << ',' << csv_field(betti_string(r, " ")) << ',' << (r.singular ? "true" : "false")
       << '\n';
  return os.str();
}

std::string table_text(const EulerTable& t) {
  std::ostringstream os;
  os << "class " << table_class_string(t.cls) << "\n";
  os << std::left << std::setw(8) << "Delta" << std::setw(6) << "dim" << std::setw(24) << "euler"
     << "betti\n";
  for (const auto& r : t.rows) {
    os << std::left << std::setw(8) << to_string(r.delta) << std::setw(6) << r.dim.get_str() << std::setw(24)
       << to_string(r.euler);
    if (r.singular)
      os << "singular (defined by the wall formula)";
    else if (r.betti)
      os << "[" << betti_string(r, ", ") << "]";
    os << "\n";
  }
  return os.str();
}

std::string report_csv(const std::vector<Report>& reports) {
  std::ostringstream os;
  os << "suite,name,pass,checked_to,first_difference,seconds,detail\n";
  for (const auto& rep : reports)
    for (const auto& i : rep.items)
      os << csv_field(rep.suite) << ',' << csv_field(i.name) << ',' << (i.pass ? "true" : "false") << ','
         << to_string(i.checked_to) << ',' << (i.first_difference ? to_string(*i.first_difference) : "") << ','
         << i.seconds << ',' << csv_field(i.detail) << '\n';
  return os.str();
}

std::string report_text(const std::vector<Report>& reports) {
  std::ostringstream os;
  for (const auto& rep : reports) {
    os << "[" << rep.suite << "]\n";
    for (const auto& i : rep.items) {
      os << (i.pass ? "  PASS  " : "  FAIL  ") << i.name << "  (to " << to_string(i.checked_to);
      if (i.seconds > 0) os << ", " << std::fixed << std::setprecision(3) << i.seconds << " s" << std::defaultfloat;
      os << ")";
      if (!i.pass && !i.detail.empty()) os << "\n        " << i.detail;
      os << "\n";
    }
  }
  return os.str();
}

json series_json(const QSeries& s) {
  json terms = json::array();
  for (const auto& [k, c] : s.terms()) terms.push_back({{"exponent", to_string(s.exponent_of(k))}, {"coeff", to_string(c)}});
  return {{"trunc", to_string(s.trunc())}, {"terms", terms}};
}

}  // namespace instanton::io
