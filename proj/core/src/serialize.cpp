#include "wigner/serialize.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "wigner/errors.hpp"

namespace wigner {
namespace {

using Json = nlohmann::ordered_json;

double parse_number(std::string_view field, std::size_t line_no) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ConfigError("input", "line " + std::to_string(line_no) + ": bad number '" +
                                   std::string(field) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

Json rounded_array(const std::vector<double>& xs) {
  Json out = Json::array();
  for (double x : xs) out.push_back(round_to_emitted(x));
  return out;
}

std::string join_numbers(const std::vector<double>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ',';
    out += format_number(xs[i]);
  }
  return out;
}

std::string describe_location(const std::vector<std::string>& names, const ExtremumPoint& p) {
  std::string out;
  for (std::size_t k = 0; k < names.size(); ++k) {
    if (k > 0) out += ';';
    out += names[k] + '=' + format_number(p.parameters[k]);
  }
  return out;
}

std::string describe_locations(const std::vector<std::string>& names,
                               const std::vector<ExtremumPoint>& points) {
  std::string out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i > 0) out += '|';
    out += describe_location(names, points[i]);
  }
  return out;
}

Json extremum_json(const std::vector<std::string>& names, const ExtremumPoint& p) {
  Json params = Json::object();
  for (std::size_t k = 0; k < names.size(); ++k) {
    params[names[k]] = round_to_emitted(p.parameters[k]);
  }
  return Json{{"parameters", params}, {"value", round_to_emitted(p.value)}};
}

std::vector<std::string> axis_names(const ExtremaReport& report) {
  std::vector<std::string> names;
  for (const auto& axis : report.grid) names.push_back(axis.name);
  return names;
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", kSignificantDigits, x + 0.0);
  std::string out(buf);
  if (out == "-0") out = "0";
  return out;
}

double round_to_emitted(double x) {
  const std::string s = format_number(x);
  return std::strtod(s.c_str(), nullptr);
}

std::string_view sign_symbol(BasisSign s) { return s == BasisSign::plus ? "+" : "-"; }

// ---------------------------------------------------------------------------
// sweep

void write_sweep(std::ostream& out, const SweepGrid& grid, OutputFormat format) {
  if (format == OutputFormat::csv) {
    out << "theta,xi,w\n";
    for (const SweepRow& r : grid.rows) {
      out << format_number(r.theta) << ',' << format_number(r.xi) << ',' << format_number(r.w)
          << '\n';
    }
    out << "# visibility," << format_number(grid.visibility) << '\n';
    return;
  }
  Json doc;
  doc["kind"] = "sweep";
  doc["theta_steps"] = grid.theta_steps;
  doc["xi_steps"] = grid.xi_steps;
  doc["visibility"] = round_to_emitted(grid.visibility);
  doc["columns"] = {"theta", "xi", "w"};
  Json rows = Json::array();
  for (const SweepRow& r : grid.rows) rows.push_back(rounded_array({r.theta, r.xi, r.w}));
  doc["rows"] = std::move(rows);
  out << doc.dump() << '\n';
}

SweepGrid read_sweep(std::istream& in, OutputFormat format) {
  SweepGrid grid;
  if (format == OutputFormat::json) {
    Json doc;
    try {
      doc = Json::parse(in);
      grid.theta_steps = doc.at("theta_steps").get<std::size_t>();
      grid.xi_steps = doc.at("xi_steps").get<std::size_t>();
      grid.visibility = doc.at("visibility").get<double>();
      for (const auto& row : doc.at("rows")) {
        grid.rows.push_back({row.at(0).get<double>(), row.at(1).get<double>(),
                             row.at(2).get<double>()});
      }
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("input", std::string("malformed sweep JSON: ") + e.what());
    }
    if (grid.rows.size() != grid.theta_steps * grid.xi_steps) {
      throw ConfigError("input", "row count does not match theta_steps * xi_steps");
    }
    return grid;
  }

  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto fields = split(std::string_view(line).substr(1), ',');
      if (fields.size() == 2 && fields[0] == " visibility") {
        grid.visibility = parse_number(fields[1], line_no);
      }
      continue;
    }
    if (!header_seen) {
      if (line != "theta,xi,w") {
        throw ConfigError("input", "expected header 'theta,xi,w', got '" + line + "'");
      }
      header_seen = true;
      continue;
    }
    const auto fields = split(line, ',');
    if (fields.size() != 3) {
      throw ConfigError("input", "line " + std::to_string(line_no) + ": expected 3 columns");
    }
    grid.rows.push_back({parse_number(fields[0], line_no), parse_number(fields[1], line_no),
                         parse_number(fields[2], line_no)});
  }
  if (!header_seen) throw ConfigError("input", "empty sweep file");

  // Rows are theta-major: the first run of equal theta values is one xi sweep.
  std::size_t xi_steps = 0;
  while (xi_steps < grid.rows.size() && grid.rows[xi_steps].theta == grid.rows.front().theta) {
    ++xi_steps;
  }
  grid.xi_steps = xi_steps;
  grid.theta_steps = xi_steps == 0 ? 0 : grid.rows.size() / xi_steps;
  return grid;
}

SweepGrid read_sweep(std::istream& in) {
  const std::string contents((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const std::size_t first = contents.find_first_not_of(" \t\r\n");
  std::istringstream stream(contents);
  const bool json = first != std::string::npos && contents[first] == '{';
  return read_sweep(stream, json ? OutputFormat::json : OutputFormat::csv);
}

// ---------------------------------------------------------------------------
// bounds

void write_bounds(std::ostream& out, const BoundsResult& result, OutputFormat format) {
  const ExtremaReport& e = result.extrema;
  const std::vector<std::string> names = axis_names(e);

  if (format == OutputFormat::csv) {
    for (const auto& name : result.parameter_names) out << name << ',';
    out << "lambda_min,lambda_max\n";
    for (const BoundsRow& row : result.rows) {
      out << join_numbers(row.parameters) << ',' << format_number(row.lambda_min) << ','
          << format_number(row.lambda_max) << '\n';
    }
    out << "# kind,";
    for (const auto& name : names) out << name << ',';
    out << "value\n";
    auto emit = [&](const char* kind, const ExtremumPoint& p) {
      out << "# " << kind << ',' << join_numbers(p.parameters) << ',' << format_number(p.value)
          << '\n';
    };
    emit("global_min", e.global_min);
    emit("global_max", e.global_max);
    for (const auto& p : e.argmin) emit("argmin", p);
    for (const auto& p : e.argmax) emit("argmax", p);
    return;
  }

  Json doc;
  doc["kind"] = "bounds";
  doc["columns"] = result.parameter_names;
  doc["columns"].push_back("lambda_min");
  doc["columns"].push_back("lambda_max");
  Json rows = Json::array();
  for (const BoundsRow& row : result.rows) {
    std::vector<double> values = row.parameters;
    values.push_back(row.lambda_min);
    values.push_back(row.lambda_max);
    rows.push_back(rounded_array(values));
  }
  doc["rows"] = std::move(rows);

  Json grid = Json::array();
  for (const auto& axis : e.grid) {
    grid.push_back({{"name", axis.name},
                    {"min", round_to_emitted(axis.min)},
                    {"max", round_to_emitted(axis.max)},
                    {"steps", axis.steps}});
  }
  Json extrema;
  extrema["grid"] = std::move(grid);
  extrema["global_min"] = extremum_json(names, e.global_min);
  extrema["global_max"] = extremum_json(names, e.global_max);
  extrema["argmin"] = Json::array();
  for (const auto& p : e.argmin) extrema["argmin"].push_back(extremum_json(names, p));
  extrema["argmax"] = Json::array();
  for (const auto& p : e.argmax) extrema["argmax"].push_back(extremum_json(names, p));
  doc["extrema"] = std::move(extrema);
  out << doc.dump(2) << '\n';
}

// ---------------------------------------------------------------------------
// classical

void write_classical(std::ostream& out, const ClassicalBounds& bounds, OutputFormat format) {
  if (format == OutputFormat::csv) {
    out << "x1,x2,y2,y3,w\n";
    for (const auto& [s, w] : bounds.per_strategy) {
      out << sign_symbol(s.x1) << ',' << sign_symbol(s.x2) << ',' << sign_symbol(s.y2) << ','
          << sign_symbol(s.y3) << ',' << w << '\n';
    }
    out << "# w_min," << bounds.w_min << '\n';
    out << "# w_max," << bounds.w_max << '\n';
    return;
  }
  Json doc;
  doc["kind"] = "classical";
  Json strategies = Json::array();
  for (const auto& [s, w] : bounds.per_strategy) {
    strategies.push_back({{"x1", sign_symbol(s.x1)},
                          {"x2", sign_symbol(s.x2)},
                          {"y2", sign_symbol(s.y2)},
                          {"y3", sign_symbol(s.y3)},
                          {"w", w}});
  }
  doc["strategies"] = std::move(strategies);
  doc["w_min"] = bounds.w_min;
  doc["w_max"] = bounds.w_max;
  out << doc.dump(2) << '\n';
}

// ---------------------------------------------------------------------------
// qkd

void write_qkd(std::ostream& out, const std::vector<QkdAssessment>& report, OutputFormat format) {
  if (format == OutputFormat::csv) {
    out << "setting,family,parametrization,deterministic,marginals_random,lower_w,"
           "lower_violation,lower_locations,upper_w,upper_violation,upper_locations,secure\n";
    for (const QkdAssessment& a : report) {
      out << to_string(a.setting) << ',' << to_string(a.family) << ','
          << (a.general ? "general" : "fs") << ',' << bool_text(a.deterministic) << ','
          << bool_text(a.marginals_random) << ',' << format_number(a.lower.w) << ','
          << bool_text(a.lower.violation) << ','
          << describe_locations(a.parameter_names, a.lower.locations) << ','
          << format_number(a.upper.w) << ',' << bool_text(a.upper.violation) << ','
          << describe_locations(a.parameter_names, a.upper.locations) << ','
          << bool_text(a.secure) << '\n';
    }
    const QkdSummary summary = summarize(report);
    out << "# best_lower," << format_number(summary.best_lower) << '\n';
    out << "# best_upper," << format_number(summary.best_upper) << '\n';
    return;
  }

  Json doc;
  doc["kind"] = "qkd";
  Json assessments = Json::array();
  for (const QkdAssessment& a : report) {
    auto extreme_json = [&](const QkdExtreme& x) {
      Json locations = Json::array();
      for (const auto& p : x.locations) locations.push_back(extremum_json(a.parameter_names, p));
      return Json{{"w", round_to_emitted(x.w)},
                  {"violation", x.violation},
                  {"locations", std::move(locations)}};
    };
    assessments.push_back({{"setting", to_string(a.setting)},
                           {"family", to_string(a.family)},
                           {"parametrization", a.general ? "general" : "fs"},
                           {"deterministic", a.deterministic},
                           {"marginals_random", a.marginals_random},
                           {"lower", extreme_json(a.lower)},
                           {"upper", extreme_json(a.upper)},
                           {"secure", a.secure}});
  }
  doc["assessments"] = std::move(assessments);
  const QkdSummary summary = summarize(report);
  doc["best_lower"] = round_to_emitted(summary.best_lower);
  doc["best_upper"] = round_to_emitted(summary.best_upper);
  out << doc.dump(2) << '\n';
}

}  // namespace wigner
