#include "shg/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "shg/errors.hpp"

namespace shg::io {

using ordered_json = nlohmann::ordered_json;

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw InvalidConfiguration("unknown output format '" + std::string(name) + "'");
}

std::string extension(Format format) { return format == Format::csv ? ".csv" : ".json"; }

const std::vector<double>& Table::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return columns.at(i);
  }
  throw InvalidInput("table has no column '" + std::string(name) + "'");
}

namespace {

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::ofstream open_out(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot open " + path.string() + " for writing");
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path.string() + " for reading");
  return in;
}

double json_number(const ordered_json& v) {
  return v.is_null() ? std::numeric_limits<double>::quiet_NaN() : v.get<double>();
}

}  // namespace

void write_table(const std::filesystem::path& path, const Table& table, Format format) {
  if (table.header.size() != table.columns.size()) {
    throw InvalidInput("table header and column count differ");
  }
  auto out = open_out(path);
  if (format == Format::csv) {
    for (std::size_t c = 0; c < table.header.size(); ++c) {
      out << (c ? "," : "") << table.header[c];
    }
    out << '\n';
    for (std::size_t r = 0; r < table.rows(); ++r) {
      for (std::size_t c = 0; c < table.columns.size(); ++c) {
        out << (c ? "," : "") << format_number(table.columns[c].at(r));
      }
      out << '\n';
    }
  } else {
    ordered_json doc = ordered_json::object();
    for (std::size_t c = 0; c < table.header.size(); ++c) doc[table.header[c]] = table.columns[c];
    out << doc.dump(1) << '\n';
  }
}

Table read_table(const std::filesystem::path& path, Format format) {
  auto in = open_in(path);
  Table table;
  if (format == Format::csv) {
    std::string line;
    if (!std::getline(in, line)) throw InvalidInput(path.string() + " is empty");
    std::stringstream hs(line);
    for (std::string name; std::getline(hs, name, ',');) table.header.push_back(name);
    table.columns.resize(table.header.size());
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      std::size_t c = 0;
      const char* p = line.c_str();
      for (;;) {
        char* end = nullptr;
        const double v = std::strtod(p, &end);
        if (end == p || c >= table.columns.size()) {
          throw InvalidInput("malformed row in " + path.string() + ": " + line);
        }
        table.columns[c++].push_back(v);
        if (*end == ',') {
          p = end + 1;
        } else {
          break;
        }
      }
      if (c != table.columns.size()) throw InvalidInput("short row in " + path.string());
    }
  } else {
    const ordered_json doc = ordered_json::parse(in);
    for (const auto& [name, values] : doc.items()) {
      table.header.push_back(name);
      std::vector<double> col;
      col.reserve(values.size());
      for (const auto& v : values) col.push_back(json_number(v));
      table.columns.push_back(std::move(col));
    }
  }
  return table;
}

Table profile_table(const PulsePair& pair) {
  const auto x = pair.grid().nodes();
  const RealField rho = density(pair);
  Table t;
  t.header = {"x", "phi", "psi", "rho"};
  t.columns = {std::vector<double>(x.begin(), x.end()),
               std::vector<double>(pair.f.values().begin(), pair.f.values().end()),
               std::vector<double>(pair.g.values().begin(), pair.g.values().end()),
               std::vector<double>(rho.values().begin(), rho.values().end())};
  return t;
}

void write_profile(const std::filesystem::path& path, const PulsePair& pair, Format format) {
  write_table(path, profile_table(pair), format);
}

PulsePair read_profile(const std::filesystem::path& path, Format format) {
  const Table t = read_table(path, format);
  const auto& x = t.column("x");
  if (x.size() < 2) throw InvalidInput(path.string() + " holds fewer than two rows");
  const Grid grid = Grid::make(-x.front(), x.size());
  const auto nodes = grid.nodes();
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (std::abs(nodes[j] - x[j]) > 1e-12 * grid.half_length()) {
      throw InvalidInput(path.string() + " abscissae do not form a uniform periodic grid");
    }
  }
  return PulsePair(RealField(grid, t.column("phi")), RealField(grid, t.column("psi")));
}

Table trace_table(const std::vector<TraceEntry>& trace) {
  Table t;
  t.header = {"iteration", "objective", "residual", "step"};
  t.columns.resize(4);
  for (const auto& e : trace) {
    t.columns[0].push_back(e.iteration);
    t.columns[1].push_back(e.objective);
    t.columns[2].push_back(e.residual);
    t.columns[3].push_back(e.step);
  }
  return t;
}

Table series_table(const std::vector<TimeSample>& series) {
  Table t;
  t.header = {"t", "Q", "H", "amp_drift_W", "amp_drift_V", "phase_W", "phase_V"};
  t.columns.resize(t.header.size());
  for (const auto& s : series) {
    t.columns[0].push_back(s.t);
    t.columns[1].push_back(s.charge);
    t.columns[2].push_back(s.hamiltonian);
    t.columns[3].push_back(s.amp_drift_w);
    t.columns[4].push_back(s.amp_drift_v);
    t.columns[5].push_back(s.phase_w);
    t.columns[6].push_back(s.phase_v);
  }
  return t;
}

void write_summary(const std::filesystem::path& path, const Summary& summary) {
  ordered_json doc;
  doc["m_lambda"] = summary.m_lambda;
  doc["kappa"] = summary.kappa;
  doc["residual"] = summary.residual;
  doc["iterations"] = summary.iterations;
  doc["decay_rate_phi"] = summary.decay_rate_phi;
  doc["decay_rate_psi"] = summary.decay_rate_psi;
  doc["seed"] = summary.seed;
  for (const auto& [key, value] : summary.extra) doc[key] = value;
  auto out = open_out(path);
  out << doc.dump(2) << '\n';
}

Summary read_summary(const std::filesystem::path& path) {
  auto in = open_in(path);
  const ordered_json doc = ordered_json::parse(in);
  Summary s;
  s.m_lambda = json_number(doc.at("m_lambda"));
  s.kappa = json_number(doc.at("kappa"));
  s.residual = json_number(doc.at("residual"));
  s.iterations = doc.at("iterations").get<long>();
  s.decay_rate_phi = json_number(doc.at("decay_rate_phi"));
  s.decay_rate_psi = json_number(doc.at("decay_rate_psi"));
  s.seed = doc.at("seed").get<std::uint64_t>();
  for (const auto& [key, value] : doc.items()) {
    if (key == "m_lambda" || key == "kappa" || key == "residual" || key == "iterations" ||
        key == "decay_rate_phi" || key == "decay_rate_psi" || key == "seed") {
      continue;
    }
    s.extra.emplace_back(key, json_number(value));
  }
  return s;
}

void write_report(const std::filesystem::path& path,
                  const std::vector<std::pair<std::string, double>>& entries) {
  ordered_json doc = ordered_json::object();
  for (const auto& [key, value] : entries) doc[key] = value;
  auto out = open_out(path);
  out << doc.dump(2) << '\n';
}

}  // namespace shg::io
