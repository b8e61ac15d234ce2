#include "specband/io.hpp"

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "specband/errors.hpp"

namespace specband::io {

namespace {

using nlohmann::json;

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
  return j;
}

void write_json(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  out << j.dump(2) << "\n";
}

void check_version(const json& j, const std::string& path) {
  if (!j.contains("format_version") || j["format_version"] != kFormatVersion)
    throw FormatError(path + ": unsupported format_version");
}

}  // namespace

BandMatrix load_matrix(const std::string& path) {
  const json j = read_json(path);
  check_version(j, path);
  const int n = j.at("n").get<int>();
  const int N = j.at("N").get<int>();
  std::vector<std::vector<double>> diagonals(n + 1);
  const auto& d = j.at("diagonals");
  for (int i = 0; i <= n; ++i) {
    const std::string key = std::to_string(i);
    if (!d.contains(key))
      throw FormatError(path + ": missing diagonal \"" + key + "\"");
    diagonals[i] = d.at(key).get<std::vector<double>>();
  }
  BandMatrix a(n, N, std::move(diagonals));
  const DegenerationProfile profile = validate(a);
  if (j.contains("degenerations")) {
    const auto recorded = j.at("degenerations").get<std::vector<int>>();
    if (recorded != profile.m)
      throw FormatError(path +
                        ": recorded degeneration indices disagree with the "
                        "diagonal pattern");
  }
  return a;
}

void save_matrix(const BandMatrix& a, const DegenerationProfile& profile,
                 const std::string& path) {
  json j;
  j["format_version"] = kFormatVersion;
  j["n"] = a.half_width();
  j["N"] = a.size();
  j["degenerations"] = profile.m;
  json d = json::object();
  for (int i = 0; i <= a.half_width(); ++i)
    d[std::to_string(i)] = a.diagonal(i);
  j["diagonals"] = std::move(d);
  write_json(j, path);
}

InitialConditions load_initial_conditions(const std::string& path) {
  const json j = read_json(path);
  check_version(j, path);
  const int n = j.at("n").get<int>();
  const auto rows = j.at("rows").get<std::vector<double>>();
  if (rows.size() != static_cast<size_t>(n) * n)
    throw FormatError(path + ": rows must hold n*n values");
  try {
    return InitialConditions(n, rows);
  } catch (const Error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void save_initial_conditions(const InitialConditions& t,
                             const std::string& path) {
  json j;
  j["format_version"] = kFormatVersion;
  j["n"] = t.dim();
  j["rows"] = t.data();
  write_json(j, path);
}

MatrixMeasure load_measure(const std::string& path) {
  const json j = read_json(path);
  check_version(j, path);
  const int n = j.at("n").get<int>();
  std::vector<Atom> atoms;
  for (const auto& a : j.at("atoms")) {
    Atom atom;
    atom.x = a.at("x").get<double>();
    atom.weight = a.at("weight").get<std::vector<double>>();
    atoms.push_back(std::move(atom));
  }
  try {
    return MatrixMeasure(n, std::move(atoms));
  } catch (const Error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void save_measure(const MatrixMeasure& sigma, const std::string& path) {
  json j;
  j["format_version"] = kFormatVersion;
  j["n"] = sigma.dim();
  json atoms = json::array();
  for (const auto& a : sigma.atoms()) {
    json e;
    e["x"] = a.x;
    e["weight"] = a.weight;
    atoms.push_back(std::move(e));
  }
  j["atoms"] = std::move(atoms);
  write_json(j, path);
}

void export_step_function_csv(const MatrixMeasure& sigma,
                              const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  const int n = sigma.dim();
  out << "t";
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      out << ",sigma[" << i + 1 << "][" << j + 1 << "]";
  out << "\n";
  std::vector<double> cum(static_cast<size_t>(n) * n, 0.0);
  char buf[32];
  for (const auto& a : sigma.atoms()) {
    for (size_t ij = 0; ij < cum.size(); ++ij) cum[ij] += a.weight[ij];
    std::snprintf(buf, sizeof buf, "%.17g", a.x);
    out << buf;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        std::snprintf(buf, sizeof buf, "%.17g", cum[i * n + j]);
        out << "," << buf;
      }
    out << "\n";
  }
}

}  // namespace specband::io
