// liemeans: means and covariances on matrix Lie groups
// SPDX-License-Identifier: Apache-2.0

#include "liemeans/json_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "liemeans/groups.hpp"

namespace liemeans {

namespace {

using nlohmann::json;

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ParseError("JSON parse error in " + path + ": " + e.what());
  }
  return j;
}

void write_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open file for writing: " + path);
  out << j.dump(2) << "\n";
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) {
    throw ParseError("field '" + field + "': expected a nested array (matrix rows)");
  }
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (static_cast<Eigen::Index>(j[static_cast<std::size_t>(i)].size()) != cols) {
      throw ParseError("field '" + field + "': ragged matrix rows");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      const auto& cell = j[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
      if (!cell.is_number()) {
        std::ostringstream os;
        os << "field '" << field << "': row " << i << ", col " << c
           << " is not a number";
        throw ParseError(os.str());
      }
      m(i, c) = cell.get<double>();
    }
  }
  return m;
}

Vector vector_from_json(const json& j, const std::string& field) {
  if (!j.is_array()) throw ParseError("field '" + field + "': expected an array");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) {
      throw ParseError("field '" + field + "': entry is not a number");
    }
    v[static_cast<Eigen::Index>(i)] = j[i].get<double>();
  }
  return v;
}

GroupElement element_from_json(const json& j, const GroupSpec& spec,
                               const std::string& context) {
  if (j.contains("matrix")) {
    return make_element(spec, matrix_from_json(j["matrix"], context + ".matrix"));
  }
  if (j.contains("R") && j.contains("t")) {
    const Matrix r = matrix_from_json(j["R"], context + ".R");
    const Vector t = vector_from_json(j["t"], context + ".t");
    if (spec.family() != GroupFamily::SpecialEuclidean) {
      throw ParseError(context + ": pose form {R, t} requires an SE(d) group");
    }
    return make_element(spec, homogeneous_from_parts(r, t));
  }
  if (j.contains("q")) {
    if (spec.name() != "SO3") {
      throw ParseError(context + ": quaternion form requires group SO3");
    }
    const Vector q = vector_from_json(j["q"], context + ".q");
    if (q.size() != 4) throw ParseError(context + ".q: expected 4 entries (w,x,y,z)");
    return quat_to_so3(spec, quat_normalize(Eigen::Vector4d(q[0], q[1], q[2], q[3])));
  }
  throw ParseError(context + ": expected one of 'matrix', {'R','t'} or 'q'");
}

json element_to_json(const GroupElement& g) {
  json j;
  j["matrix"] = matrix_to_json(g.mat);
  return j;
}

}  // namespace

std::string matrix_to_json_string(const Matrix& m) { return matrix_to_json(m).dump(2); }

Matrix load_matrix(const std::string& path, const std::string& field) {
  const json j = parse_file(path);
  if (!j.contains(field)) throw ParseError(path + ": missing field '" + field + "'");
  return matrix_from_json(j[field], field);
}

GroupSpec group_spec_from_json_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("JSON parse error: ") + e.what());
  }
  for (const char* key : {"name", "m", "n", "basis"}) {
    if (!j.contains(key)) throw ParseError(std::string("group spec: missing field '") + key + "'");
  }
  const std::string name = j["name"].get<std::string>();
  const int m = j["m"].get<int>();
  const int n = j["n"].get<int>();
  std::vector<Matrix> basis;
  basis.reserve(static_cast<std::size_t>(n));
  for (const auto& b : j["basis"]) basis.push_back(matrix_from_json(b, "basis"));

  StructureConstants c;
  if (j.contains("C")) {
    const auto& cj = j["C"];
    std::vector<double> flat;
    flat.reserve(static_cast<std::size_t>(n) * n * n);
    if (static_cast<int>(cj.size()) != n) throw ParseError("group spec: C has wrong outer size");
    for (const auto& plane : cj) {
      if (static_cast<int>(plane.size()) != n) throw ParseError("group spec: C has wrong middle size");
      for (const auto& row : plane) {
        if (static_cast<int>(row.size()) != n) throw ParseError("group spec: C has wrong inner size");
        for (const auto& v : row) flat.push_back(v.get<double>());
      }
    }
    c = StructureConstants(n, std::move(flat));
  }

  // Rewire closed forms when this is a built-in saved to disk: the maps act
  // on raw matrices, so they stay valid as long as name and sizes agree.
  for (const std::string& builtin : builtin_group_names()) {
    if (name == builtin) {
      const GroupSpec ref = make_group(builtin);
      if (ref.ambient_dim() == m && ref.algebra_dim() == n) {
        return GroupSpec::make(name, m, n, std::move(basis), std::move(c),
                               ref.closed_forms(), ref.family(), ref.spatial_dim());
      }
    }
  }
  return GroupSpec::make(name, m, n, std::move(basis), std::move(c));
}

std::string group_spec_to_json_string(const GroupSpec& spec) {
  json j;
  j["name"] = spec.name();
  j["m"] = spec.ambient_dim();
  j["n"] = spec.algebra_dim();
  json basis = json::array();
  for (int i = 0; i < spec.algebra_dim(); ++i) basis.push_back(matrix_to_json(spec.basis(i)));
  j["basis"] = std::move(basis);
  const int n = spec.algebra_dim();
  const StructureConstants& c = spec.structure_constants();
  json cj = json::array();
  for (int i = 0; i < n; ++i) {
    json plane = json::array();
    for (int jj = 0; jj < n; ++jj) {
      json row = json::array();
      for (int k = 0; k < n; ++k) row.push_back(c(i, jj, k));
      plane.push_back(std::move(row));
    }
    cj.push_back(std::move(plane));
  }
  j["C"] = std::move(cj);
  return j.dump(2);
}

GroupSpec load_group_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return group_spec_from_json_string(buffer.str());
}

void save_group_spec(const GroupSpec& spec, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open file for writing: " + path);
  out << group_spec_to_json_string(spec) << "\n";
}

GroupSpec group_from_name_or_file(const std::string& name_or_path) {
  for (const std::string& builtin : builtin_group_names()) {
    if (name_or_path == builtin) return make_group(builtin);
  }
  std::ifstream probe(name_or_path);
  if (probe) return load_group_spec(name_or_path);
  throw ParseError("unknown group '" + name_or_path +
                   "': not a built-in name and not a readable file");
}

InnerProduct load_metric(const std::string& path, const GroupSpec& expected_group) {
  const json j = parse_file(path);
  if (!j.contains("W")) throw ParseError(path + ": missing field 'W'");
  if (j.contains("group")) {
    const std::string name = j["group"].get<std::string>();
    if (name != expected_group.name()) {
      throw ParseError(path + ": metric is declared for group '" + name +
                       "', expected '" + expected_group.name() + "'");
    }
  }
  return InnerProduct::make(expected_group, matrix_from_json(j["W"], "W"));
}

void save_metric(const InnerProduct& ip, const std::string& path) {
  json j;
  j["group"] = ip.group().name();
  j["W"] = matrix_to_json(ip.w());
  write_file(path, j);
}

EmpiricalDistribution load_samples(const std::string& path, const GroupSpec& spec) {
  const json j = parse_file(path);
  if (!j.contains("samples") || !j["samples"].is_array() || j["samples"].empty()) {
    throw ParseError(path + ": missing or empty 'samples' array");
  }
  if (j.contains("group")) {
    const std::string name = j["group"].get<std::string>();
    if (name != spec.name()) {
      throw ParseError(path + ": samples declared for group '" + name +
                       "', expected '" + spec.name() + "'");
    }
  }
  std::vector<GroupElement> samples;
  std::vector<double> weights;
  bool any_weight = false;
  std::size_t idx = 0;
  for (const auto& s : j["samples"]) {
    std::ostringstream ctx;
    ctx << path << ": samples[" << idx << "]";
    samples.push_back(element_from_json(s, spec, ctx.str()));
    if (s.contains("weight")) {
      any_weight = true;
      weights.push_back(s["weight"].get<double>());
    } else {
      weights.push_back(1.0);
    }
    ++idx;
  }
  if (!any_weight) weights.clear();
  return make_empirical(spec, std::move(samples), std::move(weights));
}

void save_samples(const EmpiricalDistribution& d, const std::string& path) {
  json j;
  j["group"] = d.group.name();
  json arr = json::array();
  for (std::size_t i = 0; i < d.size(); ++i) {
    json s = element_to_json(d.samples[i]);
    s["weight"] = d.weights[i];
    arr.push_back(std::move(s));
  }
  j["samples"] = std::move(arr);
  write_file(path, j);
}

GroupElement load_element(const std::string& path, const GroupSpec& spec) {
  return element_from_json(parse_file(path), spec, path);
}

GroupElement element_from_json_string(const std::string& text, const GroupSpec& spec) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("element JSON parse error: ") + e.what());
  }
  return element_from_json(j, spec, "element");
}

void save_element(const GroupElement& g, const std::string& path) {
  write_file(path, element_to_json(g));
}

std::string mean_report_to_json_string(const MeanReport& report) {
  json j;
  j["method"] = report.method;
  j["mean"] = element_to_json(report.mean);
  j["iterations"] = report.iterations;
  j["residual"] = report.residual;
  if (report.cost) j["cost"] = *report.cost;
  j["converged"] = report.converged;
  json diag = json::object();
  for (const auto& [key, value] : report.diagnostics) diag[key] = value;
  j["diagnostics"] = std::move(diag);
  return j.dump(2);
}

std::string euclidean_mean_to_json_string(const Matrix& mean) {
  json j;
  j["method"] = "euclidean";
  j["mean"] = {{"matrix", matrix_to_json(mean)}};
  j["on_group"] = false;
  j["converged"] = true;
  j["iterations"] = 0;
  j["residual"] = 0.0;
  return j.dump(2);
}

std::string cov_report_to_json_string(const CovReport& report) {
  json j;
  j["kind"] = to_string(report.kind);
  j["anchor"] = {{"matrix", matrix_to_json(report.anchor.mat)}};
  j["matrix"] = matrix_to_json(report.matrix);
  j["variance"] = report.variance;
  return j.dump(2);
}

std::string trajectory_to_json_string(const Trajectory& traj) {
  json arr = json::array();
  for (std::size_t k = 0; k < traj.t.size(); ++k) {
    json entry;
    entry["t"] = traj.t[k];
    entry["matrix"] = matrix_to_json(traj.points[k].mat);
    json xi = json::array();
    for (Eigen::Index i = 0; i < traj.velocities[k].coords.size(); ++i) {
      xi.push_back(traj.velocities[k].coords[i]);
    }
    entry["xi"] = std::move(xi);
    arr.push_back(std::move(entry));
  }
  json j;
  j["trajectory"] = std::move(arr);
  return j.dump(2);
}

}  // namespace liemeans
