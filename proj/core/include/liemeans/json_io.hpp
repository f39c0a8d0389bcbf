// liemeans: means and covariances on matrix Lie groups
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "liemeans/covariance.hpp"
#include "liemeans/distributions.hpp"
#include "liemeans/means.hpp"
#include "liemeans/metric.hpp"

namespace liemeans {

/// File formats (all JSON):
///   group spec     {"name", "m", "n", "basis": [row-major matrices], "C": nested n*n*n}
///   metric         {"group": name, "W": [[...]]}
///   samples        {"group": name, "samples": [{"matrix": [[...]], "weight": w?} |
///                   {"R": [[...]], "t": [...]} | {"q": [w,x,y,z]} , ...]}
///   element        {"matrix": [[...]]} or {"R","t"} or {"q"}
/// Parse failures raise ParseError with file/field context.
class ParseError : public Error {
 public:
  using Error::Error;
};

GroupSpec load_group_spec(const std::string& path);
void save_group_spec(const GroupSpec& spec, const std::string& path);
std::string group_spec_to_json_string(const GroupSpec& spec);
GroupSpec group_spec_from_json_string(const std::string& text);

/// Resolves a --group argument: a built-in name (SO2, SO3, SE2, SE3, AFF1)
/// or a path to a group-spec JSON file.
GroupSpec group_from_name_or_file(const std::string& name_or_path);

InnerProduct load_metric(const std::string& path, const GroupSpec& expected_group);
void save_metric(const InnerProduct& ip, const std::string& path);

EmpiricalDistribution load_samples(const std::string& path, const GroupSpec& spec);
void save_samples(const EmpiricalDistribution& d, const std::string& path);

GroupElement load_element(const std::string& path, const GroupSpec& spec);
GroupElement element_from_json_string(const std::string& text, const GroupSpec& spec);
void save_element(const GroupElement& g, const std::string& path);

std::string mean_report_to_json_string(const MeanReport& report);
std::string euclidean_mean_to_json_string(const Matrix& mean);
std::string cov_report_to_json_string(const CovReport& report);
std::string trajectory_to_json_string(const Trajectory& traj);

/// Matrix helpers shared by the CLI.
std::string matrix_to_json_string(const Matrix& m);
Matrix load_matrix(const std::string& path, const std::string& field);

}  // namespace liemeans
