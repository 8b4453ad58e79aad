#ifndef HVMAG_IO_HPP
#define HVMAG_IO_HPP

#include <string>

#include "hvmag/optimizer.hpp"
#include "hvmag/problems.hpp"
#include "hvmag/types.hpp"

namespace hvmag {

/// Reads a point-set CSV: one point per line, comma-separated decimal
/// fields, lines beginning with '#' are comments.
ApproximationSet read_points_csv(const std::string& path);

void write_points_csv(const std::string& path, const ApproximationSet& set,
                      const std::string& comment = "");

/// Trajectory CSV with columns iter, member_index, decision coordinates,
/// objective coordinates, indicator_value.
void write_trajectory_csv(const std::string& path, const ProblemHandle& problem,
                          const AscentTrajectory& trajectory);

/// Fixed 12-decimal formatting used for printed indicator values.
std::string format_fixed12(double x);

/// 12-significant-digit formatting used in CSV exports.
std::string format_sig12(double x);

}  // namespace hvmag

#endif  // HVMAG_IO_HPP
