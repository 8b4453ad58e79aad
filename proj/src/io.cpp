#include "hvmag/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hvmag {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

double parse_field(const std::string& field, const std::string& path, std::size_t line_no) {
    const std::string t = trim(field);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc() || ptr != t.data() + t.size())
        throw Error(path + ":" + std::to_string(line_no) + ": cannot parse field '" + t + "'");
    return value;
}

}  // namespace

ApproximationSet read_points_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open point file: " + path);
    std::vector<ObjectiveVector> points;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        ObjectiveVector p;
        std::stringstream ss(t);
        std::string field;
        while (std::getline(ss, field, ',')) p.push_back(parse_field(field, path, line_no));
        if (!points.empty() && p.size() != points.front().size())
            throw Error(path + ":" + std::to_string(line_no) + ": inconsistent dimension");
        points.push_back(std::move(p));
    }
    if (points.empty()) throw Error(path + ": no points found");
    const std::size_t dimension = points.front().size();
    return ApproximationSet(dimension, std::move(points));
}

void write_points_csv(const std::string& path, const ApproximationSet& set,
                      const std::string& comment) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open output file: " + path);
    if (!comment.empty()) out << "# " << comment << "\n";
    for (const auto& p : set.points()) {
        for (std::size_t c = 0; c < p.size(); ++c) {
            if (c) out << ",";
            out << format_sig12(p[c]);
        }
        out << "\n";
    }
}

void write_trajectory_csv(const std::string& path, const ProblemHandle& problem,
                          const AscentTrajectory& trajectory) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open output file: " + path);
    out << "# iter,member_index";
    for (std::size_t c = 0; c < problem.decision_dim; ++c) out << ",z" << (c + 1);
    for (std::size_t c = 0; c < problem.objective_dim; ++c) out << ",f" << (c + 1);
    out << ",indicator_value\n";
    ObjectiveVector f;
    Matrix jac;
    auto write_iterate = [&](const AscentIterate& it) {
        for (std::size_t i = 0; i < it.population.size(); ++i) {
            problem.evaluate(it.population[i], f, jac);
            out << it.iter << "," << i;
            for (double z : it.population[i]) out << "," << format_sig12(z);
            for (double v : f) out << "," << format_sig12(v);
            out << "," << format_sig12(it.value) << "\n";
        }
    };
    for (const auto& it : trajectory.iterations) write_iterate(it);
    write_iterate(trajectory.terminal);
}

std::string format_fixed12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12f", x);
    return buf;
}

std::string format_sig12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

}  // namespace hvmag
