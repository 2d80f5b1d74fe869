#ifndef QTHETA_TOOLS_RUN_HPP
#define QTHETA_TOOLS_RUN_HPP

#include <cmath>
#include <string>
#include <vector>

#include "qtheta/errors.hpp"

namespace qtheta::cli {

/// Invalid command-line configuration (unknown selector, missing or
/// malformed inputs). Maps to exit status 2.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

struct RunConfig {
    std::string command; // eval | verify | lseries | invariants | recognize

    // selectors
    std::string fn;    // eval target
    std::string suite; // verify suite

    // numeric parameters
    double z = 0.3, zi = 0.0;
    std::vector<double> omega{1.0, std::sqrt(2.0)};
    double s = 2.0, si = 0.0;
    double a1 = 2.6180339887498949, a2 = 0.38196601125010515;
    double x1 = 0.2, x2 = 0.2;
    int m = 1;
    int r = 1;
    double value = 0.0;
    int deg_bound = 4;
    long height_bound = 50;
    std::string g;
    std::string chi;

    // global knobs
    double tol = 1e-9;
    double contour_radius = 0.0;
    double tmax = 0.0;
    std::string class_data;
    std::string out;
    std::string format = "json";
};

struct RunResult {
    int exit_code = 0;   // 0 ok, 1 computation/check failure, 2 config error
    std::string output;  // serialized report (or error document)
};

RunResult run(const RunConfig& cfg);

} // namespace qtheta::cli

#endif
