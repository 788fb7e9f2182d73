#pragma once

#include "qsteen/manifolds.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace qsteen {

// Sectioned key-value manifold description. Sections:
//   [manifold]   name = ..., top_degree = ..., min_chern = ...
//   [generators] <name> = <degree>
//   [relations]  one polynomial per line
//   [h2]         <label>: c1 = <int>, <gen> = <0|1>, ...
//   [quantum]    <mono> * <mono> -> <mono or 0> @ <label> <k>
struct ManifoldSpec {
    std::string name;
    std::vector<std::pair<std::string, int>> generators;
    std::vector<std::string> relations;
    int top_degree = 0;
    int min_chern = 0;
    struct Curve {
        std::string label;
        int c1 = 0;
        std::vector<std::pair<std::string, int>> intersections;
        bool operator==(const Curve&) const = default;
    };
    std::vector<Curve> curve_classes;
    struct Constant {
        std::string a, b, out, curve;
        int k = 0;
        bool operator==(const Constant&) const = default;
    };
    std::vector<Constant> constants;

    bool operator==(const ManifoldSpec&) const = default;
};

class SpecError : public std::runtime_error {
public:
    SpecError(int line, int col, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " +
                             msg),
          line(line),
          col(col) {}
    int line, col;
};

ManifoldSpec parse_spec(const std::string& text);  // throws SpecError
std::string render_spec(const ManifoldSpec& spec);

// Builds the ring (and quantum structure when present) and runs the full
// validation. Throws SpecError / std::invalid_argument on failure.
Manifold to_manifold(const ManifoldSpec& spec);

}  // namespace qsteen
