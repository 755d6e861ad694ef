#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cofix/report.hpp"

namespace cofix {

struct SolveFlags {
    std::string theorem = "t33";  // t33 | t35
    std::optional<std::string> x0;
    std::optional<int> max_iter;
    std::optional<double> tol;
    bool no_verify = false;
    bool from_hasse = false;
};

struct FuzzFlags {
    std::string theorem = "t33";  // t33 | t35 | t43 | t45
    int trials = 1000;
    std::uint64_t seed = 0;
    int n = 8;
    std::string density = "1/3";
    bool necessity = false;  // report the hand-built hypothesis-necessity probe
};

struct DemoFlags {
    std::optional<std::string> x0;
    std::optional<int> max_iter;
    std::optional<double> tol;
    std::optional<int> grid;
};

Report cmd_validate(const std::string& path, bool from_hasse);
Report cmd_check(const std::string& path, bool from_hasse);
Report cmd_solve(const std::string& path, const SolveFlags& flags);
Report cmd_certify(const std::string& path, const std::string& mode, const SolveFlags& flags);
Report cmd_oracle(const std::string& path, bool from_hasse);
Report cmd_fuzz(const FuzzFlags& flags);
Report cmd_demo(const std::string& name, const DemoFlags& flags);

}  // namespace cofix
