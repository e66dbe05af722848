#pragma once

#include <string>
#include <vector>

#include "syzrank/point.hpp"
#include "syzrank/polynomial.hpp"
#include "syzrank/report.hpp"

namespace syzrank {

struct JobConfig {
    std::string ambient;  // "pn:<n>" or "toric:<file>"
    std::string poly;
    std::vector<std::string> vars;
    std::vector<std::string> points;
    std::string field = "q";      // "q" or "fp:<prime>"
    std::string format = "text";  // "text" or "machine"
    bool refine_isolated = false;
    bool run_oracles = false;
    bool global_check = false;
    bool find_singular = false;
    unsigned long root_height_cap = 1000000;
};

struct RunOutcome {
    int exit_code = 0;  // 0 ok, 2 input error, 3 internal inconsistency
    std::string output;
    std::string error;
};

struct SingularSearch {
    std::vector<Point<RationalField>> points;
    bool complete = true;
    bool positive_dimensional = false;
};

// Rational points of the projectivized singular locus when it is finite,
// one canonical representative per point (leading coordinate 1).
SingularSearch find_rational_singular_points(const Polynomial<RationalField>& f,
                                             unsigned long height_cap = 1000000);

RunOutcome run_job(const JobConfig& cfg);

}  // namespace syzrank
