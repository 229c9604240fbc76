#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "fsr/rational.hpp"

namespace fsr::lp {

enum class Status { optimal, infeasible, unbounded };

struct Result {
    Status status = Status::infeasible;
    RationalValue value;                 // meaningful when optimal
    std::vector<RationalValue> solution; // one entry per variable when optimal
};

// Dense problem: maximize c.x subject to A x <= b, x >= 0.
struct Problem {
    std::vector<std::vector<mpq_class>> a;
    std::vector<mpq_class> b;
    std::vector<mpq_class> c;
};

// Exact two-phase primal simplex with Bland's rule; no tolerances.
Result maximize(const Problem& problem);

} // namespace fsr::lp
