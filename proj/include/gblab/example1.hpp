#ifndef GBLAB_EXAMPLE1_HPP
#define GBLAB_EXAMPLE1_HPP

#include <string>
#include <utility>
#include <vector>

#include "gblab/io.hpp"

namespace gblab {

struct FixtureVerdict {
    bool pass = true;
    std::vector<std::pair<std::string, bool>> checks;
    std::vector<std::string> diffs; // human-readable mismatch details

    void record(const std::string& name, bool ok, const std::string& detail = "");
};

// The quadratic F_73 reference system in three variables.
NamedSystem example1System(bool corruptCoefficient = false);

// Full-pipeline regression: the three reduced bases with their leading
// monomial sets, the Hilbert data, the degree-slice LM correspondence, the
// saturation exponent, and the run telemetry.
FixtureVerdict example1Fixture(bool corruptCoefficient = false);

} // namespace gblab

#endif
