#include "gblab/tables.hpp"

#include "gblab/bounds.hpp"

#include <stdexcept>

namespace gblab {

std::vector<int> TableSpec::degreeProfile(int m) const {
    if (which == 1) return std::vector<int>(static_cast<std::size_t>(m), 2);
    if (which == 2) {
        std::vector<int> d(static_cast<std::size_t>(n), 3);
        d.resize(static_cast<std::size_t>(m), 2);
        return d;
    }
    throw std::invalid_argument("table must be 1 or 2");
}

std::string reproduceTable(const TableSpec& spec) {
    const int lo = spec.mLo > 0 ? spec.mLo : spec.n + 1;
    const int hi = spec.mHi > 0 ? spec.mHi : 2 * spec.n;
    std::string header = "m";
    std::string rows[5] = {"lazard", "thm12", "dnew", "D", "2D-1"};
    for (int m = lo; m <= hi; ++m) {
        const BoundReport r = boundReport(spec.n, spec.degreeProfile(m));
        header += "," + std::to_string(m);
        rows[0] += "," + std::to_string(r.lazard);
        rows[1] += "," + std::to_string(r.thm12Main);
        rows[2] += "," + std::to_string(r.dNew);
        rows[3] += "," + std::to_string(r.dRegFormula);
        rows[4] += "," + std::to_string(r.tentiMinus1);
    }
    std::string out = "# table" + std::to_string(spec.which) + " n=" + std::to_string(spec.n) +
                      (spec.which == 1 ? " degrees=2,...,2" : " degrees=3^n,2,...,2") + "\n";
    out += header + "\n";
    for (const auto& row : rows) out += row + "\n";
    return out;
}

std::string reproduceAllTables() {
    std::string out;
    for (int which : {1, 2})
        for (int n : {9, 10}) {
            out += reproduceTable(TableSpec{which, n, 0, 0});
            out += "\n";
        }
    return out;
}

} // namespace gblab
