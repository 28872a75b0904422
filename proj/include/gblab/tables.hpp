#ifndef GBLAB_TABLES_HPP
#define GBLAB_TABLES_HPP

#include <string>
#include <vector>

namespace gblab {

// The two survey tables of bound values: all-quadratic systems (table 1)
// and n cubics followed by quadratics (table 2), for n in {9, 10} and
// n+1 <= m <= 2n.
struct TableSpec {
    int which = 1; // 1 or 2
    int n = 9;
    int mLo = 0, mHi = 0; // defaults n+1 .. 2n when 0

    std::vector<int> degreeProfile(int m) const;
};

// One CSV block: an m header row, then one row per bound
// (lazard, thm12, dnew, D, 2D-1).
std::string reproduceTable(const TableSpec& spec);

// All four blocks (both tables, n = 9 and 10), separated by blank lines.
std::string reproduceAllTables();

} // namespace gblab

#endif
