#ifndef GBLAB_MATRIX_HPP
#define GBLAB_MATRIX_HPP

#include <cstdint>
#include <vector>

#include "gblab/fp.hpp"

namespace gblab {

// Dense row-major matrix over F_q.
class FqMatrix {
public:
    FqMatrix(std::size_t rows, std::size_t cols, std::uint32_t q)
        : rows_(rows), cols_(cols), q_(q), a_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t modulus() const { return q_; }

    std::uint32_t& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    std::uint32_t at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    std::uint32_t* row(std::size_t i) { return a_.data() + i * cols_; }
    const std::uint32_t* row(std::size_t i) const { return a_.data() + i * cols_; }

    void appendRow(const std::vector<std::uint32_t>& r);
    void swapRows(std::size_t i, std::size_t j);

private:
    std::size_t rows_, cols_;
    std::uint32_t q_;
    std::vector<std::uint32_t> a_;
};

struct RrefSummary {
    std::vector<std::size_t> pivotCols; // ascending
    std::size_t rank = 0;
    std::uint64_t rowOps = 0; // row-update count, for telemetry
};

// In-place reduced row echelon form: pivots scanned per column left to
// right, first nonzero row from the top; pivot rows end up sorted by pivot
// column, zero rows at the bottom.
RrefSummary rrefInPlace(FqMatrix& m);

// RREF for tall matrices via repeated 2l-row sweeps (l = column count):
// reduce 2l rows, keep the nonzero survivors, pull in the next rows.
// Dispatches to the plain elimination unless rows > 4 * cols. Returns the
// compacted matrix holding exactly the nonzero rows of the RREF.
FqMatrix rref(const FqMatrix& m, RrefSummary& summary);

std::size_t rank(const FqMatrix& m);

// Incremental row-space builder that keeps its rows in reduced echelon
// form; insertion order does not affect the final reduced rows.
class RrefAccumulator {
public:
    RrefAccumulator(std::size_t cols, std::uint32_t q) : cols_(cols), field_(q) {}

    // Reduces r against the current rows; if independent, inserts the
    // normalized row (updating earlier rows) and returns true.
    bool addRow(std::vector<std::uint32_t> r);

    // Reduction only: the residue of r modulo the current row space.
    std::vector<std::uint32_t> reduce(std::vector<std::uint32_t> r) const;

    bool inRowSpace(const std::vector<std::uint32_t>& r) const;

    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const std::vector<std::vector<std::uint32_t>>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivotCols() const { return pivots_; }

private:
    std::size_t cols_;
    PrimeField field_;
    std::vector<std::vector<std::uint32_t>> rows_; // sorted by pivot column
    std::vector<std::size_t> pivots_;
};

} // namespace gblab

#endif
