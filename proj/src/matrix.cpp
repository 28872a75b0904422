#include "gblab/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace gblab {

void FqMatrix::appendRow(const std::vector<std::uint32_t>& r) {
    if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
    a_.insert(a_.end(), r.begin(), r.end());
    ++rows_;
}

void FqMatrix::swapRows(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap_ranges(row(i), row(i) + cols_, row(j));
}

namespace {

// row_i -= c * row_p over F_q, on raw spans.
inline void axpyRow(std::uint32_t* ri, const std::uint32_t* rp, std::size_t cols,
                    std::uint32_t c, std::uint32_t q) {
    const std::uint64_t negc = q - c;
    for (std::size_t j = 0; j < cols; ++j)
        ri[j] = static_cast<std::uint32_t>((ri[j] + negc * rp[j]) % q);
}

inline void scaleRow(std::uint32_t* r, std::size_t cols, std::uint32_t c, std::uint32_t q) {
    for (std::size_t j = 0; j < cols; ++j)
        r[j] = static_cast<std::uint32_t>(std::uint64_t(r[j]) * c % q);
}

} // namespace

RrefSummary rrefInPlace(FqMatrix& m) {
    const std::uint32_t q = m.modulus();
    const PrimeField F(q);
    RrefSummary s;
    std::size_t next = 0;
    for (std::size_t col = 0; col < m.cols() && next < m.rows(); ++col) {
        std::size_t piv = next;
        while (piv < m.rows() && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        m.swapRows(next, piv);
        if (m.at(next, col) != 1) scaleRow(m.row(next), m.cols(), F.inv(m.at(next, col)), q);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == next) continue;
            std::uint32_t c = m.at(i, col);
            if (c) {
                axpyRow(m.row(i), m.row(next), m.cols(), c, q);
                ++s.rowOps;
            }
        }
        s.pivotCols.push_back(col);
        ++next;
    }
    s.rank = next;
    return s;
}

FqMatrix rref(const FqMatrix& m, RrefSummary& summary) {
    const std::size_t l = m.cols();
    if (l == 0 || m.rows() <= 4 * l) {
        FqMatrix work = m;
        summary = rrefInPlace(work);
        FqMatrix out(summary.rank, l, m.modulus());
        for (std::size_t i = 0; i < summary.rank; ++i)
            std::copy(work.row(i), work.row(i) + l, out.row(i));
        return out;
    }

    // Tall case: sweep batches of 2l rows, carrying the nonzero survivors.
    FqMatrix work(0, l, m.modulus());
    std::size_t consumed = 0;
    std::uint64_t ops = 0;
    RrefSummary sub;
    while (true) {
        std::vector<std::uint32_t> r(l);
        while (work.rows() < 2 * l && consumed < m.rows()) {
            std::copy(m.row(consumed), m.row(consumed) + l, r.begin());
            work.appendRow(r);
            ++consumed;
        }
        sub = rrefInPlace(work);
        ops += sub.rowOps;
        FqMatrix compact(sub.rank, l, m.modulus());
        for (std::size_t i = 0; i < sub.rank; ++i)
            std::copy(work.row(i), work.row(i) + l, compact.row(i));
        work = std::move(compact);
        if (consumed == m.rows()) break;
    }
    summary = sub;
    summary.rowOps = ops;
    return work;
}

std::size_t rank(const FqMatrix& m) {
    RrefSummary s;
    rref(m, s);
    return s.rank;
}

std::vector<std::uint32_t> RrefAccumulator::reduce(std::vector<std::uint32_t> r) const {
    const std::uint32_t q = field_.modulus();
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        std::uint32_t c = r[pivots_[k]];
        if (c) axpyRow(r.data(), rows_[k].data(), cols_, c, q);
    }
    return r;
}

bool RrefAccumulator::inRowSpace(const std::vector<std::uint32_t>& r) const {
    auto res = reduce(r);
    return std::all_of(res.begin(), res.end(), [](std::uint32_t v) { return v == 0; });
}

bool RrefAccumulator::addRow(std::vector<std::uint32_t> r) {
    const std::uint32_t q = field_.modulus();
    r = reduce(std::move(r));
    std::size_t piv = 0;
    while (piv < cols_ && r[piv] == 0) ++piv;
    if (piv == cols_) return false;
    scaleRow(r.data(), cols_, field_.inv(r[piv]), q);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        std::uint32_t c = rows_[k][piv];
        if (c) axpyRow(rows_[k].data(), r.data(), cols_, c, q);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
    std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, piv);
    rows_.insert(rows_.begin() + idx, std::move(r));
    return true;
}

} // namespace gblab
