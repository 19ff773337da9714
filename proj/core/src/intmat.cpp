#include "chroma/intmat.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace chroma {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    a_.assign(std::size_t(rows_) * cols_, BigInt(0));
}

namespace {

BigInt abs_val(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

} // namespace

SnfResult smith_normal_form(IntMatrix m) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<BigInt> diag;

    int top = 0;
    while (top < rows && top < cols) {
        // Smallest nonzero entry in the remaining block becomes the pivot;
        // small pivots keep the Euclidean steps short.
        int pr = -1, pc = -1;
        BigInt best;
        for (int r = top; r < rows; ++r)
            for (int c = top; c < cols; ++c) {
                const BigInt& x = m.at(r, c);
                if (x == 0) continue;
                BigInt ax = abs_val(x);
                if (pr < 0 || ax < best) {
                    best = std::move(ax);
                    pr = r;
                    pc = c;
                }
            }
        if (pr < 0) break;  // block is zero

        if (pr != top)
            for (int c = top; c < cols; ++c) std::swap(m.at(pr, c), m.at(top, c));
        if (pc != top)
            for (int r = top; r < rows; ++r) std::swap(m.at(r, pc), m.at(r, top));

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int r = top + 1; r < rows; ++r) {
                if (m.at(r, top) == 0) continue;
                BigInt q = m.at(r, top) / m.at(top, top);
                for (int c = top; c < cols; ++c) m.at(r, c) -= q * m.at(top, c);
                if (m.at(r, top) != 0) {
                    // remainder is smaller than the pivot: swap up and restart
                    for (int c = top; c < cols; ++c) std::swap(m.at(r, c), m.at(top, c));
                    clean = false;
                }
            }
            for (int c = top + 1; c < cols; ++c) {
                if (m.at(top, c) == 0) continue;
                BigInt q = m.at(top, c) / m.at(top, top);
                for (int r = top; r < rows; ++r) m.at(r, c) -= q * m.at(r, top);
                if (m.at(top, c) != 0) {
                    for (int r = top; r < rows; ++r) std::swap(m.at(r, c), m.at(r, top));
                    clean = false;
                }
            }
        }

        // Pivot must divide every remaining entry; fold a violator into the
        // pivot column and repeat the elimination.
        bool divides_all = true;
        for (int r = top + 1; r < rows && divides_all; ++r)
            for (int c = top + 1; c < cols; ++c)
                if (m.at(r, c) % m.at(top, top) != 0) {
                    for (int cc = top; cc < cols; ++cc) m.at(top, cc) += m.at(r, cc);
                    divides_all = false;
                    break;
                }
        if (!divides_all) continue;

        BigInt d = abs_val(m.at(top, top));
        diag.push_back(std::move(d));
        ++top;
    }

    SnfResult out;
    out.rank = int(diag.size());
    out.invariant_factors = std::move(diag);
    return out;
}

} // namespace chroma
