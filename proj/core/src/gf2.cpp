#include "chroma/gf2.hpp"

#include <stdexcept>

namespace chroma {

Gf2Matrix::Gf2Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    r_.assign(rows_, BitRow(cols_));
}

long long Gf2Matrix::column_weight(int c) const {
    long long w = 0;
    for (int r = 0; r < rows_; ++r)
        if (r_[r].test(c)) ++w;
    return w;
}

Gf2RankAccumulator::Gf2RankAccumulator(int cols)
    : cols_(cols), pivot_of_col_(cols, -1) {}

bool Gf2RankAccumulator::add_row(BitRow row) {
    int lead = row.find_first();
    while (lead >= 0) {
        int p = pivot_of_col_[lead];
        if (p < 0) {
            pivot_of_col_[lead] = int(basis_.size());
            basis_.push_back(std::move(row));
            return true;
        }
        row ^= basis_[p];
        lead = row.find_next(lead);
    }
    return false;
}

int rank_gf2(const Gf2Matrix& m) {
    Gf2RankAccumulator acc(m.cols());
    for (int r = 0; r < m.rows(); ++r) acc.add_row(m.row(r));
    return acc.rank();
}

} // namespace chroma
