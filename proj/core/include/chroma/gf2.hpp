#ifndef CHROMA_GF2_HPP
#define CHROMA_GF2_HPP

#include <vector>

#include "chroma/bitrow.hpp"

namespace chroma {

// Dense bit-packed matrix over the two-element field.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const { return r_[r].test(c); }
    void set(int r, int c) { r_[r].set(c); }
    const BitRow& row(int r) const { return r_[r]; }
    BitRow& row(int r) { return r_[r]; }

    long long column_weight(int c) const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<BitRow> r_;
};

// Streaming row-reduction: feed rows one at a time, keep only the pivot
// basis. Lets us rank boundary matrices whose row side is far too large to
// materialize.
class Gf2RankAccumulator {
public:
    explicit Gf2RankAccumulator(int cols);

    // Returns true when the row enlarged the basis.
    bool add_row(BitRow row);
    int rank() const { return int(basis_.size()); }
    int cols() const { return cols_; }

private:
    int cols_ = 0;
    std::vector<int> pivot_of_col_;  // -1 when the column has no pivot yet
    std::vector<BitRow> basis_;
};

// Rank by row reduction on bit rows.
int rank_gf2(const Gf2Matrix& m);

} // namespace chroma

#endif
