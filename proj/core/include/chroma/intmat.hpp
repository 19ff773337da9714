#ifndef CHROMA_INTMAT_HPP
#define CHROMA_INTMAT_HPP

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace chroma {

using BigInt = boost::multiprecision::cpp_int;

// Dense arbitrary-precision integer matrix; big enough for desk-scale
// boundary matrices, exact by construction.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const BigInt& at(int r, int c) const { return a_[std::size_t(r) * cols_ + c]; }
    BigInt& at(int r, int c) { return a_[std::size_t(r) * cols_ + c]; }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<BigInt> a_;
};

struct SnfResult {
    std::vector<BigInt> invariant_factors;  // d_1 | d_2 | ..., all >= 1
    int rank = 0;                           // number of invariant factors
};

// Smith normal form by exact elimination; transforms are not returned.
SnfResult smith_normal_form(IntMatrix m);

} // namespace chroma

#endif
