#ifndef CHROMA_HOMOLOGY_HPP
#define CHROMA_HOMOLOGY_HPP

#include <string>
#include <vector>

#include "chroma/complex.hpp"
#include "chroma/gf2.hpp"
#include "chroma/intmat.hpp"
#include "chroma/limits.hpp"

namespace chroma {

enum class Coefficients { Gf2, Integer };

// Betti numbers per dimension up to computed_up_to. Dimensions above the
// bound are unknown, not zero; code downstream must never conflate the two.
struct BettiTable {
    Coefficients coeff = Coefficients::Gf2;
    bool reduced = false;
    int computed_up_to = -1;
    std::vector<long long> betti;                 // index = dimension
    std::vector<std::vector<long long>> torsion;  // integer coefficients only
    std::vector<long long> cell_counts;           // #cells per dimension (bookkeeping)

    long long euler_characteristic() const;
    std::string to_json() const;   // {"coeff","reduced","betti","torsion","computed_up_to"}
    std::string to_csv() const;
};

// Boundary matrix del_i: rows are the i-simplices, columns the (i-1)-simplices,
// entry 1 iff the column simplex is a facet of the row simplex. With the
// reduced flag, dimension -1 holds the single empty simplex, so del_0 is the
// all-ones column.
Gf2Matrix boundary_matrix_gf2(const SkeletonLevels& levels, int i, bool reduced);
Gf2Matrix boundary_matrix_gf2(const SimplicialComplex& k, int i, bool reduced,
                              const SizeLimits& limits = {});

// Signed integer boundary with the usual alternating signs.
IntMatrix boundary_matrix_int(const SkeletonLevels& levels, int i, bool reduced);

// beta_i = #S_i - rank del_i - rank del_{i+1} for i <= max_betti_dim.
BettiTable betti_gf2(const SimplicialComplex& k, int max_betti_dim, bool reduced,
                     const SizeLimits& limits = {});
BettiTable betti_gf2(const SkeletonLevels& levels, int max_betti_dim, bool reduced);

// Integer homology via Smith normal form: free ranks plus torsion lists.
BettiTable betti_integer(const SimplicialComplex& k, int max_betti_dim, bool reduced,
                         const SizeLimits& limits = {});
BettiTable betti_integer(const SkeletonLevels& levels, int max_betti_dim, bool reduced);

// Homology-level connectivity: the largest k with reduced beta_i = 0 for all
// i <= k. Distinguishes "exactly k", "at least the computed bound", and the
// empty complex (minus-infinity).
struct Connectivity {
    enum class Kind { MinusInfinity, Exact, AtLeast };
    Kind kind = Kind::Exact;
    int value = 0;

    std::string to_string() const;
    bool operator==(const Connectivity&) const = default;
};

Connectivity homology_connectivity(const BettiTable& reduced_table);

} // namespace chroma

#endif
