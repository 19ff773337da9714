#include "chroma/homology.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

namespace chroma {

long long BettiTable::euler_characteristic() const {
    long long chi = 0;
    for (std::size_t i = 0; i < betti.size(); ++i)
        chi += (i % 2 == 0 ? 1 : -1) * betti[i];
    return chi;
}

std::string BettiTable::to_json() const {
    nlohmann::ordered_json j;
    j["coeff"] = coeff == Coefficients::Gf2 ? "gf2" : "z";
    j["reduced"] = reduced;
    j["betti"] = betti;
    auto tor = nlohmann::ordered_json::array();
    for (const auto& t : torsion) tor.push_back(t);
    j["torsion"] = std::move(tor);
    j["computed_up_to"] = computed_up_to;
    return j.dump();
}

std::string BettiTable::to_csv() const {
    std::ostringstream os;
    const bool integer = coeff == Coefficients::Integer;
    os << "dim,betti" << (integer ? ",torsion\n" : "\n");
    for (std::size_t i = 0; i < betti.size(); ++i) {
        os << i << "," << betti[i];
        if (integer) {
            os << ",";
            const auto& t = i < torsion.size() ? torsion[i] : std::vector<long long>{};
            for (std::size_t k = 0; k < t.size(); ++k) os << (k ? " " : "") << t[k];
        }
        os << "\n";
    }
    return os.str();
}

namespace {

using SimplexIndex = std::unordered_map<Simplex, int, SimplexHash>;

SimplexIndex index_of(const std::vector<Simplex>& cells) {
    SimplexIndex idx;
    idx.reserve(cells.size() * 2);
    for (std::size_t i = 0; i < cells.size(); ++i) idx.emplace(cells[i], int(i));
    return idx;
}

const std::vector<Simplex>& level_or_empty(const SkeletonLevels& levels, int d) {
    static const std::vector<Simplex> none;
    if (d < 0 || d >= int(levels.by_dim.size())) return none;
    return levels.by_dim[d];
}

void require_level(const SkeletonLevels& levels, int d) {
    if (d > levels.max_dim)
        throw std::invalid_argument("skeleton enumerated only up to dimension " +
                                    std::to_string(levels.max_dim));
}

} // namespace

Gf2Matrix boundary_matrix_gf2(const SkeletonLevels& levels, int i, bool reduced) {
    if (i < 0) throw std::invalid_argument("boundary dimension must be >= 0");
    require_level(levels, i);
    const auto& top = level_or_empty(levels, i);
    if (i == 0) {
        Gf2Matrix m(int(top.size()), reduced ? 1 : 0);
        if (reduced)
            for (int r = 0; r < int(top.size()); ++r) m.set(r, 0);
        return m;
    }
    const auto& bottom = level_or_empty(levels, i - 1);
    SimplexIndex idx = index_of(bottom);
    Gf2Matrix m(int(top.size()), int(bottom.size()));
    for (int r = 0; r < int(top.size()); ++r)
        for (const Simplex& f : facets_of(top[r])) {
            auto it = idx.find(f);
            if (it == idx.end())
                throw std::logic_error("facet missing from enumerated skeleton");
            m.set(r, it->second);
        }
    return m;
}

Gf2Matrix boundary_matrix_gf2(const SimplicialComplex& k, int i, bool reduced,
                              const SizeLimits& limits) {
    return boundary_matrix_gf2(enumerate_simplices(k, i, limits), i, reduced);
}

IntMatrix boundary_matrix_int(const SkeletonLevels& levels, int i, bool reduced) {
    if (i < 0) throw std::invalid_argument("boundary dimension must be >= 0");
    require_level(levels, i);
    const auto& top = level_or_empty(levels, i);
    if (i == 0) {
        IntMatrix m(int(top.size()), reduced ? 1 : 0);
        if (reduced)
            for (int r = 0; r < int(top.size()); ++r) m.at(r, 0) = 1;
        return m;
    }
    const auto& bottom = level_or_empty(levels, i - 1);
    SimplexIndex idx = index_of(bottom);
    IntMatrix m(int(top.size()), int(bottom.size()));
    for (int r = 0; r < int(top.size()); ++r) {
        auto faces = facets_of(top[r]);
        for (std::size_t pos = 0; pos < faces.size(); ++pos) {
            auto it = idx.find(faces[pos]);
            if (it == idx.end())
                throw std::logic_error("facet missing from enumerated skeleton");
            m.at(r, it->second) = (pos % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

namespace {

// Rank of del_i streamed row by row; rows are sparse (i+1 bits each) so the
// accumulator only materializes the pivot basis.
int boundary_rank_gf2(const SkeletonLevels& levels, int i, bool reduced) {
    const auto& top = level_or_empty(levels, i);
    if (i == 0) {
        if (!reduced) return 0;
        return top.empty() ? 0 : 1;
    }
    const auto& bottom = level_or_empty(levels, i - 1);
    if (top.empty() || bottom.empty()) return 0;
    SimplexIndex idx = index_of(bottom);
    Gf2RankAccumulator acc(int(bottom.size()));
    for (const Simplex& t : top) {
        BitRow row(int(bottom.size()));
        for (const Simplex& f : facets_of(t)) row.set(idx.at(f));
        acc.add_row(std::move(row));
    }
    return acc.rank();
}

} // namespace

BettiTable betti_gf2(const SkeletonLevels& levels, int max_betti_dim, bool reduced) {
    if (max_betti_dim < 0) throw std::invalid_argument("max_betti_dim must be >= 0");
    require_level(levels, max_betti_dim + 1);
    BettiTable out;
    out.coeff = Coefficients::Gf2;
    out.reduced = reduced;
    out.computed_up_to = max_betti_dim;

    std::vector<int> ranks(max_betti_dim + 2, 0);  // ranks[i] = rank del_i
    for (int i = 0; i <= max_betti_dim + 1; ++i) ranks[i] = boundary_rank_gf2(levels, i, reduced);

    for (int i = 0; i <= max_betti_dim; ++i) {
        long long count = levels.count(i);
        out.cell_counts.push_back(count);
        out.betti.push_back(count - ranks[i] - ranks[i + 1]);
        out.torsion.emplace_back();
    }
    return out;
}

BettiTable betti_gf2(const SimplicialComplex& k, int max_betti_dim, bool reduced,
                     const SizeLimits& limits) {
    return betti_gf2(enumerate_simplices(k, max_betti_dim + 1, limits), max_betti_dim, reduced);
}

BettiTable betti_integer(const SkeletonLevels& levels, int max_betti_dim, bool reduced) {
    if (max_betti_dim < 0) throw std::invalid_argument("max_betti_dim must be >= 0");
    require_level(levels, max_betti_dim + 1);
    BettiTable out;
    out.coeff = Coefficients::Integer;
    out.reduced = reduced;
    out.computed_up_to = max_betti_dim;

    std::vector<SnfResult> snf(max_betti_dim + 2);
    for (int i = 0; i <= max_betti_dim + 1; ++i)
        snf[i] = smith_normal_form(boundary_matrix_int(levels, i, reduced));

    for (int i = 0; i <= max_betti_dim; ++i) {
        long long count = levels.count(i);
        out.cell_counts.push_back(count);
        out.betti.push_back(count - snf[i].rank - snf[i + 1].rank);
        std::vector<long long> tors;
        for (const BigInt& d : snf[i + 1].invariant_factors)
            if (d > 1) tors.push_back(d.convert_to<long long>());
        out.torsion.push_back(std::move(tors));
    }
    return out;
}

BettiTable betti_integer(const SimplicialComplex& k, int max_betti_dim, bool reduced,
                         const SizeLimits& limits) {
    return betti_integer(enumerate_simplices(k, max_betti_dim + 1, limits), max_betti_dim, reduced);
}

std::string Connectivity::to_string() const {
    switch (kind) {
    case Kind::MinusInfinity: return "-inf";
    case Kind::AtLeast: return ">=" + std::to_string(value);
    case Kind::Exact: return std::to_string(value);
    }
    return {};
}

Connectivity homology_connectivity(const BettiTable& table) {
    if (!table.reduced)
        throw std::invalid_argument("homology_connectivity needs a reduced Betti table");
    if (table.cell_counts.empty() || table.cell_counts[0] == 0)
        return {Connectivity::Kind::MinusInfinity, 0};
    for (int i = 0; i <= table.computed_up_to; ++i)
        if (table.betti[i] != 0 || (i < int(table.torsion.size()) && !table.torsion[i].empty()))
            return {Connectivity::Kind::Exact, i - 1};
    return {Connectivity::Kind::AtLeast, table.computed_up_to};
}

} // namespace chroma
