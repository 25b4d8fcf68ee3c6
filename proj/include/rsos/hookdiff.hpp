#pragma once

#include "rsos/qlaurent.hpp"
#include "rsos/paths.hpp"

#include <cstdint>
#include <vector>

namespace rsos {

/// Weakly decreasing positive parts (trailing zeros are not stored).
struct Partition {
    std::vector<std::int64_t> parts;

    std::int64_t weight() const;
    std::int64_t part(std::size_t i) const {  // 1-based, 0 beyond the last
        return i >= 1 && i <= parts.size() ? parts[i - 1] : 0;
    }
    void validate() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// Column counts of the Young diagram; an involution.
Partition conjugate(const Partition& mu);

/// mu_i - mu'_j at cell (i, j); the cell must lie inside the diagram.
std::int64_t hook_difference(const Partition& mu, std::int64_t i, std::int64_t j);

/// Generating function for partitions into at most M parts, each at most N,
/// whose hook differences on diagonal 1-beta are at least beta-i+1 and on
/// diagonal alpha-1 are at most K-i-alpha-1 (vacuous on diagonals without
/// cells).  When alpha = 0 the extra restriction mu_{N-K+i+1} > 0 applies
/// (vacuous for nonpositive index), and when beta = 0 the restriction
/// mu_1 > M-i (vacuous for M < i).  Brute-force enumeration.
LaurentPoly d_function(int K, int i, int N, int M, int alpha, int beta);

enum class BijectionModel { Parafermion, Abf };

/// Weight-preserving image of a path: traverse left to right, prepending a
/// row of length x at each x-contributing scoring vertex and a column of
/// length y at each y-contributing one.  The model selects which vertex
/// shapes contribute (peaks for Parafermion, straights for Abf), matching
/// weight_alt and weight_iii_normalized respectively.
Partition path_to_partition(const Path& h, BijectionModel model);

}  // namespace rsos
