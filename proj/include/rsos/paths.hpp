#pragma once

#include "rsos/qlaurent.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace rsos {

/// A restricted lattice path: heights h_0..h_L inside [1, p'-1] with unit
/// steps, optionally carrying the extra point h_{L+1} = c that fixes the
/// shape of the L-th vertex.
struct Path {
    int p_prime = 2;
    std::vector<int> heights;  // h_0..h_L
    std::optional<int> c;

    int length() const { return static_cast<int>(heights.size()) - 1; }
    int a() const { return heights.front(); }
    int b() const { return heights.back(); }

    /// Throws std::invalid_argument naming the violated constraint.
    void validate() const;
};

/// Names one generating-function family (p', a, b, c, L).
struct FamilyParams {
    int p_prime = 2;
    int a = 1;
    int b = 1;
    std::optional<int> c;
    int L = 0;

    void validate() const;
};

enum class VertexClass { StraightUp, StraightDown, PeakUp, PeakDown };

enum class WeightKind { Alt, II, III, IIINormalized };

/// Visit every path of the family exactly once, in lexicographic height
/// order.  Paths carry c when the family does.
void enumerate(const FamilyParams& params, const std::function<void(const Path&)>& visit);

std::vector<Path> enumerate_all(const FamilyParams& params);

/// Shape of the i-th vertex (1 <= i <= L; i = L needs c).
VertexClass vertex_class(const Path& h, int i);

/// Coordinates in the 45-degree system with origin at the initial point:
/// x = (i - (h_i - a))/2, y = (i + (h_i - a))/2.  Integers for every vertex
/// of a unit-step path.
std::pair<std::int64_t, std::int64_t> xy(const Path& h, int i);

/// Weight with scoring peaks: a local maximum at vertex i contributes x, a
/// local minimum contributes y.  Requires c.
std::int64_t weight_alt(const Path& h);

/// Regime-II weight: peak vertices contribute i/2.  Requires c.
QExp weight_ii(const Path& h);

/// Regime-III weight: straight vertices contribute i/2.  Requires c.
QExp weight_iii(const Path& h);

/// Normalised regime-III weight: straight-up contributes x, straight-down
/// contributes y.  Requires c.
std::int64_t weight_iii_normalized(const Path& h);

/// Reflection h_i -> p' - h_i (c reflected too, when present).
Path reflect(const Path& h);

/// Brute-force generating function sum_h q^{wt(h)} over the family.
LaurentPoly gf(const FamilyParams& params, WeightKind kind);

/// Generating function of paths in P^{p'}_{a,b}(L) whose striking-sequence
/// statistic m^{(e,f)} equals m, weighted by wt^{(e,f)}.  Zero unless
/// m == L + e + f (mod 2).
LaurentPoly gf_restricted(int p_prime, int a, int b, int e, int f, int L, int m);

}  // namespace rsos
