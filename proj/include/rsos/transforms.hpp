#pragma once

#include "rsos/qlaurent.hpp"
#include "rsos/paths.hpp"
#include "rsos/striking.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace rsos {

/// The model-raising transform is left undefined on the length-0 path with
/// e != f (striking sequence (0)); this error marks exactly that input.
struct UndefinedTransformError : std::domain_error {
    using std::domain_error::domain_error;
};

/// decompose() cannot invert the transform chain when the path is
/// all-scoring with odd length (m' = 0, L' odd).
struct ExcludedCaseError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Model-raising transform p' -> p'+1 on striking sequences:
/// (w_1, w_2, ..., w_{l-1}, w_l) -> (w_1, w_2+1, ..., w_{l-1}+1, w_l) with
/// start height h_0 + e.  A single-run sequence (w_1) maps to (w_1 - 1).
/// The result has length 2L - m, m-value L, and no two consecutive scoring
/// vertices.  Throws UndefinedTransformError on (0) with e != f.
StrikingSequence b_transform(const StrikingSequence& s);

/// Insert k particles: each insertion maps (w_1, ..., w_l) to
/// (0, 1, w_1+1, w_2, ..., w_l), keeping the start point.  Requires e = 0
/// when the start height is 1 and e = 1 when it is p'-1.
StrikingSequence insert_particles(const StrikingSequence& s, int k);

/// A post-transform base path h^{(0)}, a particle count and the partition
/// of rightward moves (lambda_1 for the rightmost particle).
struct ParticleConfig {
    StrikingSequence base;
    int k = 0;
    std::vector<std::int64_t> lambda;
};

/// Insert cfg.k particles into cfg.base and give particle j exactly
/// lambda_j rightward moves, rightmost particle first.  lambda must be a
/// partition inside the k x m box, m = m-value of the base.  The result's
/// weight is wt(base after insertion) + |lambda|.
Path apply_moves(const ParticleConfig& cfg);

struct Decomposition {
    Path antecedent;  // lives in model p'-1 with endpoints a-e, b-f
    int k = 0;
    std::vector<std::int64_t> lambda;
};

/// Exact inverse of b_transform + insert_particles + apply_moves.
/// Requires p' > 2 and 1 <= a-e, b-f < p'-1.  Throws ExcludedCaseError for
/// the all-scoring odd-length path (m' = 0, L' odd).
Decomposition decompose(const Path& h, int e, int f);

/// chi^{1,p'}_{a,b,e,f}(L,m) by the model-lowering recursion: the L = 0
/// seed, boundary designation switches, and the one-step recursion
///   chi^{1,p'}_{a,b,e,f}(L,m') =
///     sum_{m == L (2)} q^{((L-m')^2 - delta_{e+f,1})/4}
///       [ (L+m)/2, m' ]_q  chi^{1,p'-1}_{a-e,b-f,e,f}(m',m).
/// Memoised per thread; equals gf_restricted exactly.
LaurentPoly chi_by_recursion(int p_prime, int a, int b, int e, int f, int L, int m);

/// The (e_i, f_i), i = 1..p'-2, governing the iterated decomposition for
/// the two constant-sign systems.
std::vector<std::pair<int, int>> ef_sequence(int p_prime, int a, int b, int system);

/// Data of one iterated decomposition: the m-vector (m_0 = L and the
/// antecedent lengths), the n-vector solved from the linear system
///   m_{j-1} + m_{j+1} = 2 m_j + 2 n_j - u_j     (m_t = m_{t+1} = 0),
/// with u = u_{a,b} for system 1 and u_{p'-a,b} + e_t for system 2, and
/// the per-level stripped particle counts for cross-checking.  `verified`
/// records that every n_j is a nonnegative integer; `strip_counts` agrees
/// with n except at levels where a boundary designation switch lands on a
/// length-0 antecedent (where the switch identities degenerate).
struct MnSystem {
    int system = 1;
    int t = 0;
    std::vector<std::int64_t> m;             // m_0..m_{t-1}
    std::vector<std::int64_t> n;             // n_1..n_t
    std::vector<std::int64_t> strip_counts;  // mechanical k per level
    bool verified = false;
};

MnSystem particle_content(const Path& h, int system);

}  // namespace rsos
