#pragma once

#include "rsos/paths.hpp"

#include <cstdint>
#include <vector>

namespace rsos {

/// Run-length encoding (w_1,...,w_l)^{(e,f)} of a path augmented by the
/// boundary bits e, f.  e fixes the direction counted by w_1 (e=0: SE,
/// e=1: NE) and f the direction counted by w_l (f=0: NE, f=1: SE), so
/// w_1 or w_l may be 0 while interior runs are positive, and
/// l == e + f (mod 2).  Carries p' and the start height so the path can
/// be rebuilt.
struct StrikingSequence {
    std::vector<std::int64_t> w;
    int e = 0;
    int f = 0;
    int start_height = 1;
    int p_prime = 2;

    std::int64_t length() const;                  // sum of runs = L
    int run_count() const { return static_cast<int>(w.size()); }  // l
    std::int64_t m_value() const { return length() - run_count() + 2; }

    /// wt^{(e,f)}: sum over i = 2..l-1 of (w_{i-1} + w_{i-3} + ...).
    std::int64_t weight() const;

    /// Throws std::invalid_argument on malformed run data (interior zeros,
    /// parity mismatch, heights leaving [1, p'-1]).
    void validate() const;
};

/// Striking sequence of a path under the (e,f) augmentation.  Ignores c.
StrikingSequence striking_of(const Path& h, int e, int f);

/// Rebuild the path; exact inverse of striking_of.
Path path_of(const StrikingSequence& s);

}  // namespace rsos
