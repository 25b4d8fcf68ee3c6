#include "rsos/striking.hpp"

#include <numeric>
#include <stdexcept>

namespace rsos {

std::int64_t StrikingSequence::length() const {
    return std::accumulate(w.begin(), w.end(), std::int64_t{0});
}

std::int64_t StrikingSequence::weight() const {
    // Partial alternating sums: term for i is w_{i-1} + w_{i-3} + ...
    std::int64_t total = 0;
    int l = run_count();
    std::int64_t even_tail = 0;  // w_{i-1} + w_{i-3} + ... for the current i
    std::int64_t odd_tail = 0;   // same, one step behind
    for (int i = 2; i <= l - 1; ++i) {
        // the sum for index i extends the one for i-2 by w_{i-1}
        if (i % 2 == 0) {
            even_tail += w[i - 2];
            total += even_tail;
        } else {
            odd_tail += w[i - 2];
            total += odd_tail;
        }
    }
    return total;
}

void StrikingSequence::validate() const {
    if (e != 0 && e != 1) throw std::invalid_argument("e must be 0 or 1");
    if (f != 0 && f != 1) throw std::invalid_argument("f must be 0 or 1");
    if (w.empty()) throw std::invalid_argument("striking sequence needs at least one run");
    if (run_count() % 2 != (e + f) % 2)
        throw std::invalid_argument("run count parity must match e + f");
    for (int i = 1; i + 1 < run_count(); ++i)
        if (w[i] <= 0) throw std::invalid_argument("interior runs must be positive");
    if (w.front() < 0 || w.back() < 0) throw std::invalid_argument("runs must be nonnegative");
    path_of(*this);  // height-range check
}

StrikingSequence striking_of(const Path& h, int e, int f) {
    if (e != 0 && e != 1) throw std::invalid_argument("e must be 0 or 1");
    if (f != 0 && f != 1) throw std::invalid_argument("f must be 0 or 1");
    StrikingSequence s;
    s.e = e;
    s.f = f;
    s.start_height = h.a();
    s.p_prime = h.p_prime;
    int L = h.length();
    if (L == 0) {
        s.w = (e == f) ? std::vector<std::int64_t>{0, 0} : std::vector<std::int64_t>{0};
        return s;
    }
    // runs of NE(1)/SE(0) steps
    std::vector<std::pair<int, std::int64_t>> runs;
    for (int i = 0; i < L; ++i) {
        int d = h.heights[i + 1] > h.heights[i] ? 1 : 0;
        if (!runs.empty() && runs.back().first == d) ++runs.back().second;
        else runs.emplace_back(d, 1);
    }
    if (runs.front().first != e) s.w.push_back(0);
    for (const auto& [d, n] : runs) s.w.push_back(n);
    if (runs.back().first != 1 - f) s.w.push_back(0);
    return s;
}

Path path_of(const StrikingSequence& s) {
    Path h;
    h.p_prime = s.p_prime;
    h.heights.push_back(s.start_height);
    int dir = s.e;  // run 1 goes NE iff e = 1
    for (std::int64_t run : s.w) {
        for (std::int64_t k = 0; k < run; ++k) {
            int nh = h.heights.back() + (dir == 1 ? 1 : -1);
            if (nh < 1 || nh > s.p_prime - 1)
                throw std::invalid_argument("striking sequence leaves the height range");
            h.heights.push_back(nh);
        }
        dir = 1 - dir;
    }
    return h;
}

}  // namespace rsos
