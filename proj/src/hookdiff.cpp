#include "rsos/hookdiff.hpp"

#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace rsos {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

}  // namespace

std::int64_t Partition::weight() const {
    return std::accumulate(parts.begin(), parts.end(), std::int64_t{0});
}

void Partition::validate() const {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) fail("parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1]) fail("parts must be weakly decreasing");
    }
}

Partition conjugate(const Partition& mu) {
    Partition out;
    if (mu.parts.empty()) return out;
    out.parts.resize(mu.parts.front());
    for (std::int64_t j = 1; j <= mu.parts.front(); ++j) {
        std::int64_t cnt = 0;
        for (std::int64_t p : mu.parts)
            if (p >= j) ++cnt;
        out.parts[j - 1] = cnt;
    }
    return out;
}

std::int64_t hook_difference(const Partition& mu, std::int64_t i, std::int64_t j) {
    if (i < 1 || i > static_cast<std::int64_t>(mu.parts.size()) || j < 1 || j > mu.part(i))
        fail("cell outside the Young diagram");
    return mu.part(i) - conjugate(mu).part(j);
}

namespace {

/// Hook differences on a given diagonal all within [lo, hi]; vacuous where
/// the diagonal has no cells.
bool diagonal_ok(const Partition& mu, const Partition& conj, std::int64_t diag,
                 std::int64_t lo, std::int64_t hi) {
    for (std::int64_t i = 1; i <= static_cast<std::int64_t>(mu.parts.size()); ++i) {
        std::int64_t j = i - diag;
        if (j < 1 || j > mu.part(i)) continue;
        std::int64_t hd = mu.part(i) - conj.part(j);
        if (hd < lo || hd > hi) return false;
    }
    return true;
}

}  // namespace

LaurentPoly d_function(int K, int i, int N, int M, int alpha, int beta) {
    if (K < 2) fail("K must be at least 2");
    if (i < 1 || i > K - 1) fail("i outside [1, K-1]");
    if (alpha < 0 || beta < 0) fail("alpha and beta must be nonnegative");
    if (alpha + beta >= K) fail("alpha + beta must be below K");
    if (N < 0 || M < 0) fail("N and M must be nonnegative");
    if (N - M < beta - i || N - M > K - alpha - i) fail("N - M outside [beta-i, K-alpha-i]");

    const std::int64_t lo_kind = static_cast<std::int64_t>(beta) - i + 1;
    const std::int64_t hi_kind = static_cast<std::int64_t>(K) - i - alpha - 1;
    const std::int64_t min_parts_if_alpha0 = static_cast<std::int64_t>(N) - K + i + 1;
    const std::int64_t min_first_if_beta0 = static_cast<std::int64_t>(M) - i + 1;

    LaurentPoly out;
    Partition mu;
    std::function<void(std::int64_t)> rec = [&](std::int64_t max_part) {
        Partition conj = conjugate(mu);
        bool ok = diagonal_ok(mu, conj, 1 - beta, lo_kind,
                              std::numeric_limits<std::int64_t>::max()) &&
                  diagonal_ok(mu, conj, alpha - 1,
                              std::numeric_limits<std::int64_t>::min(), hi_kind);
        if (ok) {
            bool extra = true;
            if (alpha == 0 && min_parts_if_alpha0 >= 1 &&
                static_cast<std::int64_t>(mu.parts.size()) < min_parts_if_alpha0)
                extra = false;
            if (beta == 0 && M - i >= 0 && mu.part(1) < min_first_if_beta0) extra = false;
            if (extra) out.add_term(QExp::from_int(mu.weight()), 1);
        }
        if (static_cast<int>(mu.parts.size()) == M) return;
        for (std::int64_t p = 1; p <= max_part; ++p) {
            mu.parts.push_back(p);
            rec(p);
            mu.parts.pop_back();
        }
    };
    rec(N);
    return out;
}

Partition path_to_partition(const Path& h, BijectionModel model) {
    if (!h.c) fail("bijection needs the extra point c");
    Partition mu;
    for (int i = 1; i <= h.length(); ++i) {
        VertexClass v = vertex_class(h, i);
        bool x_scores, y_scores;
        if (model == BijectionModel::Parafermion) {
            x_scores = v == VertexClass::PeakUp;
            y_scores = v == VertexClass::PeakDown;
        } else {
            x_scores = v == VertexClass::StraightUp;
            y_scores = v == VertexClass::StraightDown;
        }
        if (x_scores) {
            auto [x, y] = xy(h, i);
            if (x > 0) {
                if (!mu.parts.empty() && x < mu.parts.front())
                    fail("row prepend would break partition order");
                mu.parts.insert(mu.parts.begin(), x);
            }
        } else if (y_scores) {
            auto [x, y] = xy(h, i);
            if (y > 0) {
                if (y < static_cast<std::int64_t>(mu.parts.size()))
                    fail("column prepend would break partition order");
                for (auto& p : mu.parts) ++p;
                while (static_cast<std::int64_t>(mu.parts.size()) < y) mu.parts.push_back(1);
            }
        }
    }
    mu.validate();
    return mu;
}

}  // namespace rsos
