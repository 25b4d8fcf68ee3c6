#include "rsos/transforms.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <tuple>

namespace rsos {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

/// Segment directions d_0..d_{L+1} including the pre-segment (from e) and
/// post-segment (from f); 1 = NE.  Vertex i is scoring iff d_i != d_{i+1}.
std::vector<int> segment_dirs(const Path& h, int e, int f) {
    std::vector<int> d;
    d.reserve(h.length() + 2);
    d.push_back(e);
    for (int i = 0; i < h.length(); ++i) d.push_back(h.heights[i + 1] > h.heights[i] ? 1 : 0);
    d.push_back(1 - f);
    return d;
}

bool scoring(const std::vector<int>& d, int v) { return d[v] != d[v + 1]; }

Path path_from_dirs(const std::vector<int>& d, int start, int p_prime) {
    Path h;
    h.p_prime = p_prime;
    h.heights.push_back(start);
    for (std::size_t i = 1; i + 1 < d.size(); ++i)
        h.heights.push_back(h.heights.back() + (d[i] == 1 ? 1 : -1));
    return h;
}

}  // namespace

StrikingSequence b_transform(const StrikingSequence& s) {
    StrikingSequence out = s;
    out.p_prime = s.p_prime + 1;
    out.start_height = s.start_height + s.e;
    if (s.run_count() == 1) {
        if (s.w[0] == 0)
            throw UndefinedTransformError("transform undefined on the length-0 path with e != f");
        out.w[0] = s.w[0] - 1;
        return out;
    }
    for (int i = 1; i + 1 < s.run_count(); ++i) out.w[i] = s.w[i] + 1;
    return out;
}

StrikingSequence insert_particles(const StrikingSequence& s, int k) {
    if (k < 0) fail("particle count must be nonnegative");
    if (s.start_height == 1 && s.e != 0)
        fail("insertion at start height 1 requires e = 0");
    if (s.start_height == s.p_prime - 1 && s.e != 1)
        fail("insertion at start height p'-1 requires e = 1");
    StrikingSequence out = s;
    for (int j = 0; j < k; ++j) {
        std::vector<std::int64_t> w;
        w.reserve(out.w.size() + 2);
        w.push_back(0);
        w.push_back(1);
        w.push_back(out.w[0] + 1);
        w.insert(w.end(), out.w.begin() + 1, out.w.end());
        out.w = std::move(w);
    }
    return out;
}

Path apply_moves(const ParticleConfig& cfg) {
    const int k = cfg.k;
    if (k < 0) fail("particle count must be nonnegative");
    if (static_cast<int>(cfg.lambda.size()) > k) fail("lambda has more than k parts");
    std::int64_t m = cfg.base.m_value();
    std::vector<std::int64_t> lam = cfg.lambda;
    lam.resize(k, 0);
    for (std::size_t i = 0; i < lam.size(); ++i) {
        if (lam[i] < 0 || lam[i] > m) fail("lambda part outside the k x m box");
        if (i > 0 && lam[i] > lam[i - 1]) fail("lambda must be weakly decreasing");
    }
    StrikingSequence sk = insert_particles(cfg.base, k);
    Path h = path_of(sk);
    std::vector<int> d = segment_dirs(h, sk.e, sk.f);
    const int L = h.length();
    // Rightmost particle first; r tracks the right edge of the particle's
    // scoring run.  A unit move swaps segments (r, r+1); marching onto an
    // isolated scoring vertex re-identifies the pair one step right first.
    for (int j = 0; j < k; ++j) {
        int r = 2 * (k - 1 - j) + 1;
        for (std::int64_t step = 0; step < lam[j]; ++step) {
            if (r + 1 > L) fail("move past the end of the path");
            if (scoring(d, r + 1)) {
                ++r;
                if (r + 1 > L || scoring(d, r + 1)) fail("move blocked by another particle");
            }
            std::swap(d[r], d[r + 1]);
            ++r;
        }
    }
    return path_from_dirs(d, h.a(), sk.p_prime);
}

Decomposition decompose(const Path& h, int e, int f) {
    if (e != 0 && e != 1) fail("e must be 0 or 1");
    if (f != 0 && f != 1) fail("f must be 0 or 1");
    if (h.p_prime <= 2) fail("decompose needs p' > 2");
    const int ae = h.a() - e, bf = h.b() - f;
    if (ae < 1 || ae > h.p_prime - 2) fail("decompose needs 1 <= a-e < p'-1");
    if (bf < 1 || bf > h.p_prime - 2) fail("decompose needs 1 <= b-f < p'-1");

    const int L = h.length();
    std::vector<int> d = segment_dirs(h, e, f);
    std::vector<std::int64_t> found;  // reverse-move counts, leftmost pair first
    for (int t = 0;; ++t) {
        int p = -1;
        for (int i = 2 * t; i < L; ++i) {
            if (scoring(d, i) && scoring(d, i + 1)) {
                p = i;
                break;
            }
        }
        if (p < 0) break;
        std::int64_t moves = 0;
        while (p > 2 * t) {
            if (scoring(d, p - 1)) {
                --p;  // re-identify with the scorer on the left; not a move
            } else {
                std::swap(d[p], d[p + 1]);
                --p;
                ++moves;
            }
        }
        found.push_back(moves);
    }
    int kappa = 0;
    while (kappa <= L && scoring(d, kappa)) ++kappa;
    const int k = kappa / 2;
    if (2 * k > L)
        throw ExcludedCaseError("all-scoring path of odd length has no antecedent");
    if (static_cast<int>(found.size()) != k) fail("inconsistent particle count");

    Path settled = path_from_dirs(d, h.a(), h.p_prime);
    Path stripped;
    stripped.p_prime = h.p_prime;
    stripped.heights.assign(settled.heights.begin() + 2 * k, settled.heights.end());
    StrikingSequence s = striking_of(stripped, e, f);
    StrikingSequence inv = s;
    inv.p_prime = s.p_prime - 1;
    inv.start_height = s.start_height - e;
    if (s.run_count() == 1) {
        inv.w[0] = s.w[0] + 1;
    } else {
        for (int i = 1; i + 1 < s.run_count(); ++i) {
            if (s.w[i] < 2) fail("stripped path still has adjacent scoring vertices");
            inv.w[i] = s.w[i] - 1;
        }
    }
    Decomposition out;
    out.antecedent = path_of(inv);
    out.k = k;
    out.lambda.assign(found.rbegin(), found.rend());
    return out;
}

namespace {

using ChiKey = std::tuple<int, int, int, int, int, int, int>;

const LaurentPoly& chi_rec_memo(int pp, int a, int b, int e, int f, int L, int m,
                                std::map<ChiKey, LaurentPoly>& memo) {
    static const LaurentPoly kZero;
    static const LaurentPoly kOne = LaurentPoly::one();
    if (a < 1 || a > pp - 1 || b < 1 || b > pp - 1 || L < 0 || m < 0) return kZero;
    if ((m + L + e + f) % 2 != 0) return kZero;
    if (L == 0) return (a == b && m == std::abs(e - f)) ? kOne : kZero;
    if (pp == 2) return kZero;  // model 2 admits only L = 0

    ChiKey key{pp, a, b, e, f, L, m};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    LaurentPoly val;
    if (a - e < 1) {  // a = 1, e = 1
        val = chi_rec_memo(pp, a, b, 0, f, L, m - 1, memo);
    } else if (a - e > pp - 2) {  // a = p'-1, e = 0
        val = chi_rec_memo(pp, a, b, 1, f, L, m - 1, memo);
    } else if (b - f < 1) {  // b = 1, f = 1
        val = shift(chi_rec_memo(pp, a, b, e, 0, L, m - 1, memo),
                    QExp::from_halves(-(L - a + 1)));
    } else if (b - f > pp - 2) {  // b = p'-1, f = 0
        val = shift(chi_rec_memo(pp, a, b, e, 1, L, m - 1, memo),
                    QExp::from_halves(-(L - pp + a + 1)));
    } else {
        std::int64_t d = L - m;
        QExp pref{d * d - ((e + f) % 2)};
        for (int mm = L % 2; mm <= m + 1; mm += 2) {
            const LaurentPoly& child = chi_rec_memo(pp - 1, a - e, b - f, e, f, m, mm, memo);
            if (child.is_zero()) continue;
            const LaurentPoly& g = gaussian_binomial((L + mm) / 2, m);
            if (g.is_zero()) continue;
            val += shift(g * child, pref);
        }
    }
    return memo.emplace(key, std::move(val)).first->second;
}

}  // namespace

LaurentPoly chi_by_recursion(int p_prime, int a, int b, int e, int f, int L, int m) {
    if (p_prime < 2) fail("p' must be at least 2");
    if (a < 1 || a > p_prime - 1) fail("a outside [1, p'-1]");
    if (b < 1 || b > p_prime - 1) fail("b outside [1, p'-1]");
    if (e != 0 && e != 1) fail("e must be 0 or 1");
    if (f != 0 && f != 1) fail("f must be 0 or 1");
    thread_local std::map<ChiKey, LaurentPoly> memo;
    return chi_rec_memo(p_prime, a, b, e, f, L, m, memo);
}

std::vector<std::pair<int, int>> ef_sequence(int p_prime, int a, int b, int system) {
    if (system != 1 && system != 2) fail("system must be 1 or 2");
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= p_prime - 2; ++i) {
        int e = system == 1 ? (i < a ? 1 : 0) : (i < p_prime - a ? 0 : 1);
        int f = i < b ? 1 : 0;
        out.emplace_back(e, f);
    }
    return out;
}

MnSystem particle_content(const Path& h, int system) {
    h.validate();
    const int pp = h.p_prime;
    const int a = h.a(), b = h.b();
    const int t = pp - 2;
    MnSystem out;
    out.system = system;
    out.t = t;
    out.m.push_back(h.length());

    auto efs = ef_sequence(pp, a, b, system);
    Path cur = h;
    cur.c.reset();
    for (int i = 1; i <= t; ++i) {
        auto [e, f] = efs[i - 1];
        StrikingSequence s = striking_of(cur, e, f);
        std::int64_t L_cur = cur.length();
        if (s.m_value() == 0 && L_cur % 2 == 1) {
            // All-scoring odd path: the recursion's seed term supplies the
            // antecedent directly (the length-0 path, (L'+1)/2 particles).
            out.strip_counts.push_back((L_cur + 1) / 2);
            Path empty;
            empty.p_prime = cur.p_prime - 1;
            empty.heights = {cur.a() - e};
            cur = empty;
        } else {
            Decomposition dec = decompose(cur, e, f);
            out.strip_counts.push_back(dec.k);
            cur = dec.antecedent;
        }
        if (i < t) out.m.push_back(cur.length());
    }

    // Solve m_{j-1} + m_{j+1} = 2 m_j + 2 n_j - u_j with m_t = m_{t+1} = 0.
    out.verified = cur.length() == 0 && cur.a() == 1;
    for (int j = 1; j <= t; ++j) {
        std::int64_t mjm1 = out.m[j - 1];
        std::int64_t mj = j < t ? out.m[j] : 0;
        std::int64_t mjp1 = j + 1 < t ? out.m[j + 1] : 0;
        std::int64_t u;
        if (system == 1) {
            u = (j == a - 1 ? 1 : 0) + (j == b - 1 ? 1 : 0);
        } else {
            u = (j == pp - a - 1 ? 1 : 0) + (j == b - 1 ? 1 : 0) + (j == t ? 1 : 0);
        }
        std::int64_t num = mjm1 + mjp1 - 2 * mj + u;
        if (num < 0 || num % 2 != 0) {
            out.verified = false;
            out.n.push_back(0);
        } else {
            out.n.push_back(num / 2);
        }
    }
    return out;
}

}  // namespace rsos
