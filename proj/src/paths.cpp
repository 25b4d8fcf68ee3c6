#include "rsos/paths.hpp"

#include "rsos/striking.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace rsos {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

void check_height(int p_prime, int h, const char* name) {
    if (h < 1 || h > p_prime - 1) {
        std::ostringstream os;
        os << name << "=" << h << " outside [1, p'-1] for p'=" << p_prime;
        fail(os.str());
    }
}

}  // namespace

void Path::validate() const {
    if (p_prime < 2) fail("p' must be at least 2");
    if (heights.empty()) fail("path needs at least the height h_0");
    for (int h : heights) check_height(p_prime, h, "h_i");
    for (std::size_t i = 0; i + 1 < heights.size(); ++i)
        if (std::abs(heights[i + 1] - heights[i]) != 1) fail("heights must change by exactly 1");
    if (c) {
        check_height(p_prime, *c, "c");
        if (std::abs(*c - heights.back()) != 1) fail("c must equal b±1");
    }
}

void FamilyParams::validate() const {
    if (p_prime < 2) fail("p' must be at least 2");
    check_height(p_prime, a, "a");
    check_height(p_prime, b, "b");
    if (L < 0) fail("L must be nonnegative");
    if ((L + a - b) % 2 != 0) fail("L + a - b must be even");
    if (c) {
        check_height(p_prime, *c, "c");
        if (std::abs(*c - b) != 1) fail("c must equal b±1");
    }
}

void enumerate(const FamilyParams& params, const std::function<void(const Path&)>& visit) {
    params.validate();
    if (std::abs(params.a - params.b) > params.L) return;
    Path cur;
    cur.p_prime = params.p_prime;
    cur.c = params.c;
    cur.heights.reserve(params.L + 1);
    cur.heights.push_back(params.a);
    // DFS, lower height first for lexicographic order; prune when b is no
    // longer reachable in the remaining steps.
    std::function<void(int)> rec = [&](int i) {
        if (i == params.L) {
            if (cur.heights.back() == params.b) visit(cur);
            return;
        }
        int left = params.L - i - 1;
        for (int step : {-1, +1}) {
            int nh = cur.heights.back() + step;
            if (nh < 1 || nh > params.p_prime - 1) continue;
            if (std::abs(params.b - nh) > left) continue;
            cur.heights.push_back(nh);
            rec(i + 1);
            cur.heights.pop_back();
        }
    };
    rec(0);
}

std::vector<Path> enumerate_all(const FamilyParams& params) {
    std::vector<Path> out;
    enumerate(params, [&](const Path& p) { out.push_back(p); });
    return out;
}

namespace {

int height_after(const Path& h, int i) {
    if (i <= h.length()) return h.heights[i];
    if (i == h.length() + 1 && h.c) return *h.c;
    fail("vertex index requires the extra point c");
}

}  // namespace

VertexClass vertex_class(const Path& h, int i) {
    if (i < 1 || i > h.length()) fail("vertex index out of range");
    if (i == h.length() && !h.c) fail("vertex L needs the extra point c");
    int lo = h.heights[i - 1], mid = h.heights[i], hi = height_after(h, i + 1);
    if (lo < mid) return hi > mid ? VertexClass::StraightUp : VertexClass::PeakUp;
    return hi < mid ? VertexClass::StraightDown : VertexClass::PeakDown;
}

std::pair<std::int64_t, std::int64_t> xy(const Path& h, int i) {
    if (i < 0 || i > h.length()) fail("vertex index out of range");
    std::int64_t d = h.heights[i] - h.a();
    return {(i - d) / 2, (i + d) / 2};
}

std::int64_t weight_alt(const Path& h) {
    if (!h.c) fail("weight needs the extra point c");
    std::int64_t w = 0;
    for (int i = 1; i <= h.length(); ++i) {
        switch (vertex_class(h, i)) {
            case VertexClass::PeakUp: w += xy(h, i).first; break;
            case VertexClass::PeakDown: w += xy(h, i).second; break;
            default: break;
        }
    }
    return w;
}

QExp weight_ii(const Path& h) {
    if (!h.c) fail("weight needs the extra point c");
    std::int64_t halves = 0;
    for (int i = 1; i <= h.length(); ++i) {
        VertexClass v = vertex_class(h, i);
        if (v == VertexClass::PeakUp || v == VertexClass::PeakDown) halves += i;
    }
    return QExp::from_halves(halves);
}

QExp weight_iii(const Path& h) {
    if (!h.c) fail("weight needs the extra point c");
    std::int64_t halves = 0;
    for (int i = 1; i <= h.length(); ++i) {
        VertexClass v = vertex_class(h, i);
        if (v == VertexClass::StraightUp || v == VertexClass::StraightDown) halves += i;
    }
    return QExp::from_halves(halves);
}

std::int64_t weight_iii_normalized(const Path& h) {
    if (!h.c) fail("weight needs the extra point c");
    std::int64_t w = 0;
    for (int i = 1; i <= h.length(); ++i) {
        switch (vertex_class(h, i)) {
            case VertexClass::StraightUp: w += xy(h, i).first; break;
            case VertexClass::StraightDown: w += xy(h, i).second; break;
            default: break;
        }
    }
    return w;
}

Path reflect(const Path& h) {
    Path out = h;
    for (int& x : out.heights) x = h.p_prime - x;
    if (out.c) out.c = h.p_prime - *out.c;
    return out;
}

LaurentPoly gf(const FamilyParams& params, WeightKind kind) {
    if (!params.c) fail("generating function needs c");
    LaurentPoly out;
    enumerate(params, [&](const Path& h) {
        QExp e;
        switch (kind) {
            case WeightKind::Alt: e = QExp::from_int(weight_alt(h)); break;
            case WeightKind::II: e = weight_ii(h); break;
            case WeightKind::III: e = weight_iii(h); break;
            case WeightKind::IIINormalized: e = QExp::from_int(weight_iii_normalized(h)); break;
        }
        out.add_term(e, 1);
    });
    return out;
}

LaurentPoly gf_restricted(int p_prime, int a, int b, int e, int f, int L, int m) {
    if (e != 0 && e != 1) fail("e must be 0 or 1");
    if (f != 0 && f != 1) fail("f must be 0 or 1");
    FamilyParams params{p_prime, a, b, std::nullopt, L};
    params.validate();
    LaurentPoly out;
    if (m < 0 || (m - L - e - f) % 2 != 0) return out;
    enumerate(params, [&](const Path& h) {
        StrikingSequence s = striking_of(h, e, f);
        if (s.m_value() == m) out.add_term(QExp::from_int(s.weight()), 1);
    });
    return out;
}

}  // namespace rsos
