#include "rsos/closedforms.hpp"

#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <vector>

namespace rsos {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

void check_family(int p_prime, int a, int b, int c, int L) {
    if (p_prime < 2) fail("p' must be at least 2");
    if (a < 1 || a > p_prime - 1) fail("a outside [1, p'-1]");
    if (b < 1 || b > p_prime - 1) fail("b outside [1, p'-1]");
    if (c < 1 || c > p_prime - 1) fail("c outside [1, p'-1]");
    if (std::abs(c - b) != 1) fail("c must equal b±1");
    if (L < 0) fail("L must be nonnegative");
    if ((L + a - b) % 2 != 0) fail("L + a - b must be even");
}

/// Parameters of one constant-sign sum: the parity class for m_1..m_{p'-3},
/// the two delta positions in the binomial upper indices, and the linear
/// term's index into (m_0, ..., m_{p'-2}).
struct FermForm {
    std::vector<int> cls;
    int d1 = 0;
    int d2 = 0;
    int star = 0;
};

FermForm select_form(int p_prime, int a, int b, int c, int system, bool abf) {
    const int t = p_prime - 2;
    FermForm form;
    if (c == b - 1) {
        if (system == 1) {
            form.cls = parity_vectors(t, a, b).Q;
            form.d1 = a - 1;
            form.d2 = b - 1;
            form.star = abf ? a - 1 : b - 1;
        } else {
            form.cls = parity_vectors(t, p_prime - a, b).R;
            form.d1 = p_prime - a - 1;
            form.d2 = b - 1;
            form.star = abf ? p_prime - a - 1 : b - 1;
        }
    } else {
        if (system == 1) {
            form.cls = parity_vectors(t, p_prime - a, p_prime - b).Q;
            form.d1 = p_prime - a - 1;
            form.d2 = p_prime - b - 1;
            form.star = abf ? p_prime - a - 1 : p_prime - b - 1;
        } else {
            form.cls = parity_vectors(t, a, p_prime - b).R;
            form.d1 = a - 1;
            form.d2 = p_prime - b - 1;
            form.star = abf ? a - 1 : p_prime - b - 1;
        }
    }
    return form;
}

/// Depth-first sum over admissible m-vectors.  The binomial at position j
/// vanishes unless 2 m_j <= m_{j-1} + m_{j+1} + deltas, so any nonzero term
/// satisfies sum_j m_j <= ((t-1) L + t(t^2-1)/3) / 2 (weights j(t-j) applied
/// to the per-position bounds); that cap makes the enumeration finite.
LaurentPoly ferm_sum(int p_prime, int L, const FermForm& form, bool abf) {
    const int t = p_prime - 2;
    const int n = p_prime - 3;  // free components m_1..m_{p'-3}
    const std::int64_t cap =
        (static_cast<std::int64_t>(t - 1) * L +
         static_cast<std::int64_t>(t) * (static_cast<std::int64_t>(t) * t - 1) / 3) / 2;

    LaurentPoly out;
    std::vector<std::int64_t> m(n + 2, 0);
    m[0] = L;  // m_{n+1} stays 0: the virtual m_{p'-2}

    auto delta = [&](int i) { return (i == form.d1 ? 1 : 0) + (i == form.d2 ? 1 : 0); };

    auto emit = [&]() {
        // quadratic form m C m^T = 2 sum m_i^2 - 2 sum m_i m_{i+1} over the
        // tilde vector (m_0..m_{p'-3}) for the parafermion forms or
        // (m_1..m_{p'-3}) for the ABF forms
        const int lo = abf ? 1 : 0;
        std::int64_t quad = 0;
        for (int i = lo; i <= n; ++i) quad += 2 * m[i] * m[i];
        for (int i = lo; i < n; ++i) quad -= 2 * m[i] * m[i + 1];
        std::int64_t star = form.star;
        std::int64_t mstar = (abf && star == 0) ? 0 : m[star];
        LaurentPoly term = LaurentPoly::one();
        for (int j = 1; j <= n; ++j) {
            std::int64_t up2 = m[j - 1] + m[j + 1] + delta(j);
            if (up2 % 2 != 0) return;
            term = term * gaussian_binomial(up2 / 2, m[j]);
            if (term.is_zero()) return;
        }
        out += shift(term, QExp{quad - 2 * mstar});
    };

    std::function<void(int, std::int64_t)> rec = [&](int i, std::int64_t sum) {
        if (i > n) {
            emit();
            return;
        }
        for (std::int64_t mi = form.cls[i - 1]; sum + mi <= cap; mi += 2) {
            m[i] = mi;
            if (i >= 2) {
                // binomial at i-1 is now fully determined; prune zeros
                std::int64_t up2 = m[i - 2] + m[i] + delta(i - 1);
                if (up2 % 2 != 0 || 2 * m[i - 1] > up2) continue;
            }
            rec(i + 1, sum + mi);
        }
        m[i] = 0;
    };
    rec(1, 0);
    return out;
}

}  // namespace

ParityVectors parity_vectors(int t, int a, int b) {
    if (t < 0) fail("t must be nonnegative");
    if (a < 1 || b < 1) fail("a and b must be positive");
    ParityVectors pv;
    pv.u.resize(t, 0);
    if (a - 1 >= 1 && a - 1 <= t) ++pv.u[a - 2];
    if (b - 1 >= 1 && b - 1 <= t) ++pv.u[b - 2];
    pv.Q.resize(t > 0 ? t - 1 : 0);
    pv.R.resize(t > 0 ? t - 1 : 0);
    for (int i = 1; i < t; ++i) {
        int s = 0;
        for (int j = i + 1; j <= t; j += 2) s += pv.u[j - 1];
        pv.Q[i - 1] = s % 2;
        pv.R[i - 1] = (t - i + s) % 2;
    }
    return pv;
}

LaurentPoly bosonic_chi(int p_prime, int a, int b, int c, int L) {
    check_family(p_prime, a, b, c, L);
    const int r = std::min(b, c);
    LaurentPoly out;
    // Out-of-range binomials vanish, so |lambda| <= (L+a)/p' + 1 covers
    // every nonzero term.
    const std::int64_t lam_max = (L + a) / p_prime + 1;
    for (std::int64_t lam = -lam_max; lam <= lam_max; ++lam) {
        std::int64_t B1 = (L + a - b) / 2 - p_prime * lam;
        if (B1 >= 0 && B1 <= L) {
            std::int64_t ex = lam * ((p_prime - 1) * (lam * p_prime - a) + p_prime * r);
            out += shift(gaussian_binomial(L, B1), QExp::from_int(ex));
        }
        std::int64_t B2 = (L + a - b) / 2 - p_prime * lam - a;
        if (B2 >= 0 && B2 <= L) {
            std::int64_t ex = (lam * p_prime - lam + r) * (lam * p_prime + a);
            out -= shift(gaussian_binomial(L, B2), QExp::from_int(ex));
        }
    }
    return out;
}

LaurentPoly fermionic_para(int p_prime, int a, int b, int c, int L, int system) {
    check_family(p_prime, a, b, c, L);
    if (system != 1 && system != 2) fail("system must be 1 or 2");
    FermForm form = select_form(p_prime, a, b, c, system, /*abf=*/false);
    std::int64_t sgn = c == b - 1 ? (a - b) : (b - a);
    QExp pref{sgn - static_cast<std::int64_t>(L) * L};
    return shift(ferm_sum(p_prime, L, form, /*abf=*/false), pref);
}

LaurentPoly fermionic_abf(int p_prime, int a, int b, int c, int L, int system) {
    check_family(p_prime, a, b, c, L);
    if (system != 1 && system != 2) fail("system must be 1 or 2");
    if (c == b - 1 && b <= 1) fail("c = b-1 requires b > 1");
    if (c == b + 1 && b >= p_prime - 1) fail("c = b+1 requires b < p'-1");
    FermForm form = select_form(p_prime, a, b, c, system, /*abf=*/true);
    QExp pref{-static_cast<std::int64_t>(a - b) * (a - c)};
    return shift(ferm_sum(p_prime, L, form, /*abf=*/true), pref);
}

LaurentPoly dual(const LaurentPoly& p, int L, int a, int b) {
    std::int64_t d = static_cast<std::int64_t>(L) * L - static_cast<std::int64_t>(a - b) * (a - b);
    return shift(invert_q(p), QExp{d});
}

}  // namespace rsos
