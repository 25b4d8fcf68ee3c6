#include "rsos/qlaurent.hpp"

#include <functional>
#include <mutex>
#include <sstream>
#include <unordered_map>
#include <utility>

namespace rsos {

LaurentPoly LaurentPoly::monomial(QExp e, BigInt c) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace(e, std::move(c));
    return p;
}

BigInt LaurentPoly::coefficient(QExp e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::add_term(QExp e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& r) {
    for (const auto& [e, c] : r.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& r) {
    for (const auto& [e, c] : r.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out = a;
    out += b;
    return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out = a;
    out -= b;
    return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) out.add_term(ea + eb, ca * cb);
    return out;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        BigInt mag = c > 0 ? c : BigInt(-c);
        if (mag != 1 || e.quarters == 0) os << mag;
        if (e.quarters != 0) {
            os << "q";
            if (e.quarters != 4) {
                os << "^";
                if (e.quarters % 4 == 0) os << e.quarters / 4;
                else if (e.quarters % 2 == 0) os << "(" << e.quarters / 2 << "/2)";
                else os << "(" << e.quarters << "/4)";
            }
        }
        first = false;
    }
    return os.str();
}

LaurentPoly shift(const LaurentPoly& p, QExp e) {
    LaurentPoly out;
    for (const auto& [ep, c] : p.terms()) out.add_term(ep + e, c);
    return out;
}

LaurentPoly invert_q(const LaurentPoly& p) {
    LaurentPoly out;
    for (const auto& [ep, c] : p.terms()) out.add_term(-ep, c);
    return out;
}

BigInt evaluate_at_one(const LaurentPoly& p) {
    BigInt s = 0;
    for (const auto& [e, c] : p.terms()) s += c;
    return s;
}

namespace {

std::uint64_t gauss_key(std::int64_t A, std::int64_t B) {
    return (static_cast<std::uint64_t>(A) << 32) | static_cast<std::uint64_t>(B);
}

}  // namespace

const LaurentPoly& gaussian_binomial(std::int64_t A, std::int64_t B) {
    static const LaurentPoly kZero;
    static const LaurentPoly kOne = LaurentPoly::one();
    if (B < 0 || A < 0 || B > A) return kZero;
    if (B == 0 || B == A) return kOne;
    if (B > A - B) B = A - B;  // symmetry halves the table

    static std::mutex mu;
    static std::unordered_map<std::uint64_t, LaurentPoly> memo;
    std::scoped_lock lock(mu);
    // Pascal recurrence [A,B] = [A-1,B-1] + q^B [A-1,B], iteratively so deep
    // tables never recurse through the lock.
    std::function<const LaurentPoly&(std::int64_t, std::int64_t)> get =
        [&](std::int64_t a, std::int64_t b) -> const LaurentPoly& {
        if (b < 0 || b > a) return kZero;
        if (b > a - b) b = a - b;
        if (b == 0) return kOne;
        auto it = memo.find(gauss_key(a, b));
        if (it != memo.end()) return it->second;
        LaurentPoly v = get(a - 1, b - 1) + shift(get(a - 1, b), QExp::from_int(b));
        return memo.emplace(gauss_key(a, b), std::move(v)).first->second;
    };
    return get(A, B);
}

std::string to_json(const LaurentPoly& p) {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (!first) os << ",";
        os << "[" << e.quarters << ",\"" << c.str() << "\"]";
        first = false;
    }
    os << "]";
    return os.str();
}

}  // namespace rsos
