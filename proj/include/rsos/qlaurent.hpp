#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <string>

namespace rsos {

using BigInt = boost::multiprecision::cpp_int;

/// Exponent of q, stored as an integer number of quarter units so that the
/// half-integer weights and quarter-integer prefactors arising throughout
/// stay exact.  QExp{6} means q^{3/2}.
struct QExp {
    std::int64_t quarters = 0;

    constexpr QExp() = default;
    constexpr explicit QExp(std::int64_t q) : quarters(q) {}

    /// q^n for integer n.
    static constexpr QExp from_int(std::int64_t n) { return QExp(4 * n); }
    /// n/2 as an exponent.
    static constexpr QExp from_halves(std::int64_t n) { return QExp(2 * n); }

    constexpr bool is_integer() const { return quarters % 4 == 0; }

    friend constexpr QExp operator+(QExp a, QExp b) { return QExp(a.quarters + b.quarters); }
    friend constexpr QExp operator-(QExp a, QExp b) { return QExp(a.quarters - b.quarters); }
    constexpr QExp operator-() const { return QExp(-quarters); }
    friend constexpr auto operator<=>(QExp, QExp) = default;
};

/// Sparse Laurent polynomial in q with arbitrary-precision integer
/// coefficients and exponents in QExp quarter units.  Canonical form: no
/// stored coefficient is zero, so equality is term-map equality.
/// Immutable in spirit: all operations return new values.
class LaurentPoly {
  public:
    using TermMap = std::map<QExp, BigInt>;

    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return monomial(QExp(0), 1); }
    static LaurentPoly monomial(QExp e, BigInt c);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    /// Coefficient of q^e (zero if absent).
    BigInt coefficient(QExp e) const;

    void add_term(QExp e, const BigInt& c);

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator+=(const LaurentPoly& r);
    LaurentPoly& operator-=(const LaurentPoly& r);

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

    /// Human-readable form, mostly for diagnostics and error reports.
    std::string str() const;

  private:
    TermMap terms_;
};

/// Multiply by q^e.
LaurentPoly shift(const LaurentPoly& p, QExp e);

/// Substitute q -> 1/q.  An involution.
LaurentPoly invert_q(const LaurentPoly& p);

/// Sum of coefficients, i.e. the evaluation at q = 1.
BigInt evaluate_at_one(const LaurentPoly& p);

/// Gaussian polynomial [A, B]_q.  Zero polynomial unless 0 <= B <= A.
/// Computed by the Pascal recurrence with a process-wide memo table; the
/// returned reference stays valid for the lifetime of the process.
const LaurentPoly& gaussian_binomial(std::int64_t A, std::int64_t B);

/// Canonical JSON form: ascending [quarters, "coefficient"] pairs, the
/// coefficient as a decimal string.  Shared by every CLI command.
std::string to_json(const LaurentPoly& p);

}  // namespace rsos
