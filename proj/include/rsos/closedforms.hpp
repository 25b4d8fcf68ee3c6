#pragma once

#include "rsos/qlaurent.hpp"

#include <vector>

namespace rsos {

/// u, Q, R restriction vectors.  u has length t with
/// u_i = delta_{i,a-1} + delta_{i,b-1}; Q and R have length t-1 with
/// Q_i = (u_{i+1} + u_{i+3} + ...) mod 2 and
/// R_i = (t - i + u_{i+1} + u_{i+3} + ...) mod 2, so R(u) = Q(u + e_t).
struct ParityVectors {
    std::vector<int> u;
    std::vector<int> Q;
    std::vector<int> R;
};

ParityVectors parity_vectors(int t, int a, int b);

/// Alternating-sign form of chi^{p'-1,p'}_{a,b,c}(L): two lambda-sums of
/// Gaussian polynomials, finite because out-of-range binomials vanish.
LaurentPoly bosonic_chi(int p_prime, int a, int b, int c, int L);

/// Constant-sign forms of chi^{1,p'}_{a,b,c}(L).  The c = b-1 and c = b+1
/// branches use the two parity classes Q(u_{a,b}) / Q(u_{p'-a,p'-b})
/// (system 1) and R(u_{p'-a,b}) / R(u_{a,p'-b}) (system 2).
LaurentPoly fermionic_para(int p_prime, int a, int b, int c, int L, int system);

/// Constant-sign forms of chi^{p'-1,p'}_{a,b,c}(L) with prefactor
/// q^{-(a-b)(a-c)/4}; same parity classes as fermionic_para.
/// c = b-1 requires b > 1 and c = b+1 requires b < p'-1.
LaurentPoly fermionic_abf(int p_prime, int a, int b, int c, int L, int system);

/// chi^{1,p'}_{a,b,c}(L; q) = q^{(L^2-(a-b)^2)/4} chi^{p'-1,p'}_{a,b,c}(L; 1/q):
/// shift(invert_q(p), (L^2-(a-b)^2)/4).
LaurentPoly dual(const LaurentPoly& p, int L, int a, int b);

}  // namespace rsos
