#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "eh/error.hpp"

namespace eh {

// The two imaginary quadratic orders that occur: Z[i] and Z[w] with
// w = exp(i*pi/3), so w^2 = w - 1 and w^3 = -1. Elements are a + b*i
// respectively a + b*w.
enum class Ring { gauss, eisenstein };

const char* ring_name(Ring r);

struct QuadInt {
  Ring ring = Ring::gauss;
  long long a = 0;
  long long b = 0;

  std::string str() const;
};

bool operator==(const QuadInt& x, const QuadInt& y);
inline bool operator!=(const QuadInt& x, const QuadInt& y) { return !(x == y); }

QuadInt add(const QuadInt& x, const QuadInt& y);
QuadInt sub(const QuadInt& x, const QuadInt& y);
QuadInt neg(const QuadInt& x);
QuadInt mul(const QuadInt& x, const QuadInt& y);
QuadInt conj(const QuadInt& x);
long long norm(const QuadInt& x);  // a^2+b^2, resp. a^2+ab+b^2

QuadInt pow(QuadInt x, unsigned k);

const std::vector<QuadInt>& units(Ring r);
bool is_unit(const QuadInt& x);

bool is_prime_ll(long long p);

// A rational prime splits (or ramifies) iff it is a norm: p = 2 or
// p = 1 mod 4 in Z[i]; p = 3 or p = 1 mod 6 in Z[w]. Throws NotPrime.
bool is_split(long long p, Ring r);

// Factor p = pi * pi' with norm(pi) = p. Returns the factor with
// a >= b >= 0 first, ties broken lexicographically. Throws DoesNotSplit.
std::pair<QuadInt, QuadInt> split(long long p, Ring r);

struct AbelianInvariants {
  long long d1 = 1;
  long long d2 = 1;  // d1 | d2, d1*d2 = norm of the modulus
};

bool operator==(const AbelianInvariants& x, const AbelianInvariants& y);
inline bool operator!=(const AbelianInvariants& x, const AbelianInvariants& y) {
  return !(x == y);
}

// 2x2 matrix of multiplication by z on the basis {1, i} resp. {1, w},
// columns are the images.
std::array<std::array<long long, 2>, 2> mult_matrix(const QuadInt& z);

// Invariant factors of R/zR via the Smith normal form of mult_matrix(z).
// Throws ZeroModulus for z = 0.
AbelianInvariants quotient_invariants(const QuadInt& z);

// Smith data for the quotient coordinate map: U*M*V = diag(d1,d2) with
// U, V unimodular; w + zR corresponds to U*w mod (d1, d2).
struct SmithData {
  long long d1 = 1, d2 = 1;
  std::array<std::array<long long, 2>, 2> U{{{1, 0}, {0, 1}}};
};

SmithData smith_2x2(std::array<std::array<long long, 2>, 2> m);

// Coordinates of w + zR in Z_d1 x Z_d2.
std::array<long long, 2> quotient_coords(const QuadInt& z, const QuadInt& w);

// Additive order of w + zR.
long long quotient_order(const QuadInt& z, const QuadInt& w);

// Possible Sylow p-subgroup shapes (p^l, p^(mu-l)), 0 <= l <= mu/2, of the
// n-part of a reduced translation group at a split prime p > 3.
// Throws NotApplicable for p <= 3 or inert p.
std::vector<AbelianInvariants> sylow_types(long long p, int multiplicity, Ring r);

// All k in [0,q) with k^2+1 = 0 (t=4) or k^2-k+1 = 0 (t=3,6) mod q and
// gcd(k,q) = 1. q >= 1; t in {3,4,6}.
std::vector<long long> solve_twist(int t, long long q);

// Solubility predicate: every prime of q splits in the matching ring and the
// ramified prime (2 for t=4, 3 for t=3,6) divides q at most once.
bool twist_soluble(int t, long long q);

std::vector<std::pair<long long, int>> factorize(long long n);

}  // namespace eh
