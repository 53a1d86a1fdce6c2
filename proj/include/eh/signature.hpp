#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "eh/rational.hpp"

namespace eh {

// NEC signature (g; +/-; [m1,...]; {(n11,...),...}). Empty period or cycle
// lists stand for the printed dash. A cycle may itself be empty.
struct Signature {
  long genus = 0;
  bool sign_plus = true;
  std::vector<long> periods;
  std::vector<std::vector<long>> cycles;

  bool is_fuchsian() const { return sign_plus && cycles.empty(); }
  std::string str() const;
};

// Structural equality; each period cycle is compared up to cyclic rotation.
bool operator==(const Signature& a, const Signature& b);
inline bool operator!=(const Signature& a, const Signature& b) { return !(a == b); }

// Validates container shape: periods >= 2, sign minus needs genus >= 1,
// orbit genus nonnegative. Throws BadSignature.
void validate(const Signature& s);

// Hyperbolic area divided by 2*pi. Throws NonHyperbolic when <= 0.
Rational area(const Signature& s);

// Canonical Fuchsian subgroup signature of a proper NEC signature: orbit
// genus alpha*g + k - 1, proper periods doubled, link periods kept once.
// Throws AlreadyFuchsian when the input has sign + and no cycles.
Signature canonical_fuchsian(const Signature& s);

// Exact Riemann-Hurwitz index area(sub)/area(sup).
Rational rh_index(const Signature& sub, const Signature& sup);

// Ordered hyperbolic triple [k,l,m], slot order preserved.
class TriangularSignature {
public:
  TriangularSignature(long k, long l, long m);

  const std::array<long, 3>& periods() const { return p_; }
  long k() const { return p_[0]; }
  long l() const { return p_[1]; }
  long m() const { return p_[2]; }

  // (0; +; [k,l,m]; {}) surface-kernel form.
  Signature as_signature() const;
  // (0; +; [-]; {(k,l,m)}) one-boundary NEC form.
  Signature nec_signature() const;

  Rational area() const;  // 1 - 1/k - 1/l - 1/m
  std::string str() const;

  bool same_periods(const TriangularSignature& o) const;  // multiset compare

  friend bool operator==(const TriangularSignature& a, const TriangularSignature& b) {
    return a.p_ == b.p_;
  }
  friend bool operator!=(const TriangularSignature& a, const TriangularSignature& b) {
    return !(a == b);
  }
  friend bool operator<(const TriangularSignature& a, const TriangularSignature& b) {
    return a.p_ < b.p_;
  }

private:
  std::array<long, 3> p_;
};

Rational rh_index(const TriangularSignature& sub, const TriangularSignature& sup);

// Genus of the kernel surface of a smooth order-N epimorphism: solves
// 2g - 2 = N * area. Throws NonIntegralGenus unless g is an integer >= 2.
long genus_of_kernel(const TriangularSignature& t, long long order);

// Base quotient type of a candidate triple; the twist order t used in the
// reduced-group arithmetic is 4, 6, 3 respectively.
enum class ActionType { t244, t236, t333 };

int twist_order(ActionType t);
const char* action_type_name(ActionType t);

struct TriangleCandidate {
  TriangularSignature sig;
  ActionType type;
  bool full;  // not properly contained in another candidate
};

// The fifteen triples [eps1*b1, eps2*b2, eps3*b3] with (b1,b2,b3) in
// {(2,4,4), (2,3,6), (3,3,3)} and eps in {1,2} that stay hyperbolic.
const std::vector<TriangleCandidate>& triangle_candidates();
std::vector<TriangularSignature> triangular_symmetric_candidates();

// Candidate lookup by period multiset. Null when absent.
const TriangleCandidate* find_candidate(const TriangularSignature& t);

struct TriangleInclusion {
  TriangularSignature sub;
  TriangularSignature sup;
  long index;
};

// Direct containments among the candidates with the containment index.
const std::vector<TriangleInclusion>& candidate_inclusions();

bool is_full_signature(const TriangularSignature& t);

// Parses "[k,l,m]" or "k,l,m".
std::optional<TriangularSignature> parse_triangle(const std::string& text);

}  // namespace eh
