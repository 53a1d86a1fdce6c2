#include "eh/signature.hpp"

#include <algorithm>
#include <sstream>

namespace eh {

namespace {

bool cyclic_equal(const std::vector<long>& a, const std::vector<long>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  const size_t n = a.size();
  for (size_t shift = 0; shift < n; ++shift) {
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i) ok = a[i] == b[(i + shift) % n];
    if (ok) return true;
  }
  return false;
}

std::array<long, 3> sorted3(const std::array<long, 3>& p) {
  std::array<long, 3> q = p;
  std::sort(q.begin(), q.end());
  return q;
}

}  // namespace

std::string Signature::str() const {
  std::ostringstream os;
  os << "(" << genus << "; " << (sign_plus ? "+" : "-") << "; [";
  if (periods.empty()) {
    os << "-";
  } else {
    for (size_t i = 0; i < periods.size(); ++i) os << (i ? "," : "") << periods[i];
  }
  os << "]; {";
  if (cycles.empty()) {
    os << "-";
  } else {
    for (size_t c = 0; c < cycles.size(); ++c) {
      if (c) os << ",";
      os << "(";
      if (cycles[c].empty()) {
        os << "-";
      } else {
        for (size_t i = 0; i < cycles[c].size(); ++i) os << (i ? "," : "") << cycles[c][i];
      }
      os << ")";
    }
  }
  os << "})";
  return os.str();
}

bool operator==(const Signature& a, const Signature& b) {
  if (a.genus != b.genus || a.sign_plus != b.sign_plus) return false;
  if (a.periods != b.periods) return false;
  if (a.cycles.size() != b.cycles.size()) return false;
  for (size_t i = 0; i < a.cycles.size(); ++i)
    if (!cyclic_equal(a.cycles[i], b.cycles[i])) return false;
  return true;
}

void validate(const Signature& s) {
  if (s.genus < 0) fail(errc::bad_signature, "negative orbit genus in " + s.str());
  if (!s.sign_plus && s.genus < 1)
    fail(errc::bad_signature, "sign - needs orbit genus >= 1 in " + s.str());
  for (long m : s.periods)
    if (m < 2) fail(errc::bad_signature, "proper period < 2 in " + s.str());
  for (const auto& cyc : s.cycles)
    for (long n : cyc)
      if (n < 2) fail(errc::bad_signature, "link period < 2 in " + s.str());
}

Rational area(const Signature& s) {
  validate(s);
  const long alpha = s.sign_plus ? 2 : 1;
  Rational a(alpha * s.genus + static_cast<long>(s.cycles.size()) - 2);
  for (long m : s.periods) a += Rational(m - 1, m);
  for (const auto& cyc : s.cycles)
    for (long n : cyc) a += Rational(n - 1, 2 * n);
  if (!(Rational(0) < a)) fail(errc::non_hyperbolic, "area " + a.str() + " of " + s.str());
  return a;
}

Signature canonical_fuchsian(const Signature& s) {
  validate(s);
  if (s.is_fuchsian()) fail(errc::already_fuchsian, s.str() + " has sign + and no cycles");
  const long alpha = s.sign_plus ? 2 : 1;
  Signature f;
  f.genus = alpha * s.genus + static_cast<long>(s.cycles.size()) - 1;
  f.sign_plus = true;
  for (long m : s.periods) {
    f.periods.push_back(m);
    f.periods.push_back(m);
  }
  for (const auto& cyc : s.cycles)
    for (long n : cyc) f.periods.push_back(n);
  return f;
}

Rational rh_index(const Signature& sub, const Signature& sup) { return area(sub) / area(sup); }

TriangularSignature::TriangularSignature(long k, long l, long m) : p_{k, l, m} {
  for (long v : p_)
    if (v < 2) fail(errc::bad_signature, "triangle period " + std::to_string(v) + " < 2");
  Rational a = Rational(1) - Rational(1, k) - Rational(1, l) - Rational(1, m);
  if (!(Rational(0) < a)) fail(errc::non_hyperbolic, "triangle " + str() + " has area " + a.str());
}

Signature TriangularSignature::as_signature() const {
  Signature s;
  s.periods.assign(p_.begin(), p_.end());
  return s;
}

Signature TriangularSignature::nec_signature() const {
  Signature s;
  s.cycles.push_back({p_[0], p_[1], p_[2]});
  return s;
}

Rational TriangularSignature::area() const {
  return Rational(1) - Rational(1, p_[0]) - Rational(1, p_[1]) - Rational(1, p_[2]);
}

std::string TriangularSignature::str() const {
  return "[" + std::to_string(p_[0]) + "," + std::to_string(p_[1]) + "," + std::to_string(p_[2]) +
         "]";
}

bool TriangularSignature::same_periods(const TriangularSignature& o) const {
  return sorted3(p_) == sorted3(o.p_);
}

Rational rh_index(const TriangularSignature& sub, const TriangularSignature& sup) {
  return sub.area() / sup.area();
}

long genus_of_kernel(const TriangularSignature& t, long long order) {
  if (order < 1) fail(errc::bad_parameter, "group order must be positive");
  Rational prod = t.area() * Rational(order);
  const std::string what =
      "2g-2 = " + prod.str() + " for " + t.str() + " at order " + std::to_string(order);
  if (!prod.is_integer()) fail(errc::non_integral_genus, what);
  long long v = prod.as_integer();
  if (v < 2 || v % 2 != 0) fail(errc::non_integral_genus, what);
  return static_cast<long>(v / 2 + 1);
}

int twist_order(ActionType t) {
  switch (t) {
    case ActionType::t244: return 4;
    case ActionType::t236: return 6;
    case ActionType::t333: return 3;
  }
  return 0;
}

const char* action_type_name(ActionType t) {
  switch (t) {
    case ActionType::t244: return "(2,4,4)";
    case ActionType::t236: return "(2,3,6)";
    case ActionType::t333: return "(3,3,3)";
  }
  return "?";
}

namespace {

std::vector<TriangleCandidate> build_candidates() {
  std::vector<TriangleCandidate> out;
  auto push = [&out](long k, long l, long m, ActionType type) {
    Rational a = Rational(1) - Rational(1, k) - Rational(1, l) - Rational(1, m);
    if (!(Rational(0) < a)) return;  // the unscaled base triples are Euclidean
    out.push_back({TriangularSignature(k, l, m), type, false});
  };
  // doubled (2,4,4): the two 4-slots are interchangeable, keep e2 <= e3
  for (int e1 = 1; e1 <= 2; ++e1)
    for (int e2 = 1; e2 <= 2; ++e2)
      for (int e3 = e2; e3 <= 2; ++e3) push(2 * e1, 4 * e2, 4 * e3, ActionType::t244);
  // doubled (3,3,3): all slots interchangeable, keep sorted
  for (int e1 = 1; e1 <= 2; ++e1)
    for (int e2 = e1; e2 <= 2; ++e2)
      for (int e3 = e2; e3 <= 2; ++e3) push(3 * e1, 3 * e2, 3 * e3, ActionType::t333);
  // doubled (2,3,6): all slots distinct
  for (int e1 = 1; e1 <= 2; ++e1)
    for (int e2 = 1; e2 <= 2; ++e2)
      for (int e3 = 1; e3 <= 2; ++e3) push(2 * e1, 3 * e2, 6 * e3, ActionType::t236);
  return out;
}

std::vector<TriangleInclusion> build_inclusions();

std::vector<TriangleCandidate> build_candidates_with_fullness() {
  std::vector<TriangleCandidate> cands = build_candidates();
  for (auto& c : cands) {
    c.full = true;
    for (const auto& inc : build_inclusions())
      if (inc.sub.same_periods(c.sig)) c.full = false;
  }
  return cands;
}

std::vector<TriangleInclusion> build_inclusions() {
  auto edge = [](long a1, long a2, long a3, long b1, long b2, long b3, long idx) {
    TriangleInclusion e{TriangularSignature(a1, a2, a3), TriangularSignature(b1, b2, b3), idx};
    return e;
  };
  std::vector<TriangleInclusion> out = {
      edge(4, 8, 8, 2, 8, 8, 2),    edge(2, 8, 8, 2, 4, 8, 2),   edge(4, 4, 4, 2, 4, 8, 2),
      edge(3, 6, 6, 2, 6, 6, 2),    edge(3, 3, 6, 2, 3, 12, 2),  edge(6, 6, 6, 3, 3, 6, 3),
      edge(6, 6, 6, 2, 6, 12, 2),   edge(2, 6, 12, 2, 3, 12, 3), edge(4, 3, 12, 2, 3, 12, 4),
  };
  return out;
}

}  // namespace

const std::vector<TriangleCandidate>& triangle_candidates() {
  static const std::vector<TriangleCandidate> cands = build_candidates_with_fullness();
  return cands;
}

std::vector<TriangularSignature> triangular_symmetric_candidates() {
  std::vector<TriangularSignature> out;
  for (const auto& c : triangle_candidates()) out.push_back(c.sig);
  return out;
}

const TriangleCandidate* find_candidate(const TriangularSignature& t) {
  for (const auto& c : triangle_candidates())
    if (c.sig.same_periods(t)) return &c;
  return nullptr;
}

const std::vector<TriangleInclusion>& candidate_inclusions() {
  static const std::vector<TriangleInclusion> incs = build_inclusions();
  return incs;
}

bool is_full_signature(const TriangularSignature& t) {
  const TriangleCandidate* c = find_candidate(t);
  if (!c) fail(errc::not_found, t.str() + " is not a candidate triple");
  return c->full;
}

std::optional<TriangularSignature> parse_triangle(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != '[' && ch != ']' && ch != ' ') s.push_back(ch);
  std::array<long, 3> p{};
  std::istringstream is(s);
  for (int i = 0; i < 3; ++i) {
    if (!(is >> p[i])) return std::nullopt;
    if (i < 2) {
      char comma = 0;
      if (!(is >> comma) || comma != ',') return std::nullopt;
    }
  }
  char extra = 0;
  if (is >> extra) return std::nullopt;
  if (p[0] < 2 || p[1] < 2 || p[2] < 2) return std::nullopt;
  Rational a = Rational(1) - Rational(1, p[0]) - Rational(1, p[1]) - Rational(1, p[2]);
  if (!(Rational(0) < a)) return std::nullopt;
  return TriangularSignature(p[0], p[1], p[2]);
}

}  // namespace eh
