#include "eh/quadint.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

namespace eh {

const char* ring_name(Ring r) { return r == Ring::gauss ? "gauss" : "eisenstein"; }

std::string QuadInt::str() const {
  const char* u = ring == Ring::gauss ? "i" : "w";
  std::string s = std::to_string(a);
  if (b == 0) return s;
  s += (b > 0 ? "+" : "-");
  long long ab = b > 0 ? b : -b;
  if (ab != 1) s += std::to_string(ab);
  s += u;
  return s;
}

bool operator==(const QuadInt& x, const QuadInt& y) {
  return x.ring == y.ring && x.a == y.a && x.b == y.b;
}

namespace {
void check_same(const QuadInt& x, const QuadInt& y) {
  if (x.ring != y.ring) fail(errc::bad_parameter, "mixed rings");
}
}  // namespace

QuadInt add(const QuadInt& x, const QuadInt& y) {
  check_same(x, y);
  return {x.ring, x.a + y.a, x.b + y.b};
}

QuadInt sub(const QuadInt& x, const QuadInt& y) {
  check_same(x, y);
  return {x.ring, x.a - y.a, x.b - y.b};
}

QuadInt neg(const QuadInt& x) { return {x.ring, -x.a, -x.b}; }

QuadInt mul(const QuadInt& x, const QuadInt& y) {
  check_same(x, y);
  if (x.ring == Ring::gauss) return {x.ring, x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a};
  // (a+bw)(c+dw) = ac + (ad+bc)w + bd*w^2 with w^2 = w-1
  return {x.ring, x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
}

QuadInt conj(const QuadInt& x) {
  if (x.ring == Ring::gauss) return {x.ring, x.a, -x.b};
  return {x.ring, x.a + x.b, -x.b};  // conj(w) = 1 - w
}

long long norm(const QuadInt& x) {
  if (x.ring == Ring::gauss) return x.a * x.a + x.b * x.b;
  return x.a * x.a + x.a * x.b + x.b * x.b;
}

QuadInt pow(QuadInt x, unsigned k) {
  QuadInt acc{x.ring, 1, 0};
  while (k) {
    if (k & 1u) acc = mul(acc, x);
    x = mul(x, x);
    k >>= 1u;
  }
  return acc;
}

const std::vector<QuadInt>& units(Ring r) {
  static const std::vector<QuadInt> gu = {
      {Ring::gauss, 1, 0}, {Ring::gauss, -1, 0}, {Ring::gauss, 0, 1}, {Ring::gauss, 0, -1}};
  // 1, -1, w, -w, w^2 = -1+w, -w^2 = 1-w
  static const std::vector<QuadInt> eu = {
      {Ring::eisenstein, 1, 0},  {Ring::eisenstein, -1, 0}, {Ring::eisenstein, 0, 1},
      {Ring::eisenstein, 0, -1}, {Ring::eisenstein, -1, 1}, {Ring::eisenstein, 1, -1}};
  return r == Ring::gauss ? gu : eu;
}

bool is_unit(const QuadInt& x) { return norm(x) == 1; }

bool is_prime_ll(long long p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (long long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

bool is_split(long long p, Ring r) {
  if (!is_prime_ll(p)) fail(errc::not_prime, std::to_string(p));
  if (r == Ring::gauss) return p == 2 || p % 4 == 1;
  return p == 3 || p % 6 == 1;
}

std::pair<QuadInt, QuadInt> split(long long p, Ring r) {
  if (!is_split(p, r))
    fail(errc::does_not_split, std::to_string(p) + " is inert in " + ring_name(r));
  const long long bound = static_cast<long long>(std::sqrt(static_cast<double>(p))) + 2;
  for (long long a = 0; a <= bound; ++a)
    for (long long b = 0; b <= a; ++b) {
      QuadInt z{r, a, b};
      if (norm(z) == p) return {z, conj(z)};
    }
  fail(errc::does_not_split, std::to_string(p));
}

bool operator==(const AbelianInvariants& x, const AbelianInvariants& y) {
  return x.d1 == y.d1 && x.d2 == y.d2;
}

std::array<std::array<long long, 2>, 2> mult_matrix(const QuadInt& z) {
  // columns are z*1 and z*u for the ring generator u
  if (z.ring == Ring::gauss) return {{{z.a, -z.b}, {z.b, z.a}}};
  return {{{z.a, -z.b}, {z.b, z.a + z.b}}};
}

SmithData smith_2x2(std::array<std::array<long long, 2>, 2> m) {
  std::array<std::array<long long, 2>, 2> u{{{1, 0}, {0, 1}}};
  auto addrow = [&](int dst, int src, long long f) {
    for (int j = 0; j < 2; ++j) {
      m[dst][j] += f * m[src][j];
      u[dst][j] += f * u[src][j];
    }
  };
  auto addcol = [&](int dst, int src, long long f) {
    for (int i = 0; i < 2; ++i) m[i][dst] += f * m[i][src];
  };
  auto swaprows = [&] {
    std::swap(m[0], m[1]);
    std::swap(u[0], u[1]);
  };
  auto swapcols = [&] {
    std::swap(m[0][0], m[0][1]);
    std::swap(m[1][0], m[1][1]);
  };

  while (true) {
    if (m[0][0] == 0) {
      if (m[1][0] != 0) {
        swaprows();
      } else if (m[0][1] != 0) {
        swapcols();
      } else if (m[1][1] != 0) {
        swaprows();
        swapcols();
      } else {
        break;  // zero matrix
      }
      continue;
    }
    if (m[1][0] != 0) {
      addrow(1, 0, -(m[1][0] / m[0][0]));
      if (m[1][0] != 0) swaprows();
      continue;
    }
    if (m[0][1] != 0) {
      addcol(1, 0, -(m[0][1] / m[0][0]));
      if (m[0][1] != 0) swapcols();
      continue;
    }
    if (m[1][1] % m[0][0] != 0) {
      addrow(0, 1, 1);
      continue;
    }
    break;
  }
  for (int i = 0; i < 2; ++i)
    if (m[i][i] < 0) {
      for (int j = 0; j < 2; ++j) {
        m[i][j] = -m[i][j];
        u[i][j] = -u[i][j];
      }
    }
  SmithData out;
  out.d1 = m[0][0];
  out.d2 = m[1][1];
  out.U = u;
  return out;
}

AbelianInvariants quotient_invariants(const QuadInt& z) {
  if (z.a == 0 && z.b == 0) fail(errc::zero_modulus, "quotient by zero");
  SmithData s = smith_2x2(mult_matrix(z));
  return {s.d1, s.d2};
}

std::array<long long, 2> quotient_coords(const QuadInt& z, const QuadInt& w) {
  if (z.a == 0 && z.b == 0) fail(errc::zero_modulus, "quotient by zero");
  SmithData s = smith_2x2(mult_matrix(z));
  auto md = [](long long v, long long m) {
    if (m == 0) return v;
    long long r = v % m;
    return r < 0 ? r + m : r;
  };
  return {md(s.U[0][0] * w.a + s.U[0][1] * w.b, s.d1),
          md(s.U[1][0] * w.a + s.U[1][1] * w.b, s.d2)};
}

long long quotient_order(const QuadInt& z, const QuadInt& w) {
  SmithData s = smith_2x2(mult_matrix(z));
  auto coords = quotient_coords(z, w);
  auto ord1 = [](long long c, long long m) {
    if (m <= 1) return 1ll;
    return m / std::gcd(c, m);
  };
  return std::lcm(ord1(coords[0], s.d1), ord1(coords[1], s.d2));
}

std::vector<AbelianInvariants> sylow_types(long long p, int multiplicity, Ring r) {
  if (multiplicity < 0) fail(errc::bad_parameter, "negative multiplicity");
  if (p <= 3) fail(errc::not_applicable, "p = " + std::to_string(p) + " <= 3");
  if (!is_split(p, r))
    fail(errc::not_applicable, std::to_string(p) + " is inert in " + ring_name(r));
  std::vector<AbelianInvariants> out;
  auto ppow = [p](int e) {
    long long v = 1;
    for (int i = 0; i < e; ++i) v *= p;
    return v;
  };
  for (int l = 0; 2 * l <= multiplicity; ++l) out.push_back({ppow(l), ppow(multiplicity - l)});
  return out;
}

std::vector<long long> solve_twist(int t, long long q) {
  if (t != 3 && t != 4 && t != 6) fail(errc::bad_parameter, "twist order must be 3, 4 or 6");
  if (q < 1) fail(errc::bad_parameter, "modulus must be >= 1");
  std::vector<long long> out;
  for (long long k = 0; k < q; ++k) {
    long long v = (t == 4) ? k * k + 1 : k * k - k + 1;
    if (v % q == 0 && std::gcd(k, q) == 1) out.push_back(k);
  }
  return out;
}

bool twist_soluble(int t, long long q) {
  if (t != 3 && t != 4 && t != 6) fail(errc::bad_parameter, "twist order must be 3, 4 or 6");
  if (q < 1) fail(errc::bad_parameter, "modulus must be >= 1");
  const Ring r = (t == 4) ? Ring::gauss : Ring::eisenstein;
  const long long ram = (t == 4) ? 2 : 3;
  for (auto [p, e] : factorize(q)) {
    if (!is_split(p, r)) return false;
    if (p == ram && e > 1) return false;
  }
  return true;
}

std::vector<std::pair<long long, int>> factorize(long long n) {
  if (n < 1) fail(errc::bad_parameter, "factorize needs n >= 1");
  std::vector<std::pair<long long, int>> out;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

}  // namespace eh
