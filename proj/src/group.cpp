#include "eh/group.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace eh {

namespace {

long long fdiv(long long a, long long b) {
  long long q = a / b, r = a % b;
  return r < 0 ? q - 1 : q;
}

long long fmodp(long long a, long long b) {
  long long r = a % b;
  return r < 0 ? r + b : r;
}

Block bnorm(const GroupSpec& g, long long r, long long s, long long q) {
  long long kr = fdiv(r, g.d), ks = fdiv(s, g.e);
  Block b;
  b.r = static_cast<long>(r - kr * g.d);
  b.s = static_cast<long>(s - ks * g.e);
  b.q = static_cast<int>(fmodp(q + g.w1 * kr + g.w2 * ks, 2));
  return b;
}

Block bmul(const GroupSpec& g, const Block& x, const Block& y) {
  // second^s1 first^r2 = first^r2 second^s1 rho^(gcom s1 r2)
  int cross = g.gcom & static_cast<int>(x.s & y.r & 1);
  return bnorm(g, static_cast<long long>(x.r) + y.r, static_cast<long long>(x.s) + y.s,
               static_cast<long long>(x.q) + y.q + cross);
}

Block binv(const GroupSpec& g, const Block& x) {
  int cross = g.gcom & static_cast<int>(x.r & x.s & 1);
  return bnorm(g, -static_cast<long long>(x.r), -static_cast<long long>(x.s),
               static_cast<long long>(x.q) + cross);
}

Block bpow(const GroupSpec& g, const Block& x, long long k) {
  if (k < 0) return binv(g, bpow(g, x, -k));
  // (first^r second^s rho^q)^k picks up gcom*r*s*k(k-1)/2 from the swaps
  long long m = k % 4;
  int tri = static_cast<int>((m * (m - 1) / 2) % 2);
  int cross = g.gcom & static_cast<int>(x.r & x.s & 1) & tri;
  return bnorm(g, x.r * k, x.s * k, static_cast<long long>(x.q) * (k & 1) + cross);
}

Block conj_c1(const GroupSpec& g, const Block& x) {
  Block out = bmul(g, bpow(g, g.cf, x.r), bpow(g, g.cs, x.s));
  out.q = (out.q + x.q) & 1;
  return out;
}

Block conj_c_t(const GroupSpec& g, const Block& x, int t) {
  Block out = bmul(g, bpow(g, g.cfpow[t], x.r), bpow(g, g.cspow[t], x.s));
  out.q = (out.q + x.q) & 1;
  return out;
}

Block tau_block(const GroupSpec& g, const Block& x) {
  Block out = bmul(g, bpow(g, g.tf, x.r), bpow(g, g.ts, x.s));
  out.q = (out.q + x.q) & 1;
  return out;
}

Element mul0(const GroupSpec& g, const Element& x, const Element& y) {
  // (Bx c^tx)(By c^ty) = Bx conj_{c^tx}(By) c^(tx+ty)
  Block b = bmul(g, Block{x.r, x.s, x.q}, conj_c_t(g, Block{y.r, y.s, y.q}, x.t));
  int t = x.t + y.t;
  int q = b.q;
  if (t >= g.tc) {
    t -= g.tc;
    q ^= g.params.mu;  // c^tc = rho^mu
  }
  return Element{b.r, b.s, t, 0, q & 1};
}

Element inv0(const GroupSpec& g, const Element& x) {
  Block bi = binv(g, Block{x.r, x.s, x.q});
  int t2 = (g.tc - x.t) % g.tc;
  Block cb = conj_c_t(g, bi, t2);
  int q = (cb.q + (x.t != 0 ? g.params.mu : 0)) & 1;
  return Element{cb.r, cb.s, t2, 0, q};
}

Element conj_tau(const GroupSpec& g, const Element& x) {
  // tau (B c^t) tau = (tau B tau)(tau c tau)^t
  Block tb = tau_block(g, Block{x.r, x.s, x.q});
  return mul0(g, Element{tb.r, tb.s, 0, 0, tb.q}, g.tcpow[x.t]);
}

}  // namespace

char family_letter(Family f) { return "ABCDEF"[static_cast<int>(f)]; }

std::optional<Family> parse_family(char c) {
  const char* s = "ABCDEF";
  for (int i = 0; i < 6; ++i)
    if (s[i] == c || (s[i] + 32) == c) return static_cast<Family>(i);
  return std::nullopt;
}

std::string variant_label(Family f, const Variant& v) {
  if (f == Family::B || f == Family::D || f == Family::F)
    return std::to_string(v.eps) + std::to_string(v.eps2);
  return std::to_string(v.eps);
}

std::optional<Variant> parse_variant(Family f, const std::string& s) {
  const bool two = f == Family::B || f == Family::D || f == Family::F;
  if (s.size() != (two ? 2u : 1u)) return std::nullopt;
  for (char c : s)
    if (c != '0' && c != '1') return std::nullopt;
  Variant v;
  v.eps = s[0] - '0';
  if (two) v.eps2 = s[1] - '0';
  return v;
}

GroupSpec::GroupSpec(Family f, long nn, Params pb, Variant vb, bool with_tau)
    : family(f), n(nn), params(pb), variant(vb), tau(with_tau) {
  if (n < 1) fail(errc::bad_parameter, "n must be >= 1");
  auto bit = [](int v) { return v == 0 || v == 1; };
  if (!bit(params.alpha) || !bit(params.beta) || !bit(params.gamma) || !bit(params.mu) ||
      !bit(variant.eps) || !bit(variant.eps2))
    fail(errc::bad_parameter, "presentation bits must be 0 or 1");
  const bool ab = f == Family::A || f == Family::B;
  const bool cd = f == Family::C || f == Family::D;
  const bool ef = f == Family::E || f == Family::F;
  if (ab && params.beta) fail(errc::bad_parameter, "families A,B do not use beta");
  if (cd && params.gamma) fail(errc::bad_parameter, "families C,D do not use gamma");
  if (ef && params.alpha) fail(errc::bad_parameter, "families E,F do not use alpha");
  const bool two = f == Family::B || f == Family::D || f == Family::F;
  if (!two && variant.eps2) fail(errc::bad_parameter, "families A,C,E have a single variant bit");
  if (f == Family::B && n % 2)
    fail(errc::bad_parameter, "family B needs even n, got " + std::to_string(n));
  if ((f == Family::D || f == Family::F) && n % 3)
    fail(errc::bad_parameter, "families D,F need 3 | n, got " + std::to_string(n));
  if (ef && tau) fail(errc::family_unsupported, "tau extension exists for families A-D only");

  const int al = params.alpha, be = params.beta, ga = params.gamma, mu = params.mu;
  const int ep = variant.eps, ep2 = variant.eps2;
  switch (f) {
    case Family::A:
      d = n; e = n; tc = 4;
      w1 = ep; w2 = ep; gcom = ga;
      cf = Block{0, -1, al}; cs = Block{1, 0, 0};
      tf = Block{1, 0, al}; ts = Block{0, -1, 0};
      break;
    case Family::B:
      d = n; e = n / 2; tc = 4;
      w1 = ep; w2 = ep2; gcom = ga;
      cf = Block{-1, -1, al}; cs = Block{2, 1, (al + ga) & 1};
      tf = Block{1, 0, al}; ts = Block{-2, -1, (al + ga) & 1};
      break;
    case Family::C:
      d = n; e = n; tc = 6;
      w1 = static_cast<int>((ep + n * al) & 1); w2 = ep; gcom = (al + mu) & 1;
      cf = Block{0, 1, al}; cs = Block{-1, 1, be};
      tf = Block{-1, 0, 0}; ts = Block{-1, 1, be};
      break;
    case Family::D:
      d = n; e = n / 3; tc = 6;
      w1 = ep; w2 = ep2; gcom = (al + mu) & 1;
      cf = Block{2, -1, (al + be + mu) & 1}; cs = Block{3, -1, (be + mu) & 1};
      // the rho exponent on tau w tau carries the commutation cocycle: for
      // alpha + mu odd the plain beta exponent fails to invert theta_2
      tf = Block{2, -1, (al + be + mu) & 1}; ts = Block{3, -2, (al + be + mu) & 1};
      break;
    case Family::E:
      d = n; e = n; tc = 3;
      w1 = static_cast<int>((ep + n * be) & 1); w2 = ep; gcom = ga;
      cf = Block{-1, 1, 0}; cs = Block{-1, 0, be};
      break;
    case Family::F:
      d = n; e = n / 3; tc = 3;
      w1 = ep; w2 = ep2; gcom = ga;
      cf = Block{1, -1, be}; cs = Block{3, -2, be};
      break;
  }
  cf = bnorm(*this, cf.r, cf.s, cf.q);
  cs = bnorm(*this, cs.r, cs.s, cs.q);

  cfpow[0] = bnorm(*this, 1, 0, 0);
  cspow[0] = bnorm(*this, 0, 1, 0);
  for (int j = 1; j <= tc; ++j) {
    cfpow[j] = conj_c1(*this, cfpow[j - 1]);
    cspow[j] = conj_c1(*this, cspow[j - 1]);
  }

  if (tau) {
    tf = bnorm(*this, tf.r, tf.s, tf.q);
    ts = bnorm(*this, ts.r, ts.s, ts.q);
    Element cinv = inv0(*this, Element{0, 0, 1, 0, 0});
    switch (f) {
      case Family::A:
      case Family::B:
        tc_img = cinv;
        break;
      case Family::C: {
        Block yi = bnorm(*this, 0, -1, (al + be) & 1);
        tc_img = mul0(*this, Element{yi.r, yi.s, 0, 0, yi.q}, cinv);
        break;
      }
      case Family::D: {
        Block vi = bnorm(*this, -1, 0, (al + be) & 1);
        tc_img = mul0(*this, Element{vi.r, vi.s, 0, 0, vi.q}, cinv);
        break;
      }
      default:
        break;
    }
    tcpow[0] = Element{};
    for (int j = 1; j <= tc; ++j) tcpow[j] = mul0(*this, tcpow[j - 1], tc_img);
  }
}

long long GroupSpec::order() const {
  return static_cast<long long>(d) * e * tc * 2 * (tau ? 2 : 1);
}

bool GroupSpec::consistent() const {
  // the central wraps must commute with everything
  if ((gcom * (d % 2)) & 1) return false;
  if ((gcom * (e % 2)) & 1) return false;
  // conjugation by c preserves the power relations
  if (!(bpow(*this, cf, d) == Block{0, 0, w1})) return false;
  if (!(bpow(*this, cs, e) == Block{0, 0, w2})) return false;
  // conjugation by c preserves the commutation cocycle
  {
    Block lhs = bmul(*this, cs, cf);
    Block rhs = bmul(*this, cf, cs);
    rhs.q = (rhs.q + gcom) & 1;
    if (!(lhs == rhs)) return false;
  }
  // c^tc conjugates like rho^mu, i.e. trivially
  if (!(cfpow[tc] == cfpow[0])) return false;
  if (!(cspow[tc] == cspow[0])) return false;
  if (!tau) return true;

  // tau is an involution on the generators
  if (!(tau_block(*this, tf) == cfpow[0])) return false;
  if (!(tau_block(*this, ts) == cspow[0])) return false;
  // tau preserves the power relations and the cocycle
  if (!(bpow(*this, tf, d) == Block{0, 0, w1})) return false;
  if (!(bpow(*this, ts, e) == Block{0, 0, w2})) return false;
  {
    Block lhs = bmul(*this, ts, tf);
    Block rhs = bmul(*this, tf, ts);
    rhs.q = (rhs.q + gcom) & 1;
    if (!(lhs == rhs)) return false;
  }
  // tau conj_c tau = conj by tau c tau
  for (const Block& b : {cfpow[0], cspow[0]}) {
    Block viac = tau_block(*this, conj_c1(*this, b));
    Block tb = tau_block(*this, b);
    Element rhs =
        mul0(*this, mul0(*this, tc_img, Element{tb.r, tb.s, 0, 0, tb.q}), inv0(*this, tc_img));
    if (!(Element{viac.r, viac.s, 0, 0, viac.q} == rhs)) return false;
  }
  // tau(tau c tau)tau = c
  if (!(conj_tau(*this, tc_img) == Element{0, 0, 1, 0, 0})) return false;
  // (tau c tau)^tc = rho^mu
  if (!(tcpow[tc] == Element{0, 0, 0, 0, params.mu})) return false;
  return true;
}

std::string GroupSpec::label() const {
  std::string s(1, family_letter(family));
  s += "_" + variant_label(family, variant) + "^" + std::to_string(n);
  if (tau) s += "+tau";
  return s;
}

Element identity(const GroupSpec&) { return Element{}; }

Element gen_first(const GroupSpec& g) {
  Block b = bnorm(g, 1, 0, 0);
  return Element{b.r, b.s, 0, 0, b.q};
}

Element gen_second(const GroupSpec& g) {
  Block b = bnorm(g, 0, 1, 0);
  return Element{b.r, b.s, 0, 0, b.q};
}

Element gen_c(const GroupSpec& g) {
  if (g.tc == 1) return Element{0, 0, 0, 0, g.params.mu};
  return Element{0, 0, 1, 0, 0};
}

Element gen_rho(const GroupSpec&) { return Element{0, 0, 0, 0, 1}; }

Element gen_tau(const GroupSpec& g) {
  if (!g.tau) fail(errc::bad_parameter, "group was built without tau");
  return Element{0, 0, 0, 1, 0};
}

Element mul(const GroupSpec& g, const Element& x, const Element& y) {
  Element yb{y.r, y.s, y.t, 0, y.q};
  if (x.p) yb = conj_tau(g, yb);
  Element out = mul0(g, Element{x.r, x.s, x.t, 0, x.q}, yb);
  out.p = (x.p + y.p) & 1;
  return out;
}

Element inv(const GroupSpec& g, const Element& x) {
  if (!x.p) return inv0(g, x);
  Element w = conj_tau(g, inv0(g, Element{x.r, x.s, x.t, 0, x.q}));
  w.p = 1;
  return w;
}

Element power(const GroupSpec& g, const Element& x, long long k) {
  if (k < 0) return inv(g, power(g, x, -k));
  if (x.t == 0 && x.p == 0) {
    Block b = bpow(g, Block{x.r, x.s, x.q}, k);
    return Element{b.r, b.s, 0, 0, b.q};
  }
  Element acc = identity(g);
  Element base = x;
  while (k) {
    if (k & 1) acc = mul(g, acc, base);
    base = mul(g, base, base);
    k >>= 1;
  }
  return acc;
}

Element conjugate(const GroupSpec& g, const Element& h, const Element& x) {
  return mul(g, mul(g, h, x), inv(g, h));
}

long long order(const GroupSpec& g, const Element& x) {
  Element acc = x;
  long long k = 1;
  const Element id = identity(g);
  const long long cap = g.order();
  while (!(acc == id)) {
    acc = mul(g, acc, x);
    if (++k > cap) fail(errc::spec_mismatch, "order loop exceeded the group order");
  }
  return k;
}

long long element_index(const GroupSpec& g, const Element& x) {
  long long idx = (static_cast<long long>(x.r) * g.e + x.s) * g.tc + x.t;
  if (g.tau) idx = idx * 2 + x.p;
  return idx * 2 + x.q;
}

Element element_at(const GroupSpec& g, long long index) {
  Element x;
  x.q = static_cast<int>(index & 1);
  index >>= 1;
  if (g.tau) {
    x.p = static_cast<int>(index & 1);
    index >>= 1;
  }
  x.t = static_cast<int>(index % g.tc);
  index /= g.tc;
  x.s = static_cast<long>(index % g.e);
  x.r = static_cast<long>(index / g.e);
  return x;
}

std::vector<Element> enumerate(const GroupSpec& g) {
  std::vector<Element> out;
  out.reserve(static_cast<size_t>(g.order()));
  for (long long i = 0; i < g.order(); ++i) out.push_back(element_at(g, i));
  return out;
}

std::string to_text(const GroupSpec& g, const Element& x) {
  const bool vw = g.family == Family::B || g.family == Family::D || g.family == Family::F;
  const char* f1 = vw ? "v" : "x";
  const char* f2 = vw ? "w" : "y";
  std::ostringstream os;
  auto emit = [&os](const char* sym, long long exp) {
    if (exp == 0) return;
    if (os.tellp() > 0) os << " ";
    os << sym;
    if (exp != 1) os << "^" << exp;
  };
  emit(f1, x.r);
  emit(f2, x.s);
  emit("c", x.t);
  emit("\xcf\x84", x.p);  // tau
  emit("\xcf\x81", x.q);  // rho
  std::string s = os.str();
  return s.empty() ? "1" : s;
}

std::vector<Word> relator_words(const GroupSpec& g) {
  const long nn = g.n;
  const int al = g.params.alpha, be = g.params.beta, ga = g.params.gamma, mu = g.params.mu;
  const int ep = g.variant.eps, ep2 = g.variant.eps2;
  using G = Gen;
  std::vector<Word> w;
  w.push_back({{G::rho, 2}});
  for (G x : {G::first, G::second, G::c})
    w.push_back({{x, -1}, {G::rho, -1}, {x, 1}, {G::rho, 1}});
  auto comm = [&](int rbit) {
    w.push_back({{G::first, -1}, {G::second, -1}, {G::first, 1}, {G::second, 1}, {G::rho, rbit}});
  };
  switch (g.family) {
    case Family::A:
      w.push_back({{G::first, nn}, {G::rho, ep}});
      w.push_back({{G::c, 4}, {G::rho, mu}});
      comm(ga);
      w.push_back({{G::c, 1}, {G::second, 1}, {G::c, -1}, {G::first, -1}});
      w.push_back({{G::c, 1}, {G::first, 1}, {G::c, -1}, {G::second, 1}, {G::rho, al}});
      break;
    case Family::B:
      w.push_back({{G::c, 4}, {G::rho, mu}});
      w.push_back({{G::first, nn}, {G::rho, ep}});
      w.push_back({{G::second, nn / 2}, {G::rho, ep2}});
      w.push_back(
          {{G::c, 1}, {G::first, 1}, {G::c, -1}, {G::second, 1}, {G::first, 1}, {G::rho, al}});
      w.push_back({{G::c, 1}, {G::second, 1}, {G::c, -1}, {G::first, -2}, {G::second, -1},
                   {G::rho, al + ga}});
      comm(ga);
      break;
    case Family::C:
      w.push_back({{G::second, nn}, {G::rho, ep}});
      w.push_back({{G::c, 6}, {G::rho, mu}});
      w.push_back({{G::c, 1}, {G::first, 1}, {G::c, -1}, {G::second, -1}, {G::rho, al}});
      w.push_back(
          {{G::c, 1}, {G::second, 1}, {G::c, -1}, {G::second, -1}, {G::first, 1}, {G::rho, be}});
      comm(al + mu);
      break;
    case Family::D:
      w.push_back({{G::c, 6}, {G::rho, mu}});
      w.push_back({{G::first, nn}, {G::rho, ep}});
      w.push_back({{G::second, nn / 3}, {G::rho, ep2}});
      w.push_back({{G::c, 1}, {G::first, 1}, {G::c, -1}, {G::second, 1}, {G::first, -2},
                   {G::rho, al + mu + be}});
      w.push_back({{G::c, 1}, {G::second, 1}, {G::c, -1}, {G::second, 1}, {G::first, -3},
                   {G::rho, be + mu}});
      comm(al + mu);
      break;
    case Family::E:
      w.push_back({{G::c, 3}, {G::rho, mu}});
      // conjugating y^n = rho^eps by c gives x^n = rho^(eps + n*beta)
      w.push_back({{G::second, nn}, {G::rho, ep}});
      w.push_back({{G::c, 1}, {G::first, 1}, {G::c, -1}, {G::second, -1}, {G::first, 1}});
      w.push_back({{G::c, 1}, {G::second, 1}, {G::c, -1}, {G::first, 1}, {G::rho, be}});
      comm(ga);
      break;
    case Family::F:
      w.push_back({{G::c, 3}, {G::rho, mu}});
      w.push_back({{G::first, nn}, {G::rho, ep}});
      w.push_back({{G::second, nn / 3}, {G::rho, ep2}});
      w.push_back(
          {{G::c, 1}, {G::first, 1}, {G::c, -1}, {G::second, 1}, {G::first, -1}, {G::rho, be}});
      w.push_back({{G::c, 1}, {G::second, 1}, {G::c, -1}, {G::second, 2}, {G::first, -3},
                   {G::rho, be}});
      comm(ga);
      break;
  }
  if (g.tau) {
    w.push_back({{G::tau, 2}});
    w.push_back({{G::tau, -1}, {G::rho, -1}, {G::tau, 1}, {G::rho, 1}});
    switch (g.family) {
      case Family::A:
        w.push_back({{G::tau, 1}, {G::first, 1}, {G::tau, 1}, {G::first, -1}, {G::rho, al}});
        w.push_back({{G::tau, 1}, {G::second, 1}, {G::tau, 1}, {G::second, 1}});
        w.push_back({{G::tau, 1}, {G::c, 1}, {G::tau, 1}, {G::c, 1}});
        break;
      case Family::B:
        w.push_back({{G::tau, 1}, {G::first, 1}, {G::tau, 1}, {G::first, -1}, {G::rho, al}});
        w.push_back({{G::tau, 1}, {G::second, 1}, {G::tau, 1}, {G::second, 1}, {G::first, 2},
                     {G::rho, al + ga}});
        w.push_back({{G::tau, 1}, {G::c, 1}, {G::tau, 1}, {G::c, 1}});
        break;
      case Family::C:
        w.push_back({{G::tau, 1}, {G::first, 1}, {G::tau, 1}, {G::first, 1}});
        w.push_back({{G::tau, 1}, {G::second, 1}, {G::tau, 1}, {G::second, -1}, {G::first, 1},
                     {G::rho, be}});
        w.push_back(
            {{G::tau, 1}, {G::c, 1}, {G::tau, 1}, {G::c, 1}, {G::second, 1}, {G::rho, al + be}});
        break;
      case Family::D:
        w.push_back({{G::tau, 1}, {G::first, 1}, {G::tau, 1}, {G::second, 1}, {G::first, -2},
                     {G::rho, al + be + mu}});
        w.push_back({{G::tau, 1}, {G::second, 1}, {G::tau, 1}, {G::second, 2}, {G::first, -3},
                     {G::rho, al + be + mu}});
        w.push_back(
            {{G::tau, 1}, {G::c, 1}, {G::tau, 1}, {G::c, 1}, {G::first, 1}, {G::rho, al + be}});
        break;
      default:
        break;
    }
  }
  return w;
}

Element eval_word(const GroupSpec& g, const Word& w) {
  Element acc = identity(g);
  for (const auto& [gen, exp] : w) {
    Element base;
    switch (gen) {
      case Gen::first: base = gen_first(g); break;
      case Gen::second: base = gen_second(g); break;
      case Gen::c: base = gen_c(g); break;
      case Gen::rho: base = gen_rho(g); break;
      case Gen::tau: base = gen_tau(g); break;
    }
    acc = mul(g, acc, power(g, base, exp));
  }
  return acc;
}

bool relators_hold(const GroupSpec& g) {
  if (!g.consistent()) return false;
  const Element id = identity(g);
  for (const Word& w : relator_words(g))
    if (!(eval_word(g, w) == id)) return false;
  std::vector<Element> gens = {gen_first(g), gen_second(g), gen_c(g), gen_rho(g)};
  if (g.tau) gens.push_back(gen_tau(g));
  for (const Element& a : gens)
    for (const Element& b : gens)
      for (const Element& c : gens)
        if (!(mul(g, mul(g, a, b), c) == mul(g, a, mul(g, b, c)))) return false;
  std::minstd_rand rng(12345);
  const long long n = g.order();
  for (int i = 0; i < 48; ++i) {
    Element a = element_at(g, static_cast<long long>(rng() % n));
    Element b = element_at(g, static_cast<long long>(rng() % n));
    Element c = element_at(g, static_cast<long long>(rng() % n));
    if (!(mul(g, mul(g, a, b), c) == mul(g, a, mul(g, b, c)))) return false;
    if (!(mul(g, a, inv(g, a)) == id)) return false;
    if (!(mul(g, inv(g, a), a) == id)) return false;
  }
  return true;
}

std::vector<Element> centralizer(const GroupSpec& g, const Element& x) {
  std::vector<Element> out;
  for (long long i = 0; i < g.order(); ++i) {
    Element h = element_at(g, i);
    if (mul(g, h, x) == mul(g, x, h)) out.push_back(h);
  }
  return out;
}

namespace {

std::vector<Element> conj_gens(const GroupSpec& g) {
  std::vector<Element> gens = {gen_first(g), gen_second(g), gen_c(g)};
  if (g.tau) gens.push_back(gen_tau(g));
  return gens;
}

std::vector<long long> class_orbit(const GroupSpec& g, const Element& x,
                                   const std::vector<Element>& gens) {
  std::vector<long long> orbit = {element_index(g, x)};
  std::vector<bool> seen(static_cast<size_t>(g.order()), false);
  seen[static_cast<size_t>(orbit[0])] = true;
  for (size_t head = 0; head < orbit.size(); ++head) {
    Element cur = element_at(g, orbit[head]);
    for (const Element& h : gens) {
      Element y = conjugate(g, h, cur);
      long long idx = element_index(g, y);
      if (!seen[static_cast<size_t>(idx)]) {
        seen[static_cast<size_t>(idx)] = true;
        orbit.push_back(idx);
      }
    }
  }
  return orbit;
}

}  // namespace

std::vector<Element> conjugacy_class(const GroupSpec& g, const Element& x) {
  std::vector<long long> orbit = class_orbit(g, x, conj_gens(g));
  std::sort(orbit.begin(), orbit.end());
  std::vector<Element> out;
  out.reserve(orbit.size());
  for (long long i : orbit) out.push_back(element_at(g, i));
  return out;
}

bool are_conjugate(const GroupSpec& g, const Element& x, const Element& y) {
  std::vector<long long> orbit = class_orbit(g, x, conj_gens(g));
  long long idx = element_index(g, y);
  return std::find(orbit.begin(), orbit.end(), idx) != orbit.end();
}

long long conjugacy_class_count(const GroupSpec& g) {
  const long long n = g.order();
  std::vector<bool> seen(static_cast<size_t>(n), false);
  std::vector<Element> gens = conj_gens(g);
  long long classes = 0;
  for (long long i = 0; i < n; ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    ++classes;
    for (long long j : class_orbit(g, element_at(g, i), gens)) seen[static_cast<size_t>(j)] = true;
  }
  return classes;
}

std::vector<Element> subgroup_generated(const GroupSpec& g, const std::vector<Element>& gens) {
  std::vector<Element> step;
  for (const Element& x : gens) {
    step.push_back(x);
    step.push_back(inv(g, x));
  }
  std::vector<bool> seen(static_cast<size_t>(g.order()), false);
  std::vector<long long> orbit = {element_index(g, identity(g))};
  seen[static_cast<size_t>(orbit[0])] = true;
  for (size_t head = 0; head < orbit.size(); ++head) {
    Element cur = element_at(g, orbit[head]);
    for (const Element& x : step) {
      long long idx = element_index(g, mul(g, cur, x));
      if (!seen[static_cast<size_t>(idx)]) {
        seen[static_cast<size_t>(idx)] = true;
        orbit.push_back(idx);
      }
    }
  }
  std::sort(orbit.begin(), orbit.end());
  std::vector<Element> out;
  out.reserve(orbit.size());
  for (long long i : orbit) out.push_back(element_at(g, i));
  return out;
}

Hom::Hom(GroupSpec dom, GroupSpec tgt, std::vector<long long> map, long long reached,
         long long image_size)
    : dom_(std::move(dom)), tgt_(std::move(tgt)), map_(std::move(map)), reached_(reached),
      image_size_(image_size) {}

bool Hom::defined_on(const Element& x) const {
  return map_[static_cast<size_t>(element_index(dom_, x))] >= 0;
}

Element Hom::apply(const Element& x) const {
  long long v = map_[static_cast<size_t>(element_index(dom_, x))];
  if (v < 0) fail(errc::not_found, "element outside the generated subgroup");
  return element_at(tgt_, v);
}

bool Hom::total() const { return reached_ == dom_.order(); }
bool Hom::injective() const { return image_size_ == reached_; }
bool Hom::surjective() const { return image_size_ == tgt_.order(); }

std::optional<Hom> hom_from_images(const GroupSpec& dom, const std::vector<Element>& gens,
                                   const GroupSpec& tgt, const std::vector<Element>& images) {
  if (gens.size() != images.size()) fail(errc::bad_parameter, "generator/image count mismatch");
  const long long n = dom.order();
  std::vector<long long> map(static_cast<size_t>(n), -1);
  std::vector<long long> queue;
  map[static_cast<size_t>(element_index(dom, identity(dom)))] =
      element_index(tgt, identity(tgt));
  queue.push_back(element_index(dom, identity(dom)));
  long long reached = 1;
  for (size_t head = 0; head < queue.size(); ++head) {
    Element u = element_at(dom, queue[head]);
    Element fu = element_at(tgt, map[static_cast<size_t>(queue[head])]);
    for (size_t i = 0; i < gens.size(); ++i) {
      long long v = element_index(dom, mul(dom, u, gens[i]));
      long long fv = element_index(tgt, mul(tgt, fu, images[i]));
      long long& slot = map[static_cast<size_t>(v)];
      if (slot < 0) {
        slot = fv;
        queue.push_back(v);
        ++reached;
      } else if (slot != fv) {
        return std::nullopt;
      }
    }
  }
  std::vector<long long> image;
  image.reserve(static_cast<size_t>(reached));
  for (long long v : map)
    if (v >= 0) image.push_back(v);
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return Hom(dom, tgt, std::move(map), reached, static_cast<long long>(image.size()));
}

ReducedQuotient reduced_quotient(const GroupSpec& g) {
  long long a = g.d, b = g.e;
  long long gc = std::gcd(a, b);
  return ReducedQuotient{{gc, a / gc * b}, g.tc};
}

}  // namespace eh
