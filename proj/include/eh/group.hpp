#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eh/error.hpp"

namespace eh {

// The six two-step nilpotent families. Each group is generated by two
// translations (x,y or v,w), a twist c of order 4, 6 or 3 mod rho, and the
// central involution rho; families A-D optionally extend by the symmetry tau.
enum class Family { A, B, C, D, E, F };

char family_letter(Family f);
std::optional<Family> parse_family(char c);

// Presentation bits. A,B use (alpha,gamma,mu); C,D use (alpha,beta,mu);
// E,F use (beta,gamma,mu). Unused bits must stay zero.
struct Params {
  int alpha = 0, beta = 0, gamma = 0, mu = 0;
  friend bool operator==(const Params&, const Params&) = default;
};

// Variant bits of the power relations: eps for every family, eps2 is delta
// for B and eps' for D,F; it must stay zero for A,C,E.
struct Variant {
  int eps = 0, eps2 = 0;
  friend bool operator==(const Variant&, const Variant&) = default;
};

std::string variant_label(Family f, const Variant& v);
std::optional<Variant> parse_variant(Family f, const std::string& s);

// Normal form first^r second^s c^t tau^p rho^q with 0 <= r < d, 0 <= s < e,
// 0 <= t < tc, p,q in {0,1}.
struct Element {
  long r = 0, s = 0;
  int t = 0, p = 0, q = 0;
  friend bool operator==(const Element&, const Element&) = default;
};

// tau-free, twist-free part first^r second^s rho^q.
struct Block {
  long r = 0, s = 0;
  int q = 0;
  friend bool operator==(const Block&, const Block&) = default;
};

struct GroupSpec {
  GroupSpec(Family f, long n, Params pb, Variant vb, bool with_tau = false);

  Family family;
  long n;
  Params params;
  Variant variant;
  bool tau;

  long d = 1, e = 1;  // moduli of the two translation generators
  int tc = 1;         // twist order mod rho
  int w1 = 0, w2 = 0; // first^d = rho^w1, second^e = rho^w2
  int gcom = 0;       // second*first = first*second*rho^gcom
  Block cf{}, cs{};   // c-conjugates of the generators
  Block tf{}, ts{};   // tau-conjugates (families A-D)
  Element tc_img{};   // tau c tau

  std::array<Block, 7> cfpow{}, cspow{};  // conjugation by c^j, j <= tc
  std::array<Element, 7> tcpow{};         // (tau c tau)^j, j <= tc

  long long order() const;
  // Mechanical well-definedness of the cocycle data: wrap bits match the
  // commutation cocycle, conjugation by c and tau preserve the relations,
  // c^tc and (tau c tau)^tc act as rho^mu.
  bool consistent() const;
  std::string label() const;
};

Element identity(const GroupSpec& g);
Element gen_first(const GroupSpec& g);
Element gen_second(const GroupSpec& g);
Element gen_c(const GroupSpec& g);
Element gen_rho(const GroupSpec& g);
Element gen_tau(const GroupSpec& g);  // requires with_tau

Element mul(const GroupSpec& g, const Element& x, const Element& y);
Element inv(const GroupSpec& g, const Element& x);
Element power(const GroupSpec& g, const Element& x, long long k);
Element conjugate(const GroupSpec& g, const Element& h, const Element& x);  // h x h^-1
long long order(const GroupSpec& g, const Element& x);

long long element_index(const GroupSpec& g, const Element& x);
Element element_at(const GroupSpec& g, long long index);
std::vector<Element> enumerate(const GroupSpec& g);

std::string to_text(const GroupSpec& g, const Element& x);

// Face relators of the presentation (plus rho-centrality and the tau action
// when present), as words over the generator alphabet.
enum class Gen { first, second, c, rho, tau };
using Word = std::vector<std::pair<Gen, long long>>;
std::vector<Word> relator_words(const GroupSpec& g);
Element eval_word(const GroupSpec& g, const Word& w);

// consistent() plus every relator word evaluating to the identity plus
// associativity spot checks.
bool relators_hold(const GroupSpec& g);

std::vector<Element> centralizer(const GroupSpec& g, const Element& x);
std::vector<Element> conjugacy_class(const GroupSpec& g, const Element& x);
bool are_conjugate(const GroupSpec& g, const Element& x, const Element& y);
long long conjugacy_class_count(const GroupSpec& g);
std::vector<Element> subgroup_generated(const GroupSpec& g, const std::vector<Element>& gens);

// Homomorphism from the subgroup generated by gens, propagated over the
// Cayley graph with every edge checked. Null when the assignment is
// inconsistent.
class Hom {
public:
  Hom(GroupSpec dom, GroupSpec tgt, std::vector<long long> map, long long reached,
      long long image_size);
  const GroupSpec& domain() const { return dom_; }
  const GroupSpec& target() const { return tgt_; }
  bool defined_on(const Element& x) const;
  Element apply(const Element& x) const;
  bool total() const;       // defined on the whole domain
  bool injective() const;
  bool surjective() const;  // onto the whole target

private:
  GroupSpec dom_, tgt_;
  std::vector<long long> map_;
  long long reached_, image_size_;
};

std::optional<Hom> hom_from_images(const GroupSpec& dom, const std::vector<Element>& gens,
                                   const GroupSpec& tgt, const std::vector<Element>& images);

struct ReducedQuotient {
  std::array<long long, 2> factors;  // invariant factors of the translation part
  int twist;
  friend bool operator==(const ReducedQuotient&, const ReducedQuotient&) = default;
};

// The quotient by the central rho: (Z_d + Z_e) split by Z_tc.
ReducedQuotient reduced_quotient(const GroupSpec& g);

}  // namespace eh
