#include "support/coset_enum.hpp"

#include <cstdlib>
#include <deque>
#include <stdexcept>

namespace eh_test {
namespace {

struct Enumerator {
  int ngens;
  long long max_cosets;
  std::vector<std::vector<long long>> tab;  // tab[coset][col], -1 undefined
  std::vector<long long> rep;               // union-find
  std::deque<long long> dead;               // merged cosets pending processing
  long long live = 0;

  static int col(int letter) {
    int g = std::abs(letter) - 1;
    return 2 * g + (letter < 0 ? 1 : 0);
  }

  long long find(long long a) {
    while (rep[a] != a) a = rep[a] = rep[rep[a]];
    return a;
  }

  long long new_coset() {
    if ((long long)tab.size() >= max_cosets)
      throw std::runtime_error("coset enumeration exceeded the coset bound");
    tab.emplace_back(2 * ngens, -1);
    rep.push_back((long long)tab.size() - 1);
    ++live;
    return (long long)tab.size() - 1;
  }

  long long step(long long a, int letter) {
    long long t = tab[a][col(letter)];
    return t < 0 ? -1 : find(t);
  }

  void set_edge(long long a, int letter, long long b) {
    tab[a][col(letter)] = b;
    tab[b][col(-letter)] = a;
  }

  void merge(long long a, long long b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    rep[b] = a;
    --live;
    dead.push_back(b);
  }

  void coincide(long long a, long long b) {
    merge(a, b);
    while (!dead.empty()) {
      long long y = dead.front();
      dead.pop_front();
      for (int c = 0; c < 2 * ngens; ++c) {
        long long d = tab[y][c];
        if (d < 0) continue;
        tab[y][c] = -1;
        long long e = find(y);
        long long dp = find(d);
        // transfer the edge y -c-> d onto the survivor
        int letter = (c % 2 == 0) ? (c / 2 + 1) : -(c / 2 + 1);
        long long ex = tab[e][col(letter)];
        if (ex >= 0 && find(ex) != dp)
          merge(ex, dp);
        else if (ex < 0) {
          long long back = tab[dp][col(-letter)];
          if (back >= 0 && find(back) != e)
            merge(back, e);
          set_edge(e, letter, dp);
        }
      }
    }
  }

  // scan relator w at coset a, defining cosets to close the cycle (HLT)
  void scan_and_fill(long long a, const std::vector<int>& w) {
    a = find(a);
    long long f = a, b = a;
    size_t i = 0, j = w.size();
    for (;;) {
      while (i < j) {
        long long nxt = step(f, w[i]);
        if (nxt < 0) break;
        f = nxt;
        ++i;
      }
      if (i == j) {
        if (f != b) coincide(f, b);
        return;
      }
      while (j > i) {
        long long prv = step(b, -w[j - 1]);
        if (prv < 0) break;
        b = prv;
        --j;
      }
      if (j == i) {
        if (f != b) coincide(f, b);
        return;
      }
      if (j == i + 1) {
        set_edge(f, w[i], b);
        return;
      }
      set_edge(f, w[i], new_coset());
      f = find(f);
      b = find(b);
      if (find(a) != a) a = find(a);
    }
  }

  // true when w scans completely and closes at every live coset
  bool closed(const std::vector<std::vector<int>>& relators) {
    for (long long a = 0; a < (long long)tab.size(); ++a) {
      if (find(a) != a) continue;
      for (int c = 0; c < 2 * ngens; ++c)
        if (tab[a][c] < 0) return false;
      for (const auto& w : relators) {
        long long f = a;
        for (int letter : w) {
          f = step(f, letter);
          if (f < 0) return false;
        }
        if (f != a) return false;
      }
    }
    return true;
  }

  void run(const std::vector<std::vector<int>>& relators) {
    new_coset();
    do {
      for (long long a = 0; a < (long long)tab.size(); ++a) {
        if (find(a) != a) continue;
        for (const auto& w : relators) {
          scan_and_fill(a, w);
          if (find(a) != a) break;
        }
        if (find(a) != a) continue;
        for (int g = 1; g <= ngens; ++g) {
          long long aa = find(a);
          if (tab[aa][col(g)] < 0) set_edge(aa, g, new_coset());
        }
      }
    } while (!closed(relators));
  }
};

}  // namespace

CosetTable coset_enumerate(int ngens, const std::vector<std::vector<int>>& relators,
                           long long max_cosets) {
  Enumerator e;
  e.ngens = ngens;
  e.max_cosets = max_cosets;
  e.run(relators);

  // compact live cosets
  std::vector<long long> label(e.tab.size(), -1);
  long long k = 0;
  for (long long a = 0; a < (long long)e.tab.size(); ++a)
    if (e.find(a) == a) label[a] = k++;
  CosetTable t;
  t.size = k;
  t.ngens = ngens;
  t.act.assign(2 * ngens, std::vector<long long>(k, -1));
  for (long long a = 0; a < (long long)e.tab.size(); ++a) {
    if (e.find(a) != a) continue;
    for (int c = 0; c < 2 * ngens; ++c)
      t.act[c][label[a]] = label[e.find(e.tab[a][c])];
  }
  return t;
}

long long tc_class_count(const CosetTable& t) {
  auto col = [](int letter) {
    int g = std::abs(letter) - 1;
    return 2 * g + (letter < 0 ? 1 : 0);
  };
  // spanning-tree word for each coset
  std::vector<int> parent_letter(t.size, 0);
  std::vector<long long> parent(t.size, -1);
  std::vector<long long> order;
  order.push_back(0);
  std::vector<char> seen(t.size, 0);
  seen[0] = 1;
  for (size_t q = 0; q < order.size(); ++q) {
    long long u = order[q];
    for (int g = 1; g <= t.ngens; ++g) {
      for (int s : {g, -g}) {
        long long v = t.act[col(s)][u];
        if (!seen[v]) {
          seen[v] = 1;
          parent[v] = u;
          parent_letter[v] = s;
          order.push_back(v);
        }
      }
    }
  }
  auto word_of = [&](long long u) {
    std::vector<int> w;
    while (u != 0) {
      w.push_back(parent_letter[u]);
      u = parent[u];
    }
    std::vector<int> r(w.rbegin(), w.rend());
    return r;
  };
  auto apply = [&](long long c, const std::vector<int>& w) {
    for (int letter : w) c = t.act[col(letter)][c];
    return c;
  };

  std::vector<char> done(t.size, 0);
  long long classes = 0;
  for (long long u = 0; u < t.size; ++u) {
    if (done[u]) continue;
    ++classes;
    std::vector<long long> orbit{u};
    done[u] = 1;
    for (size_t q = 0; q < orbit.size(); ++q) {
      auto w = word_of(orbit[q]);
      for (int g = 1; g <= t.ngens; ++g) {
        for (int s : {g, -g}) {
          long long c = t.act[col(-s)][0];
          c = apply(c, w);
          c = t.act[col(s)][c];
          if (!done[c]) {
            done[c] = 1;
            orbit.push_back(c);
          }
        }
      }
    }
  }
  return classes;
}

}  // namespace eh_test
