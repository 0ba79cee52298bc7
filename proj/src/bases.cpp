#include "verlinde/bases.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace verlinde {

namespace {

// Union-find on vertex labels, for component partitions and acyclicity.
struct Dsu {
  std::map<int, int> parent;
  explicit Dsu(const std::vector<int>& vertices) {
    for (int v : vertices) parent[v] = v;
  }
  int find(int x) {
    auto it = parent.find(x);
    if (it == parent.end()) throw std::invalid_argument("vertex not in set");
    while (it->second != x) {
      x = it->second;
      it = parent.find(x);
    }
    return x;
  }
  // returns false if already connected
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

bool acyclic_on(const std::vector<int>& vertices,
                const std::vector<Root>& edges) {
  Dsu d(vertices);
  for (const auto& e : edges)
    if (!d.unite(e.i, e.j)) return false;
  return true;
}

std::vector<int> full_vertex_set(int r) {
  std::vector<int> v(r);
  for (int i = 0; i < r; ++i) v[i] = i + 1;
  return v;
}

bool edge_less(const Root& a, const Root& b) {
  return a.i != b.i ? a.i < b.i : a.j < b.j;
}

}  // namespace

SetPartition components_on(const std::vector<int>& vertices,
                           const std::vector<Root>& edges) {
  Dsu d(vertices);
  for (const auto& e : edges) d.unite(e.i, e.j);
  std::map<int, std::vector<int>> blocks;
  for (int v : vertices) blocks[d.find(v)].push_back(v);
  SetPartition out;
  for (auto& [root, blk] : blocks) {
    std::sort(blk.begin(), blk.end());
    out.push_back(blk);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  return out;
}

std::vector<SetPartition> partition_sequence_on(
    const std::vector<int>& vertices, const OrderedBasis& B) {
  std::vector<SetPartition> out;
  int n = B.size();
  for (int j = 1; j <= n; ++j) {
    std::vector<Root> tail(B.roots.end() - j, B.roots.end());
    out.push_back(components_on(vertices, tail));
  }
  return out;
}

std::vector<SetPartition> partition_sequence(const OrderedBasis& B) {
  return partition_sequence_on(full_vertex_set(B.r), B);
}

bool dashv_on(const std::vector<int>& vertices, const OrderedBasis& B,
              const OrderedBasis& C) {
  auto target = partition_sequence_on(vertices, C);
  std::vector<int> idx(B.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = (int)i;
  std::sort(idx.begin(), idx.end());
  do {
    OrderedBasis re = B;
    for (size_t i = 0; i < idx.size(); ++i) re.roots[i] = B.roots[idx[i]];
    if (partition_sequence_on(vertices, re) == target) return false;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return true;
}

bool is_diagonal_on(const std::vector<int>& vertices,
                    const std::vector<OrderedBasis>& family) {
  size_t n = vertices.size();
  size_t expected = 1;
  for (size_t i = 2; i < n; ++i) expected *= i;
  if (family.size() != expected) return false;
  for (size_t a = 0; a < family.size(); ++a)
    for (size_t b = 0; b < family.size(); ++b)
      if (a != b && !dashv_on(vertices, family[a], family[b])) return false;
  return true;
}

bool is_diagonal(int r, const std::vector<OrderedBasis>& family) {
  return is_diagonal_on(full_vertex_set(r), family);
}

std::vector<OrderedBasis> hamiltonian_family_on(
    int r, const std::vector<int>& vertices, int start) {
  int n = (int)vertices.size();
  if (std::find(vertices.begin(), vertices.end(), start) == vertices.end())
    throw std::invalid_argument("start vertex not in set");
  std::vector<int> rest;
  for (int v : vertices)
    if (v != start) rest.push_back(v);
  std::sort(rest.begin(), rest.end());
  std::vector<OrderedBasis> out;
  do {
    // sigma(1) = start, sigma(2..n) = rest; basis entry t is the path edge
    // (sigma(n-t), sigma(n-t+1)), so the path's far end comes first.
    std::vector<int> sigma{start};
    sigma.insert(sigma.end(), rest.begin(), rest.end());
    std::vector<Root> roots;
    for (int t = 1; t <= n - 1; ++t)
      roots.push_back(Root{sigma[n - t - 1], sigma[n - t]});
    out.emplace_back(r, roots);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

std::vector<OrderedBasis> hamiltonian_family(int r, int start) {
  return hamiltonian_family_on(r, full_vertex_set(r), start);
}

EdgeOrder lex_edge_order(int r) { return lex_edge_order(full_vertex_set(r)); }

EdgeOrder lex_edge_order(const std::vector<int>& vertices) {
  EdgeOrder out;
  for (size_t a = 0; a < vertices.size(); ++a)
    for (size_t b = a + 1; b < vertices.size(); ++b)
      out.push_back(Root{std::min(vertices[a], vertices[b]),
                         std::max(vertices[a], vertices[b])});
  std::sort(out.begin(), out.end(), edge_less);
  return out;
}

Root link_edge(const Partition& p) {
  int m = *std::max_element(p.prime.begin(), p.prime.end());
  int top = *std::max_element(p.dprime.begin(), p.dprime.end());
  return Root{m, top};
}

EdgeOrder wall_adapted_order(const Partition& p) {
  Root link = link_edge(p);
  EdgeOrder out{link};
  std::vector<Root> crossing;
  for (int a : p.prime)
    for (int b : p.dprime) {
      Root e{std::min(a, b), std::max(a, b)};
      if (!(e == link)) crossing.push_back(e);
    }
  std::sort(crossing.begin(), crossing.end(), edge_less);
  out.insert(out.end(), crossing.begin(), crossing.end());
  auto internal = [&out](const std::vector<int>& blk) {
    for (size_t a = 0; a < blk.size(); ++a)
      for (size_t b = a + 1; b < blk.size(); ++b)
        out.push_back(Root{blk[a], blk[b]});
  };
  internal(p.prime);
  internal(p.dprime);
  return out;
}

EdgeOrder parse_edge_order(const std::string& text, int r) {
  EdgeOrder out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (tok.size() != 2 || !isdigit((unsigned char)tok[0]) ||
        !isdigit((unsigned char)tok[1]))
      throw std::invalid_argument("edge token must be two digits: " + tok);
    Root e{tok[0] - '0', tok[1] - '0'};
    if (e.i < 1 || e.j > r || e.i >= e.j)
      throw std::invalid_argument("edge out of range or not ascending: " + tok);
    out.push_back(e);
  }
  EdgeOrder all = lex_edge_order(full_vertex_set(r));
  EdgeOrder sorted = out;
  std::sort(sorted.begin(), sorted.end(), edge_less);
  if (sorted != all)
    throw std::invalid_argument("edge order must list every edge exactly once");
  return out;
}

std::vector<OrderedBasis> nbc_family_on(int r, const std::vector<int>& vertices,
                                        const EdgeOrder& order) {
  int n = (int)vertices.size();
  if ((int)order.size() != n * (n - 1) / 2)
    throw std::invalid_argument("edge order size mismatch");
  if (n == 1) return {OrderedBasis(r, std::vector<Root>{})};

  std::vector<OrderedBasis> out;
  std::vector<int> pick;
  // choose ascending positions into `order`; test independence incrementally
  auto rec = [&](auto&& self, int from, std::vector<Root>& roots) -> void {
    if ((int)roots.size() == n - 1) {
      // no-broken-circuit test: any earlier edge joined with a tail of the
      // basis must stay acyclic
      for (int m = 0; m < n - 1; ++m) {
        std::vector<Root> tail(roots.begin() + m, roots.end());
        tail.push_back(Root{});
        for (int e = 0; e < pick[m]; ++e) {
          tail.back() = order[e];
          if (!acyclic_on(vertices, tail)) return;
        }
      }
      out.emplace_back(r, roots);
      return;
    }
    for (int e = from; e < (int)order.size(); ++e) {
      roots.push_back(order[e]);
      if (acyclic_on(vertices, roots)) {
        pick.push_back(e);
        self(self, e + 1, roots);
        pick.pop_back();
      }
      roots.pop_back();
    }
  };
  std::vector<Root> roots;
  rec(rec, 0, roots);
  return out;
}

std::vector<OrderedBasis> nbc_family(int r, const EdgeOrder& order) {
  return nbc_family_on(r, full_vertex_set(r), order);
}

std::vector<OrderedBasis> restrict_to_wall(
    const std::vector<OrderedBasis>& family, const Partition& p) {
  // A full basis sees the wall when exactly one of its roots crosses the
  // partition; dropping that root then splits the tree into the two blocks.
  std::vector<bool> in_prime;
  int r = (int)(p.prime.size() + p.dprime.size());
  in_prime.assign(r + 1, false);
  for (int i : p.prime) in_prime[i] = true;
  std::vector<OrderedBasis> out;
  for (const auto& B : family) {
    int crossing = 0;
    for (const auto& rt : B.roots)
      if (in_prime[rt.i] != in_prime[rt.j]) ++crossing;
    if (crossing == 1) out.push_back(B);
  }
  return out;
}

OrderedBasis compose_wall_basis(int r, const Root& link,
                                const OrderedBasis& left,
                                const OrderedBasis& right) {
  std::vector<Root> roots{link};
  roots.insert(roots.end(), left.roots.begin(), left.roots.end());
  roots.insert(roots.end(), right.roots.begin(), right.roots.end());
  return OrderedBasis(r, roots);
}

WallBases wall_bases(const Partition& p) {
  int r = (int)(p.prime.size() + p.dprime.size());
  WallBases wb;
  wb.link = link_edge(p);
  wb.left = nbc_family_on(r, p.prime, lex_edge_order(p.prime));
  wb.right = nbc_family_on(r, p.dprime, lex_edge_order(p.dprime));
  return wb;
}

OrderedBasis permute_basis(const OrderedBasis& B,
                           const std::vector<int>& sigma) {
  if ((int)sigma.size() != B.r)
    throw std::invalid_argument("permutation size mismatch");
  std::vector<Root> roots;
  for (const auto& rt : B.roots)
    roots.push_back(Root{sigma[rt.i - 1], sigma[rt.j - 1]});
  return OrderedBasis(B.r, roots);
}

std::vector<OrderedBasis> permute_family(const std::vector<OrderedBasis>& fam,
                                         const std::vector<int>& sigma) {
  std::vector<OrderedBasis> out;
  for (const auto& B : fam) out.push_back(permute_basis(B, sigma));
  return out;
}

std::vector<std::pair<int, int>> basis_key(const OrderedBasis& B) {
  std::vector<std::pair<int, int>> key;
  for (const auto& rt : B.roots) key.emplace_back(rt.i, rt.j);
  return key;
}

bool same_family(const std::vector<OrderedBasis>& a,
                 const std::vector<OrderedBasis>& b) {
  std::vector<std::vector<std::pair<int, int>>> ka, kb;
  for (const auto& B : a) ka.push_back(basis_key(B));
  for (const auto& B : b) kb.push_back(basis_key(B));
  std::sort(ka.begin(), ka.end());
  std::sort(kb.begin(), kb.end());
  return ka == kb;
}

}  // namespace verlinde
