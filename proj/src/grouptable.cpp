#include "drg/grouptable.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "drg/errors.hpp"

namespace drg {

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw std::invalid_argument("compose: degree mismatch");
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

bool is_permutation(const Permutation& p, std::size_t degree) {
  if (p.size() != degree) return false;
  std::vector<bool> seen(degree, false);
  for (std::size_t x : p) {
    if (x >= degree || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

FiniteGroup::FiniteGroup() : table_{{0}}, inverse_{0}, identity_(0) {}

FiniteGroup::FiniteGroup(std::vector<std::vector<std::size_t>> table) : table_(std::move(table)) {
  const std::size_t n = table_.size();
  identity_ = n;
  for (std::size_t e = 0; e < n && identity_ == n; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = table_[e][x] == x && table_[x][e] == x;
    if (ok) identity_ = e;
  }
  inverse_.assign(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (table_[x][y] == identity_ && table_[y][x] == identity_) {
        inverse_[x] = y;
        break;
      }
}

FiniteGroup FiniteGroup::from_generators(std::size_t degree, const std::vector<Permutation>& perms,
                                         std::size_t cap) {
  for (std::size_t i = 0; i < perms.size(); ++i)
    if (!is_permutation(perms[i], degree))
      throw ValidationError("generator " + std::to_string(i) + " is not a permutation of {0.." +
                            std::to_string(degree == 0 ? 0 : degree - 1) + "}");
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Permutation> elems{id};
  std::map<Permutation, std::size_t> index{{id, 0}};
  std::vector<std::size_t> gen_index(perms.size());
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (std::size_t g = 0; g < perms.size(); ++g) {
      Permutation next = compose(elems[head], perms[g]);
      auto it = index.find(next);
      if (it == index.end()) {
        if (elems.size() >= cap)
          throw BudgetExceeded("group closure exceeds the cap of " + std::to_string(cap) + " elements");
        it = index.emplace(next, elems.size()).first;
        elems.push_back(std::move(next));
      }
      if (head == 0) gen_index[g] = it->second;
    }
  }
  const std::size_t n = elems.size();
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a][b] = index.at(compose(elems[a], elems[b]));
  FiniteGroup group(std::move(table));
  group.generators_ = gen_index;
  group.perms_ = std::move(elems);
  return group;
}

std::optional<AssociativityWitness> FiniteGroup::find_associativity_failure(
    const std::vector<std::vector<std::size_t>>& t) {
  const std::size_t n = t.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (t[t[x][y]][z] != t[x][t[y][z]]) return AssociativityWitness{x, y, z};
  return std::nullopt;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<std::size_t>> table) {
  const std::size_t n = table.size();
  if (n == 0) throw ValidationError("group table is empty");
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) throw ValidationError("group table row " + std::to_string(i) + " has wrong length");
    for (std::size_t x : table[i])
      if (x >= n) throw ValidationError("group table entry out of range in row " + std::to_string(i));
  }
  if (auto w = find_associativity_failure(table)) {
    std::ostringstream msg;
    msg << "group table is not associative: (" << w->x << "*" << w->y << ")*" << w->z << " != " << w->x << "*("
        << w->y << "*" << w->z << ")";
    throw ValidationError(msg.str());
  }
  FiniteGroup g(std::move(table));
  if (g.identity_ == n) throw ValidationError("group table has no identity element");
  for (std::size_t x = 0; x < n; ++x)
    if (g.inverse_[x] == n) throw ValidationError("element " + std::to_string(x) + " has no inverse");
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  g.generators_ = std::move(all);
  return g;
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw std::invalid_argument("FiniteGroup::cyclic: order must be positive");
  Permutation c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = (i + 1) % n;
  return from_generators(n, {c});
}

void FiniteGroup::set_generators(std::vector<std::size_t> gens) {
  for (std::size_t g : gens)
    if (g >= order()) throw ValidationError("generator index " + std::to_string(g) + " out of range");
  generators_ = std::move(gens);
  (void)spanning_tree();
}

std::vector<std::pair<std::size_t, std::size_t>> FiniteGroup::spanning_tree() const {
  const std::size_t n = order();
  const std::size_t none = n;
  std::vector<std::pair<std::size_t, std::size_t>> tree(n, {none, none});
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> queue{identity_};
  seen[identity_] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::size_t x = queue[head];
    for (std::size_t s = 0; s < generators_.size(); ++s) {
      std::size_t y = mul(x, generators_[s]);
      if (seen[y]) continue;
      seen[y] = true;
      tree[y] = {x, s};
      queue.push_back(y);
    }
  }
  if (queue.size() != n) throw ValidationError("the given generators do not generate the group");
  return tree;
}

std::size_t FiniteGroup::power(std::size_t a, long k) const {
  std::size_t base = k < 0 ? inv(a) : a;
  unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  std::size_t r = identity_;
  for (unsigned long i = 0; i < e; ++i) r = mul(r, base);
  return r;
}

std::size_t FiniteGroup::element_order(std::size_t a) const {
  std::size_t k = 1;
  for (std::size_t x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a)
    if (!is_central(a)) return false;
  return true;
}

bool FiniteGroup::is_central(std::size_t a) const {
  for (std::size_t x = 0; x < order(); ++x)
    if (mul(a, x) != mul(x, a)) return false;
  return true;
}

bool FiniteGroup::is_subgroup(const std::vector<std::size_t>& elems) const {
  if (elems.empty()) return false;
  std::vector<bool> in(order(), false);
  for (std::size_t x : elems) {
    if (x >= order()) return false;
    in[x] = true;
  }
  for (std::size_t x : elems)
    for (std::size_t y : elems)
      if (!in[mul(x, inv(y))]) return false;
  return true;
}

bool FiniteGroup::is_normal_subgroup(const std::vector<std::size_t>& elems) const {
  if (!is_subgroup(elems)) return false;
  std::vector<bool> in(order(), false);
  for (std::size_t x : elems) in[x] = true;
  for (std::size_t g = 0; g < order(); ++g)
    for (std::size_t x : elems)
      if (!in[mul(mul(g, x), inv(g))]) return false;
  return true;
}

FiniteGroup::Quotient FiniteGroup::quotient(const std::vector<std::size_t>& normal) const {
  if (!is_normal_subgroup(normal)) throw ValidationError("quotient: subgroup is not normal");
  const std::size_t n = order();
  std::vector<std::size_t> coset(n, n);
  std::vector<std::size_t> reps;
  // Cosets numbered by their smallest element, so the identity coset is 0
  // whenever the identity is element 0.
  std::vector<std::size_t> sorted_normal = normal;
  std::sort(sorted_normal.begin(), sorted_normal.end());
  std::vector<std::size_t> order_seq(n);
  std::iota(order_seq.begin(), order_seq.end(), 0);
  std::stable_partition(order_seq.begin(), order_seq.end(), [&](std::size_t x) { return x == identity_; });
  for (std::size_t g : order_seq) {
    if (coset[g] != n) continue;
    for (std::size_t x : sorted_normal) coset[mul(g, x)] = reps.size();
    reps.push_back(g);
  }
  const std::size_t m = reps.size();
  std::vector<std::vector<std::size_t>> table(m, std::vector<std::size_t>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) table[a][b] = coset[mul(reps[a], reps[b])];
  return {FiniteGroup::from_table(std::move(table)), std::move(coset)};
}

std::vector<std::size_t> FiniteGroup::order_census() const {
  std::vector<std::size_t> census(order() + 1, 0);
  for (std::size_t a = 0; a < order(); ++a) ++census[element_order(a)];
  return census;
}

std::optional<std::pair<std::size_t, std::size_t>> hom_violation(const std::vector<std::size_t>& f,
                                                                 const FiniteGroup& src, const FiniteGroup& dst) {
  if (f.size() != src.order()) throw std::invalid_argument("hom_check: map is not total on the source");
  for (std::size_t x : f)
    if (x >= dst.order()) throw std::invalid_argument("hom_check: image out of range");
  for (std::size_t x = 0; x < src.order(); ++x)
    for (std::size_t y = 0; y < src.order(); ++y)
      if (f[src.mul(x, y)] != dst.mul(f[x], f[y])) return std::make_pair(x, y);
  return std::nullopt;
}

bool hom_check(const std::vector<std::size_t>& f, const FiniteGroup& src, const FiniteGroup& dst) {
  return !hom_violation(f, src, dst).has_value();
}

namespace {

// Small generating set by greedy accumulation, preferring high-order elements.
std::vector<std::size_t> small_generating_set(const FiniteGroup& g) {
  std::vector<std::size_t> cand(g.order());
  std::iota(cand.begin(), cand.end(), 0);
  std::stable_sort(cand.begin(), cand.end(),
                   [&](std::size_t a, std::size_t b) { return g.element_order(a) > g.element_order(b); });
  std::vector<bool> in(g.order(), false);
  in[g.identity()] = true;
  std::vector<std::size_t> members{g.identity()};
  std::vector<std::size_t> gens;
  for (std::size_t c : cand) {
    if (in[c]) continue;
    gens.push_back(c);
    // Re-close the subgroup.
    for (std::size_t head = 0; head < members.size(); ++head)
      for (std::size_t s : gens) {
        std::size_t y = g.mul(members[head], s);
        if (!in[y]) {
          in[y] = true;
          members.push_back(y);
        }
      }
    if (members.size() == g.order()) break;
  }
  return gens;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return std::nullopt;
  if (a.order_census() != b.order_census()) return std::nullopt;
  const std::size_t n = a.order();
  std::vector<std::size_t> gens = small_generating_set(a);
  FiniteGroup a_gen = a;
  a_gen.set_generators(gens);
  auto tree = a_gen.spanning_tree();
  // BFS order of the tree so parents come first.
  std::vector<std::size_t> bfs{a.identity()};
  {
    std::vector<std::vector<std::size_t>> children(n);
    for (std::size_t x = 0; x < n; ++x)
      if (x != a.identity()) children[tree[x].first].push_back(x);
    for (std::size_t head = 0; head < bfs.size(); ++head)
      for (std::size_t c : children[bfs[head]]) bfs.push_back(c);
  }

  std::vector<std::size_t> images(gens.size());
  std::vector<std::size_t> map(n);
  auto try_extend = [&]() -> bool {
    std::vector<bool> used(n, false);
    map[a.identity()] = b.identity();
    used[b.identity()] = true;
    for (std::size_t k = 1; k < bfs.size(); ++k) {
      std::size_t x = bfs[k];
      std::size_t y = b.mul(map[tree[x].first], images[tree[x].second]);
      if (used[y]) return false;
      used[y] = true;
      map[x] = y;
    }
    return hom_check(map, a, b);
  };

  std::vector<std::size_t> orders(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) orders[i] = a.element_order(gens[i]);
  std::function<bool(std::size_t)> search = [&](std::size_t depth) -> bool {
    if (depth == gens.size()) return try_extend();
    for (std::size_t y = 0; y < n; ++y) {
      if (b.element_order(y) != orders[depth]) continue;
      images[depth] = y;
      if (search(depth + 1)) return true;
    }
    return false;
  };
  if (search(0)) return map;
  return std::nullopt;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t n = a.order() * b.order();
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      t[x][y] = a.mul(x / b.order(), y / b.order()) * b.order() + b.mul(x % b.order(), y % b.order());
  return FiniteGroup::from_table(std::move(t));
}

FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h, const std::vector<Permutation>& action) {
  if (action.size() != h.order()) throw std::invalid_argument("semidirect_product: one automorphism per element of H");
  const std::size_t hn = h.order();
  const std::size_t size = n.order() * hn;
  std::vector<std::vector<std::size_t>> t(size, std::vector<std::size_t>(size));
  for (std::size_t x = 0; x < size; ++x)
    for (std::size_t y = 0; y < size; ++y) {
      std::size_t n1 = x / hn, h1 = x % hn, n2 = y / hn, h2 = y % hn;
      t[x][y] = n.mul(n1, action[h1][n2]) * hn + h.mul(h1, h2);
    }
  return FiniteGroup::from_table(std::move(t));
}

std::string describe(const FiniteGroup& g) {
  std::ostringstream out;
  out << "group of order " << g.order() << (g.is_abelian() ? " (abelian)" : " (nonabelian)");
  return out.str();
}

}  // namespace drg
