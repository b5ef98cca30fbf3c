#include "equitutte/matroid.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <sstream>
#include <tuple>

namespace equitutte {

namespace {

int popcount(std::uint32_t m) { return std::popcount(m); }

std::uint32_t remove_bit(std::uint32_t m, int p) {
  std::uint32_t low = m & ((1u << p) - 1);
  return low | ((m >> (p + 1)) << p);
}

void check_distinct_labels(const std::vector<Label>& labels) {
  auto sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) fail(errc::label_collision, "duplicate label: " + *dup);
}

std::string join_labels(const std::vector<Label>& labels) {
  std::string out;
  for (const auto& l : labels) {
    if (!out.empty()) out += ",";
    out += l;
  }
  return "{" + out + "}";
}

// First exchange-axiom violation, as (basis, basis, element position).
std::optional<std::tuple<std::uint32_t, std::uint32_t, int>> find_exchange_violation(
    const std::vector<std::uint32_t>& bases) {
  for (std::uint32_t b1 : bases)
    for (std::uint32_t b2 : bases) {
      std::uint32_t only1 = b1 & ~b2;
      if (!only1) continue;
      std::uint32_t only2 = b2 & ~b1;
      for (std::uint32_t rest = only1; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        bool ok = false;
        for (std::uint32_t cand = only2; cand;) {
          int w = std::countr_zero(cand);
          cand &= cand - 1;
          std::uint32_t swapped = (b1 & ~(1u << v)) | (1u << w);
          if (std::binary_search(bases.begin(), bases.end(), swapped)) {
            ok = true;
            break;
          }
        }
        if (!ok) return std::make_tuple(b1, b2, v);
      }
    }
  return std::nullopt;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  // Returns false if already joined.
  bool join(int a, int b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

Matroid Matroid::from_masks(std::vector<Label> ground, std::vector<std::uint32_t> bases) {
  if (ground.size() > 25) fail(errc::ground_too_large, "ground set larger than 25 elements");
  check_distinct_labels(ground);
  if (bases.empty()) fail(errc::empty_bases, "a matroid needs at least one basis");
  std::uint32_t full = ground.empty() ? 0 : (1u << ground.size()) - 1;
  for (std::uint32_t b : bases)
    if (b & ~full) fail(errc::unknown_label, "basis mask outside the ground set");
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  int r = popcount(bases.front());
  for (std::uint32_t b : bases)
    if (popcount(b) != r)
      fail(errc::unequal_basis_sizes, "bases of sizes " + std::to_string(r) + " and " +
                                          std::to_string(popcount(b)) + " in one family");
  Matroid m;
  m.ground_ = std::move(ground);
  m.bases_ = std::move(bases);
  m.rank_ = r;
  if (auto viol = find_exchange_violation(m.bases_)) {
    auto [b1, b2, v] = *viol;
    fail(errc::exchange_violation, "exchange fails for " + join_labels(m.labels_of(b1)) + ", " +
                                       join_labels(m.labels_of(b2)) + ", element " + m.ground_[v]);
  }
  return m;
}

Matroid Matroid::from_bases(std::vector<Label> ground,
                            const std::vector<std::vector<Label>>& bases) {
  if (ground.size() > 25) fail(errc::ground_too_large, "ground set larger than 25 elements");
  check_distinct_labels(ground);
  std::map<Label, int> pos;
  for (std::size_t i = 0; i < ground.size(); ++i) pos[ground[i]] = static_cast<int>(i);
  std::vector<std::uint32_t> masks;
  masks.reserve(bases.size());
  for (const auto& b : bases) {
    std::uint32_t m = 0;
    for (const auto& l : b) {
      auto it = pos.find(l);
      if (it == pos.end()) fail(errc::unknown_label, "basis element " + l + " not in the ground set");
      std::uint32_t bit = 1u << it->second;
      if (m & bit) fail(errc::label_collision, "element " + l + " repeated inside a basis");
      m |= bit;
    }
    masks.push_back(m);
  }
  return from_masks(std::move(ground), std::move(masks));
}

Matroid Matroid::uniform(int k, std::vector<Label> ground) {
  int n = static_cast<int>(ground.size());
  if (k < 0 || k > n) fail(errc::bad_rank, "rank " + std::to_string(k) + " out of range for " +
                                               std::to_string(n) + " elements");
  std::vector<std::uint32_t> masks;
  std::uint32_t full = ground.empty() ? 0 : (1u << n) - 1;
  for (std::uint32_t m = 0;; ++m) {
    if (popcount(m) == k) masks.push_back(m);
    if (m == full) break;
  }
  return from_masks(std::move(ground), std::move(masks));
}

std::vector<std::vector<Label>> Matroid::bases_labels() const {
  std::vector<std::vector<Label>> out;
  out.reserve(bases_.size());
  for (std::uint32_t b : bases_) out.push_back(labels_of(b));
  return out;
}

int Matroid::position(const Label& l) const {
  for (std::size_t i = 0; i < ground_.size(); ++i)
    if (ground_[i] == l) return static_cast<int>(i);
  fail(errc::unknown_label, "label " + l + " not in the ground set");
}

bool Matroid::has_label(const Label& l) const {
  return std::find(ground_.begin(), ground_.end(), l) != ground_.end();
}

std::uint32_t Matroid::mask_of(const std::vector<Label>& subset) const {
  std::uint32_t m = 0;
  for (const auto& l : subset) m |= 1u << position(l);
  return m;
}

std::vector<Label> Matroid::labels_of(std::uint32_t mask) const {
  std::vector<Label> out;
  for (int i = 0; i < size(); ++i)
    if (mask & (1u << i)) out.push_back(ground_[i]);
  return out;
}

int Matroid::rank_of_mask(std::uint32_t mask) const {
  int best = 0;
  for (std::uint32_t b : bases_) best = std::max(best, popcount(b & mask));
  return best;
}

int Matroid::nullity_of_mask(std::uint32_t mask) const {
  return popcount(mask) - rank_of_mask(mask);
}

bool Matroid::is_basis(std::uint32_t mask) const {
  return std::binary_search(bases_.begin(), bases_.end(), mask);
}

bool Matroid::is_independent(std::uint32_t mask) const {
  return rank_of_mask(mask) == popcount(mask);
}

ElementClass Matroid::element_class(const Label& l) const {
  std::uint32_t bit = 1u << position(l);
  bool in_all = true, in_none = true;
  for (std::uint32_t b : bases_) {
    if (b & bit)
      in_none = false;
    else
      in_all = false;
  }
  if (in_none) return ElementClass::loop;
  if (in_all) return ElementClass::coloop;
  return ElementClass::general;
}

Matroid Matroid::deleted(const Label& l) const {
  int p = position(l);
  std::uint32_t bit = 1u << p;
  std::vector<std::uint32_t> masks;
  if (element_class(l) == ElementClass::coloop) {
    for (std::uint32_t b : bases_) masks.push_back(remove_bit(b & ~bit, p));
  } else {
    for (std::uint32_t b : bases_)
      if (!(b & bit)) masks.push_back(remove_bit(b, p));
  }
  std::vector<Label> g = ground_;
  g.erase(g.begin() + p);
  return from_masks(std::move(g), std::move(masks));
}

Matroid Matroid::contracted(const Label& l) const {
  int p = position(l);
  std::uint32_t bit = 1u << p;
  if (element_class(l) == ElementClass::loop) return deleted(l);
  std::vector<std::uint32_t> masks;
  for (std::uint32_t b : bases_)
    if (b & bit) masks.push_back(remove_bit(b & ~bit, p));
  std::vector<Label> g = ground_;
  g.erase(g.begin() + p);
  return from_masks(std::move(g), std::move(masks));
}

Matroid Matroid::deleted_set(const std::vector<Label>& subset) const {
  std::uint32_t mask = mask_of(subset);
  Matroid m = *this;
  for (int i = 0; i < size(); ++i)
    if (mask & (1u << i)) m = m.deleted(ground_[i]);
  return m;
}

Matroid Matroid::contracted_set(const std::vector<Label>& subset) const {
  std::uint32_t mask = mask_of(subset);
  Matroid m = *this;
  for (int i = 0; i < size(); ++i)
    if (mask & (1u << i)) m = m.contracted(ground_[i]);
  return m;
}

Matroid Matroid::dual() const {
  std::vector<std::uint32_t> masks;
  masks.reserve(bases_.size());
  for (std::uint32_t b : bases_) masks.push_back(full_mask() & ~b);
  return from_masks(ground_, std::move(masks));
}

Matroid Matroid::relabeled(const std::map<Label, Label>& names) const {
  std::vector<Label> g;
  g.reserve(ground_.size());
  for (const auto& l : ground_) {
    auto it = names.find(l);
    if (it == names.end()) fail(errc::unknown_label, "no new name for label " + l);
    g.push_back(it->second);
  }
  return from_masks(std::move(g), bases_);
}

std::vector<Label> Matroid::lex_first_basis(const std::vector<Label>& order) const {
  if (order.size() != ground_.size())
    fail(errc::unknown_label, "visit order must be a permutation of the ground set");
  std::vector<int> positions;
  positions.reserve(order.size());
  std::uint32_t seen = 0;
  for (const auto& l : order) {
    int p = position(l);
    if (seen & (1u << p)) fail(errc::label_collision, "label " + l + " repeated in visit order");
    seen |= 1u << p;
    positions.push_back(p);
  }
  return labels_of(lex_first_basis_mask(positions));
}

std::uint32_t Matroid::lex_first_basis_mask(const std::vector<int>& order) const {
  std::uint32_t picked = 0;
  for (int p : order) {
    std::uint32_t cand = picked | (1u << p);
    if (is_independent(cand)) picked = cand;
  }
  return picked;
}

std::string Matroid::key() const {
  std::ostringstream os;
  for (const auto& l : ground_) os << l << ",";
  os << "|";
  for (std::uint32_t b : bases_) os << b << ",";
  return os.str();
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  if (a.size() + b.size() > 25) fail(errc::ground_too_large, "direct sum exceeds 25 elements");
  for (const auto& l : b.ground())
    if (a.has_label(l)) fail(errc::label_collision, "label " + l + " appears in both summands");
  std::vector<Label> g = a.ground();
  g.insert(g.end(), b.ground().begin(), b.ground().end());
  std::vector<std::uint32_t> masks;
  masks.reserve(a.bases().size() * b.bases().size());
  for (std::uint32_t ba : a.bases())
    for (std::uint32_t bb : b.bases()) masks.push_back(ba | (bb << a.size()));
  return Matroid::from_masks(std::move(g), std::move(masks));
}

void Graph::validate() const {
  check_distinct_labels(vertices);
  std::vector<Label> edge_labels;
  edge_labels.reserve(edges.size());
  for (const auto& e : edges) {
    edge_labels.push_back(e.label);
    for (const auto& v : {e.tail, e.head})
      if (std::find(vertices.begin(), vertices.end(), v) == vertices.end())
        fail(errc::unknown_label, "edge " + e.label + " touches undeclared vertex " + v);
  }
  check_distinct_labels(edge_labels);
}

bool Graph::connected() const {
  if (vertices.empty()) return true;
  std::map<std::string, int> idx;
  for (std::size_t i = 0; i < vertices.size(); ++i) idx[vertices[i]] = static_cast<int>(i);
  UnionFind uf(static_cast<int>(vertices.size()));
  for (const auto& e : edges) uf.join(idx.at(e.tail), idx.at(e.head));
  int root = uf.find(0);
  for (std::size_t i = 1; i < vertices.size(); ++i)
    if (uf.find(static_cast<int>(i)) != root) return false;
  return true;
}

Matroid graphic_matroid(const Graph& g) {
  g.validate();
  if (g.edges.size() > 20) fail(errc::too_many_edges, "graphic matroid limited to 20 edges");
  std::map<std::string, int> idx;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) idx[g.vertices[i]] = static_cast<int>(i);
  int n = static_cast<int>(g.vertices.size());
  int m = static_cast<int>(g.edges.size());

  UnionFind all(n);
  int joins = 0;
  for (const auto& e : g.edges)
    if (all.join(idx.at(e.tail), idx.at(e.head))) ++joins;
  int rank = joins;  // |V| - #components restricted to edge-covered structure

  std::vector<Label> ground;
  ground.reserve(g.edges.size());
  for (const auto& e : g.edges) ground.push_back(e.label);

  std::vector<std::uint32_t> masks;
  std::uint32_t full = m == 0 ? 0 : (1u << m) - 1;
  for (std::uint32_t sub = 0;; ++sub) {
    if (popcount(sub) == rank) {
      UnionFind uf(n);
      bool forest = true;
      for (int i = 0; i < m && forest; ++i)
        if (sub & (1u << i))
          forest = uf.join(idx.at(g.edges[i].tail), idx.at(g.edges[i].head));
      if (forest) masks.push_back(sub);
    }
    if (sub == full) break;
  }
  return Matroid::from_masks(std::move(ground), std::move(masks));
}

namespace {

struct OrientationProblem {
  int n = 0;                                    // vertex count
  std::vector<std::pair<int, int>> endpoints;   // per edge (tail, head)
  std::vector<int> free_edges, fixed_edges;     // indices into endpoints

  OrientationProblem(const Graph& g, const std::vector<Label>& special) {
    g.validate();
    if (g.edges.size() > 12) fail(errc::too_many_edges, "orientation counting limited to 12 edges");
    n = static_cast<int>(g.vertices.size());
    std::map<std::string, int> idx;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) idx[g.vertices[i]] = static_cast<int>(i);
    std::vector<bool> is_special(g.edges.size(), false);
    for (const auto& l : special) {
      bool found = false;
      for (std::size_t i = 0; i < g.edges.size(); ++i)
        if (g.edges[i].label == l) {
          if (is_special[i]) fail(errc::unknown_edge, "edge " + l + " listed twice");
          is_special[i] = true;
          found = true;
        }
      if (!found) fail(errc::unknown_edge, "no edge labelled " + l);
    }
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      endpoints.emplace_back(idx.at(g.edges[i].tail), idx.at(g.edges[i].head));
      (is_special[i] ? fixed_edges : free_edges).push_back(static_cast<int>(i));
    }
  }
};

bool digraph_acyclic(int n, const std::vector<std::pair<int, int>>& arcs) {
  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v] : arcs) {
    if (u == v) return false;
    adj[u].push_back(v);
  }
  std::vector<int> state(n, 0);  // 0 fresh, 1 on stack, 2 done
  for (int start = 0; start < n; ++start) {
    if (state[start]) continue;
    std::vector<std::pair<int, std::size_t>> stack{{start, 0}};
    state[start] = 1;
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      if (next < adj[u].size()) {
        int v = adj[u][next++];
        if (state[v] == 1) return false;
        if (state[v] == 0) {
          state[v] = 1;
          stack.emplace_back(v, 0);
        }
      } else {
        state[u] = 2;
        stack.pop_back();
      }
    }
  }
  return true;
}

bool digraph_strongly_connected(int n, const std::vector<std::pair<int, int>>& arcs) {
  if (n == 0) return true;
  auto reaches_all = [n](const std::vector<std::vector<int>>& adj) {
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : adj[u])
        if (!seen[v]) {
          seen[v] = true;
          ++count;
          stack.push_back(v);
        }
    }
    return count == n;
  };
  std::vector<std::vector<int>> fwd(n), rev(n);
  for (const auto& [u, v] : arcs) {
    fwd[u].push_back(v);
    rev[v].push_back(u);
  }
  return reaches_all(fwd) && reaches_all(rev);
}

}  // namespace

long long count_acyclic_orientations_free_set(const Graph& g, const std::vector<Label>& fixed) {
  OrientationProblem prob(g, fixed);
  auto nf = prob.free_edges.size(), na = prob.fixed_edges.size();
  long long count = 0;
  std::vector<std::pair<int, int>> arcs(prob.endpoints.size());
  for (std::uint32_t om = 0; om < (1u << nf); ++om) {
    for (std::size_t i = 0; i < nf; ++i) {
      auto [t, h] = prob.endpoints[prob.free_edges[i]];
      arcs[prob.free_edges[i]] = (om & (1u << i)) ? std::make_pair(h, t) : std::make_pair(t, h);
    }
    bool all_acyclic = true;
    for (std::uint32_t am = 0; am < (1u << na) && all_acyclic; ++am) {
      for (std::size_t i = 0; i < na; ++i) {
        auto [t, h] = prob.endpoints[prob.fixed_edges[i]];
        arcs[prob.fixed_edges[i]] = (am & (1u << i)) ? std::make_pair(h, t) : std::make_pair(t, h);
      }
      all_acyclic = digraph_acyclic(prob.n, arcs);
    }
    if (all_acyclic) ++count;
  }
  return count;
}

long long count_strongly_connected_bidirected(const Graph& g, const std::vector<Label>& doubled) {
  if (!g.connected()) fail(errc::disconnected_graph, "strong-connectivity count needs a connected graph");
  OrientationProblem prob(g, doubled);
  auto nf = prob.free_edges.size();
  long long count = 0;
  for (std::uint32_t om = 0; om < (1u << nf); ++om) {
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(prob.endpoints.size() + prob.fixed_edges.size());
    for (std::size_t i = 0; i < nf; ++i) {
      auto [t, h] = prob.endpoints[prob.free_edges[i]];
      arcs.emplace_back((om & (1u << i)) ? std::make_pair(h, t) : std::make_pair(t, h));
    }
    for (int e : prob.fixed_edges) {
      arcs.emplace_back(prob.endpoints[e]);
      arcs.emplace_back(prob.endpoints[e].second, prob.endpoints[e].first);
    }
    if (digraph_strongly_connected(prob.n, arcs)) ++count;
  }
  return count;
}

std::vector<Matroid> enumerate_labeled_matroids(const std::vector<Label>& ground) {
  if (ground.size() > 5) fail(errc::ground_too_large, "enumeration limited to 5 elements");
  check_distinct_labels(ground);
  int n = static_cast<int>(ground.size());
  std::vector<Matroid> out;
  for (int k = 0; k <= n; ++k) {
    std::vector<std::uint32_t> subs;
    std::uint32_t full = n == 0 ? 0 : (1u << n) - 1;
    for (std::uint32_t m = 0;; ++m) {
      if (popcount(m) == k) subs.push_back(m);
      if (m == full) break;
    }
    auto count = subs.size();
    for (std::uint64_t fam = 1; fam < (1ull << count); ++fam) {
      std::vector<std::uint32_t> masks;
      for (std::size_t i = 0; i < count; ++i)
        if (fam & (1ull << i)) masks.push_back(subs[i]);
      if (find_exchange_violation(masks)) continue;
      out.push_back(Matroid::from_masks(ground, std::move(masks)));
    }
  }
  return out;
}

const std::vector<std::vector<int>>& permutations_of(int n) {
  static std::map<int, std::vector<std::vector<int>>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n < 0 || n > 8) fail(errc::ground_too_large, "permutations limited to 8 positions");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> all;
  do {
    all.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return cache.emplace(n, std::move(all)).first->second;
}

std::size_t permutation_rank(const std::vector<int>& perm) {
  std::size_t n = perm.size();
  std::size_t rank = 0;
  std::size_t fact = 1;
  for (std::size_t i = 2; i <= n; ++i) fact *= i;
  for (std::size_t i = 0; i < n; ++i) {
    fact /= (n - i);
    int smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (perm[j] < perm[i]) ++smaller;
    rank += smaller * fact;
  }
  return rank;
}

}  // namespace equitutte
