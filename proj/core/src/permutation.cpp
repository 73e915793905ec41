#include "stsig/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace stsig {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v) - 1])
      throw std::invalid_argument("image array is not a bijection of {1..n}");
    seen[static_cast<std::size_t>(v) - 1] = true;
  }
}

Permutation Permutation::identity(int degree) {
  if (degree < 0) throw std::invalid_argument("negative permutation degree");
  Permutation p;
  p.images_.resize(static_cast<std::size_t>(degree));
  std::iota(p.images_.begin(), p.images_.end(), 1);
  return p;
}

bool Permutation::is_identity() const {
  for (int k = 1; k <= degree(); ++k)
    if (image(k) != k) return false;
  return true;
}

Permutation perm_compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("permutation degree mismatch in compose");
  std::vector<int> out(static_cast<std::size_t>(p.degree()));
  for (int k = 1; k <= p.degree(); ++k)
    out[static_cast<std::size_t>(k) - 1] = p.image(q.image(k));
  return Permutation(std::move(out));
}

Permutation perm_inverse(const Permutation& p) {
  std::vector<int> out(static_cast<std::size_t>(p.degree()));
  for (int k = 1; k <= p.degree(); ++k)
    out[static_cast<std::size_t>(p.image(k)) - 1] = k;
  return Permutation(std::move(out));
}

Permutation perm_power(const Permutation& p, std::int64_t e) {
  const int n = p.degree();
  std::vector<int> out(static_cast<std::size_t>(n), 0);
  std::vector<int> cycle;
  std::vector<bool> visited(static_cast<std::size_t>(n), false);
  for (int start = 1; start <= n; ++start) {
    if (visited[static_cast<std::size_t>(start) - 1]) continue;
    cycle.clear();
    int cur = start;
    do {
      visited[static_cast<std::size_t>(cur) - 1] = true;
      cycle.push_back(cur);
      cur = p.image(cur);
    } while (cur != start);
    const std::int64_t len = static_cast<std::int64_t>(cycle.size());
    const std::size_t shift = static_cast<std::size_t>(((e % len) + len) % len);
    for (std::size_t i = 0; i < cycle.size(); ++i)
      out[static_cast<std::size_t>(cycle[i]) - 1] =
          cycle[(i + shift) % cycle.size()];
  }
  return Permutation(std::move(out));
}

Permutation perm_cycle(int n) {
  if (n < 1) throw std::invalid_argument("perm_cycle needs n >= 1");
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int k = 1; k < n; ++k) out[static_cast<std::size_t>(k) - 1] = k + 1;
  out[static_cast<std::size_t>(n) - 1] = 1;
  return Permutation(std::move(out));
}

Permutation perm_tau(int n, std::int64_t r) {
  if (n < 0 || r < 0 || 2 * r > n)
    throw std::invalid_argument("perm_tau needs 0 <= 2r <= n");
  std::vector<int> out(static_cast<std::size_t>(n));
  std::iota(out.begin(), out.end(), 1);
  for (std::int64_t i = 0; i < r; ++i)
    std::swap(out[static_cast<std::size_t>(2 * i)],
              out[static_cast<std::size_t>(2 * i + 1)]);
  return Permutation(std::move(out));
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[static_cast<std::size_t>(x)] = y;
  }
};

UnionFind orbit_components(std::span<const Permutation> perms, int degree) {
  if (degree < 0) throw std::invalid_argument("negative degree in orbits");
  UnionFind uf(degree);
  for (const Permutation& p : perms) {
    if (p.degree() != degree)
      throw std::invalid_argument("permutation degree mismatch in orbits");
    for (int k = 1; k <= degree; ++k) uf.unite(k - 1, p.image(k) - 1);
  }
  return uf;
}

}  // namespace

std::vector<std::vector<int>> orbits(std::span<const Permutation> perms, int degree) {
  UnionFind uf = orbit_components(perms, degree);
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_of(static_cast<std::size_t>(degree), -1);
  for (int k = 0; k < degree; ++k) {
    const int root = uf.find(k);
    if (block_of[static_cast<std::size_t>(root)] < 0) {
      block_of[static_cast<std::size_t>(root)] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<std::size_t>(block_of[static_cast<std::size_t>(root)])]
        .push_back(k + 1);
  }
  return blocks;
}

std::vector<std::vector<int>> orbits(std::span<const Permutation> perms) {
  if (perms.empty())
    throw std::invalid_argument("orbits of an empty list needs an explicit degree");
  return orbits(perms, perms.front().degree());
}

std::size_t orbit_count(std::span<const Permutation> perms, int degree) {
  UnionFind uf = orbit_components(perms, degree);
  std::size_t count = 0;
  for (int k = 0; k < degree; ++k)
    if (uf.find(k) == k) ++count;
  return count;
}

}  // namespace stsig
