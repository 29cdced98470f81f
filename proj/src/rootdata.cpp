#include "symspace/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace symspace {

namespace {

std::vector<int> to_key(const RootVector& v) { return {v.data(), v.data() + v.size()}; }

// Connected components of the Dynkin graph of a Cartan matrix.
std::vector<std::vector<int>> graph_components(const IntMatrix& cartan) {
  const int n = static_cast<int>(cartan.rows());
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<int> comp{s};
    seen[static_cast<std::size_t>(s)] = 1;
    for (std::size_t h = 0; h < comp.size(); ++h) {
      for (int j = 0; j < n; ++j) {
        if (!seen[static_cast<std::size_t>(j)] && cartan(comp[h], j) != 0) {
          seen[static_cast<std::size_t>(j)] = 1;
          comp.push_back(j);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

// d_i with (alpha_i, alpha_j) = d_i * cartan(i, j), smallest d_i = 1 per component.
std::vector<int> symmetrizer(const IntMatrix& cartan) {
  const int n = static_cast<int>(cartan.rows());
  std::vector<long> num(static_cast<std::size_t>(n), 0);
  for (const auto& comp : graph_components(cartan)) {
    // Neighbour ratios are 1, 2 or 3, so a seed of 36 keeps everything integral.
    num[static_cast<std::size_t>(comp[0])] = 36;
    std::vector<int> order{comp[0]};
    for (std::size_t h = 0; h < order.size(); ++h) {
      const int i = order[h];
      for (int j : comp) {
        if (j == i || cartan(i, j) == 0 || num[static_cast<std::size_t>(j)] != 0) continue;
        long v = num[static_cast<std::size_t>(i)] * cartan(i, j);
        if (v % cartan(j, i) != 0) throw std::logic_error("Cartan matrix is not symmetrisable");
        num[static_cast<std::size_t>(j)] = v / cartan(j, i);
        order.push_back(j);
      }
    }
    long g = 0;
    for (int j : comp) g = std::gcd(g, num[static_cast<std::size_t>(j)]);
    for (int j : comp) num[static_cast<std::size_t>(j)] /= g;
  }
  return {num.begin(), num.end()};
}

// Positive roots by root-string extension: beta + alpha_i is a root iff
// q = p - <beta, alpha_i^vee> > 0, where p is the length of the downward string.
std::vector<RootVector> positive_roots(const IntMatrix& cartan) {
  const int n = static_cast<int>(cartan.rows());
  std::map<std::vector<int>, int> known;
  std::vector<RootVector> all;
  std::vector<RootVector> layer;
  for (int i = 0; i < n; ++i) {
    RootVector e = RootVector::Zero(n);
    e(i) = 1;
    layer.push_back(e);
    known.emplace(to_key(e), 1);
  }
  while (!layer.empty()) {
    std::vector<RootVector> next;
    for (const auto& beta : layer) {
      all.push_back(beta);
      for (int i = 0; i < n; ++i) {
        RootVector down = beta;
        int p = 0;
        for (;;) {
          down(i) -= 1;
          if (down(i) < 0 || !known.contains(to_key(down))) break;
          ++p;
        }
        if (beta.sum() == 1 && beta(i) == 1) continue;  // beta == alpha_i
        const int q = p - cartan.row(i).dot(beta);
        if (q <= 0) continue;
        RootVector up = beta;
        up(i) += 1;
        if (known.emplace(to_key(up), 1).second) next.push_back(up);
      }
    }
    layer = std::move(next);
  }
  return all;
}

char identify_component(const IntMatrix& c) {
  const int r = static_cast<int>(c.rows());
  const int count = static_cast<int>(positive_roots(c).size()) * 2;
  const auto d = symmetrizer(c);
  const int longest = *std::max_element(d.begin(), d.end());
  const int shorts = static_cast<int>(std::count_if(d.begin(), d.end(), [&](int x) { return x < longest; }));
  if (shorts == 0) {
    if (count == r * (r + 1)) return 'A';
    if (count == 2 * r * (r - 1)) return 'D';
    if ((r == 6 && count == 72) || (r == 7 && count == 126) || (r == 8 && count == 240)) return 'E';
  } else {
    if (r == 2 && count == 12) return 'G';
    if (r == 4 && count == 48) return 'F';
    if (count == 2 * r * r) return shorts == 1 ? 'B' : 'C';
  }
  throw std::logic_error("unrecognised Cartan matrix component");
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f = saturating_mul(f, static_cast<std::uint64_t>(k));
  return f;
}

}  // namespace

bool DiagramAutomorphism::is_identity() const {
  for (std::size_t i = 0; i < node_permutation.size(); ++i)
    if (node_permutation[i] != static_cast<int>(i)) return false;
  return true;
}

std::vector<std::vector<int>> DiagramAutomorphism::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(node_permutation.size(), 0);
  for (std::size_t i = 0; i < node_permutation.size(); ++i) {
    if (seen[i] || node_permutation[i] == static_cast<int>(i)) continue;
    std::vector<int> cyc;
    for (auto j = static_cast<int>(i); !seen[static_cast<std::size_t>(j)]; j = node_permutation[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = 1;
      cyc.push_back(j + 1);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

void check_simple_factor(const SimpleFactor& f) {
  bool ok = false;
  switch (f.letter) {
    case 'A': ok = f.rank >= 1; break;
    case 'B': ok = f.rank >= 2; break;
    case 'C': ok = f.rank >= 2; break;
    case 'D': ok = f.rank >= 4; break;
    case 'E': ok = f.rank >= 6 && f.rank <= 8; break;
    case 'F': ok = f.rank == 4; break;
    case 'G': ok = f.rank == 2; break;
    default: break;
  }
  if (!ok) {
    std::ostringstream msg;
    msg << "invalid simple type " << f.letter << f.rank;
    throw std::invalid_argument(msg.str());
  }
}

IntMatrix cartan_matrix(const SimpleFactor& f) {
  check_simple_factor(f);
  const int n = f.rank;
  IntMatrix c = IntMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) c(i, i) = 2;
  auto link = [&](int i, int j) {  // 1-based simple bond
    c(i - 1, j - 1) = -1;
    c(j - 1, i - 1) = -1;
  };
  switch (f.letter) {
    case 'A':
      for (int i = 1; i < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 1; i < n; ++i) link(i, i + 1);
      c(n - 1, n - 2) = -2;  // alpha_n short
      break;
    case 'C':
      for (int i = 1; i < n; ++i) link(i, i + 1);
      c(n - 2, n - 1) = -2;  // alpha_n long
      break;
    case 'D':
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      link(n - 2, n);
      break;
    case 'E':
      link(1, 3);
      link(2, 4);
      for (int i = 3; i < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(1, 2);
      link(2, 3);
      link(3, 4);
      c(2, 1) = -2;  // alpha_3, alpha_4 short
      break;
    case 'G':
      link(1, 2);
      c(0, 1) = -3;  // alpha_1 short
      break;
    default: break;
  }
  return c;
}

RootSystem RootSystem::build(std::span<const SimpleFactor> factors, int central_torus_dim) {
  if (central_torus_dim < 0) throw std::invalid_argument("central torus dimension must be >= 0");
  RootSystem rs;
  int n = 0;
  for (const auto& f : factors) {
    check_simple_factor(f);
    n += f.rank;
  }
  rs.cartan_ = IntMatrix::Zero(n, n);
  int offset = 0;
  for (const auto& f : factors) {
    rs.cartan_.block(offset, offset, f.rank, f.rank) = cartan_matrix(f);
    Component comp{f, {}};
    for (int i = 0; i < f.rank; ++i) comp.nodes.push_back(offset + i);
    rs.components_.push_back(std::move(comp));
    offset += f.rank;
  }
  rs.central_torus_dim_ = central_torus_dim;
  rs.generate();
  return rs;
}

RootSystem RootSystem::parse(std::string_view type) {
  std::vector<SimpleFactor> factors;
  int torus = 0;
  std::size_t pos = 0;
  auto fail = [&]() {
    throw std::invalid_argument("cannot parse root system type '" + std::string(type) + "'");
  };
  if (type.empty()) fail();
  while (pos <= type.size()) {
    const std::size_t end = std::min(type.find('+', pos), type.size());
    std::string_view tok = type.substr(pos, end - pos);
    if (tok.size() < 2) fail();
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0])));
    int value = 0;
    for (char ch : tok.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) fail();
      value = value * 10 + (ch - '0');
      if (value > 64) fail();
    }
    if (letter == 'T') {
      torus += value;
    } else {
      factors.push_back({letter, value});
    }
    pos = end + 1;
  }
  if (factors.empty() && torus == 0) fail();
  return build(factors, torus);
}

RootSystem RootSystem::from_cartan(const IntMatrix& cartan) {
  RootSystem rs;
  rs.cartan_ = cartan;
  for (auto& nodes : graph_components(cartan)) {
    const int r = static_cast<int>(nodes.size());
    IntMatrix sub(r, r);
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b) sub(a, b) = cartan(nodes[static_cast<std::size_t>(a)], nodes[static_cast<std::size_t>(b)]);
    rs.components_.push_back({{identify_component(sub), r}, std::move(nodes)});
  }
  rs.generate();
  return rs;
}

void RootSystem::generate() {
  const int n = rank();
  const auto d = symmetrizer(cartan_);
  form_ = IntMatrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) form_(i, j) = d[static_cast<std::size_t>(i)] * cartan_(i, j);

  auto pos = positive_roots(cartan_);
  std::sort(pos.begin(), pos.end(), [](const RootVector& a, const RootVector& b) {
    if (a.sum() != b.sum()) return a.sum() < b.sum();
    return std::lexicographical_compare(b.data(), b.data() + b.size(), a.data(), a.data() + a.size());
  });
  roots_ = pos;
  for (const auto& r : pos) roots_.push_back(-r);

  heights_.clear();
  norms_.clear();
  index_.clear();
  for (int k = 0; k < num_roots(); ++k) {
    heights_.push_back(roots_[static_cast<std::size_t>(k)].sum());
    norms_.push_back(inner(roots_[static_cast<std::size_t>(k)], roots_[static_cast<std::size_t>(k)]));
    index_.emplace(to_key(roots_[static_cast<std::size_t>(k)]), k);
  }

  reflections_.assign(static_cast<std::size_t>(n), {});
  for (int i = 0; i < n; ++i) {
    auto& perm = reflections_[static_cast<std::size_t>(i)];
    perm.resize(roots_.size());
    for (int k = 0; k < num_roots(); ++k) {
      RootVector v = roots_[static_cast<std::size_t>(k)];
      v(i) -= cartan_.row(i).dot(roots_[static_cast<std::size_t>(k)]);
      perm[static_cast<std::size_t>(k)] = *find(v);
    }
  }
}

std::string RootSystem::name() const {
  std::string out;
  for (const auto& c : components_) {
    if (!out.empty()) out += '+';
    out += c.factor.letter + std::to_string(c.factor.rank);
  }
  if (central_torus_dim_ > 0) {
    if (!out.empty()) out += '+';
    out += "T" + std::to_string(central_torus_dim_);
  }
  return out;
}

std::optional<int> RootSystem::find(const RootVector& v) const {
  if (v.size() != rank()) return std::nullopt;
  auto it = index_.find(to_key(v));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> RootSystem::sum(int a, int b) const { return find(root(a) + root(b)); }

int RootSystem::inner(const RootVector& u, const RootVector& v) const { return u.dot(form_ * v); }

int RootSystem::pairing(int a, int b) const { return 2 * inner(root(a), root(b)) / norm2(b); }

int RootSystem::apply(const DiagramAutomorphism& a, int k) const { return *find(apply(a, root(k))); }

RootVector RootSystem::apply(const DiagramAutomorphism& a, const RootVector& v) const {
  RootVector out(v.size());
  for (int i = 0; i < v.size(); ++i) out(a.node_permutation[static_cast<std::size_t>(i)]) = v(i);
  return out;
}

int RootSystem::component_of(int node) const {
  for (std::size_t c = 0; c < components_.size(); ++c) {
    const auto& nodes = components_[c].nodes;
    if (std::find(nodes.begin(), nodes.end(), node) != nodes.end()) return static_cast<int>(c);
  }
  throw std::out_of_range("node outside the diagram");
}

int RootSystem::highest_root(int component) const {
  const auto& nodes = components_.at(static_cast<std::size_t>(component)).nodes;
  int best = -1;
  for (int k = 0; k < num_positive(); ++k) {
    if (root(k)(nodes.front()) == 0) continue;
    if (best < 0 || height(k) > height(best)) best = k;
  }
  return best;
}

std::uint64_t RootSystem::weyl_group_order() const {
  std::uint64_t total = 1;
  for (const auto& c : components_) {
    const int n = c.factor.rank;
    std::uint64_t w = 1;
    switch (c.factor.letter) {
      case 'A': w = factorial(n + 1); break;
      case 'B':
      case 'C': w = saturating_mul(std::uint64_t{1} << n, factorial(n)); break;
      case 'D': w = saturating_mul(std::uint64_t{1} << (n - 1), factorial(n)); break;
      case 'E': w = n == 6 ? 51840ULL : n == 7 ? 2903040ULL : 696729600ULL; break;
      case 'F': w = 1152; break;
      case 'G': w = 12; break;
      default: break;
    }
    total = saturating_mul(total, w);
  }
  return total;
}

std::string cartan_type_name(const IntMatrix& cartan) {
  if (cartan.rows() == 0) return "";
  const RootSystem rs = RootSystem::from_cartan(cartan);
  std::vector<SimpleFactor> factors;
  for (const auto& c : rs.components()) factors.push_back(c.factor);
  std::sort(factors.begin(), factors.end(), [](const SimpleFactor& a, const SimpleFactor& b) {
    if (a.rank != b.rank) return a.rank > b.rank;
    return a.letter < b.letter;
  });
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += '+';
    out += f.letter + std::to_string(f.rank);
  }
  return out;
}

std::vector<DiagramAutomorphism> diagram_automorphisms(const RootSystem& rs) {
  const int n = rs.rank();
  const IntMatrix& c = rs.cartan();
  std::vector<DiagramAutomorphism> out;
  std::vector<int> perm(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);

  auto extend = [&](auto&& self, int i) -> void {
    if (i == n) {
      DiagramAutomorphism a{perm, 1};
      // order = lcm of cycle lengths
      int order = 1;
      for (const auto& cyc : a.cycles()) order = std::lcm(order, static_cast<int>(cyc.size()));
      a.order = order;
      out.push_back(std::move(a));
      return;
    }
    for (int j = 0; j < n; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      bool ok = true;
      for (int k = 0; k <= i && ok; ++k) {
        const int pk = k == i ? j : perm[static_cast<std::size_t>(k)];
        ok = c(i, k) == c(j, pk) && c(k, i) == c(pk, j);
      }
      if (!ok) continue;
      perm[static_cast<std::size_t>(i)] = j;
      used[static_cast<std::size_t>(j)] = 1;
      self(self, i + 1);
      used[static_cast<std::size_t>(j)] = 0;
    }
  };
  extend(extend, 0);
  return out;
}

std::vector<int> node_support(const RootSystem& rs, const RootVector& v) {
  std::vector<int> nodes;
  for (int i = 0; i < rs.rank() && i < v.size(); ++i)
    if (v(i) != 0) nodes.push_back(i);
  return nodes;
}

bool nodes_connected(const RootSystem& rs, std::span<const int> nodes) {
  if (nodes.empty()) return false;
  std::vector<int> reached{nodes.front()};
  for (std::size_t h = 0; h < reached.size(); ++h) {
    for (int j : nodes) {
      if (rs.adjacent(reached[h], j) && std::find(reached.begin(), reached.end(), j) == reached.end())
        reached.push_back(j);
    }
  }
  return reached.size() == nodes.size();
}

SupportInfo support_connected(const RootSystem& rs, const RootVector& v) {
  if (!rs.is_root(v)) throw std::invalid_argument("vector is not a root");
  SupportInfo info;
  info.nodes = node_support(rs, v);
  info.connected = nodes_connected(rs, info.nodes);
  return info;
}

RootVector make_vector(std::initializer_list<int> coords) {
  RootVector v(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (int x : coords) v(i++) = x;
  return v;
}

}  // namespace symspace
