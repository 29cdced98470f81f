#include "symspace/involution.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace symspace {

std::shared_ptr<const Model> Model::make(const RootSystem& rs, std::optional<std::uint64_t> sign_seed) {
  return std::make_shared<const Model>(Model{rs, StructureConstants(rs, sign_seed)});
}

std::string grading_string(const GradingVector& s) {
  std::string out;
  for (int v : s) out += v < 0 ? '-' : '+';
  return out;
}

std::string grading_bits(const GradingVector& s) {
  if (s.empty()) return "-";
  std::string out;
  for (int v : s) out += v < 0 ? '1' : '0';
  return out;
}

GradingVector parse_grading(const std::string& text) {
  GradingVector s;
  if (text == "-") return s;
  for (char ch : text) {
    if (ch == '0' || ch == '+') {
      s.push_back(1);
    } else if (ch == '1' || ch == '-') {
      s.push_back(-1);
    } else {
      throw std::invalid_argument("bad grading character '" + std::string(1, ch) + "'");
    }
  }
  return s;
}

bool GradingLess::operator()(const GradingVector& a, const GradingVector& b) const {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](int x, int y) { return x > y; });
}

std::string InnerClass::tag() const { return is_inner() ? "i" : "o" + std::to_string(index); }

int InnerClass::character(const GradingVector& s, int root) const {
  const RootVector& v = roots().root(root);
  int out = 1;
  for (std::size_t k = 0; k < fixed_nodes.size(); ++k)
    if (s[k] < 0 && v(fixed_nodes[k]) % 2 != 0) out = -out;
  return out;
}

int InnerClass::epsilon(const GradingVector& s, int root) const {
  if (roots().apply(theta0, root) != root) throw std::logic_error("epsilon requested for a root not fixed by theta0");
  return signs(root) * character(s, root);
}

std::vector<std::shared_ptr<const InnerClass>> inner_classes(const std::shared_ptr<const Model>& model) {
  std::vector<std::shared_ptr<const InnerClass>> out;
  int index = 0;
  for (const auto& a : diagram_automorphisms(model->roots)) {
    if (!a.is_involution()) continue;
    std::vector<int> fixed;
    for (int i = 0; i < model->roots.rank(); ++i)
      if (a.node_permutation[static_cast<std::size_t>(i)] == i) fixed.push_back(i);
    out.push_back(std::make_shared<const InnerClass>(InnerClass{model, a, index++, fixed,
                                                                fixed_subgroup_generators(model->roots, a),
                                                                PinnedSigns(model->constants, a)}));
  }
  return out;
}

GradingVector grading_action(const InnerClass& inner, const Chamber& w, const GradingVector& s) {
  if (s.size() != inner.fixed_nodes.size()) throw std::invalid_argument("grading vector has the wrong length");
  GradingVector out(s.size());
  for (std::size_t k = 0; k < inner.fixed_nodes.size(); ++k)
    out[k] = inner.epsilon(s, w.apply_inverse(inner.fixed_nodes[k]));
  return out;
}

bool InvolutionClass::contains(const GradingVector& s) const {
  return std::binary_search(orbit.begin(), orbit.end(), s, GradingLess{});
}

std::string InvolutionClass::id() const { return inner->tag() + ":" + grading_bits(canonical()); }

std::vector<InvolutionClass> enumerate_classes(const std::shared_ptr<const InnerClass>& inner,
                                               const std::vector<Chamber>* generators) {
  const auto& gens = generators ? *generators : inner->generators;
  const std::size_t f = inner->fixed_nodes.size();
  if (f > 24) throw std::length_error("too many fixed nodes");
  std::vector<GradingVector> domain;
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << f); ++bits) {
    GradingVector s(f);
    for (std::size_t k = 0; k < f; ++k) s[k] = ((bits >> (f - 1 - k)) & 1U) ? -1 : 1;
    domain.push_back(std::move(s));
  }
  std::vector<Action<GradingVector>> actions;
  for (const auto& g : gens)
    actions.push_back([inner, &g](const GradingVector& s) { return grading_action(*inner, g, s); });
  std::vector<InvolutionClass> out;
  for (auto& orbit : orbit_partition<GradingVector, GradingLess>(actions, domain)) {
    InvolutionClass cls{inner, std::move(orbit), false};
    cls.trivial = inner->is_inner() &&
                  std::all_of(cls.canonical().begin(), cls.canonical().end(), [](int v) { return v > 0; });
    out.push_back(std::move(cls));
  }
  return out;
}

std::vector<InvolutionClass> enumerate_involution_classes(const std::shared_ptr<const Model>& model) {
  std::vector<InvolutionClass> out;
  for (const auto& inner : inner_classes(model)) {
    auto part = enumerate_classes(inner);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

std::vector<InvolutionClass> nontrivial(std::vector<InvolutionClass> classes) {
  std::erase_if(classes, [](const InvolutionClass& c) { return c.trivial; });
  return classes;
}

bool is_quasisplit_class(const InvolutionClass& cls) {
  return cls.contains(GradingVector(cls.inner->fixed_nodes.size(), -1));
}

std::vector<std::vector<int>> diagram_conjugacy_groups(const std::vector<InvolutionClass>& classes) {
  const int n = static_cast<int>(classes.size());
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  if (n > 0) {
    const RootSystem& rs = classes.front().inner->roots();
    for (const auto& sigma : diagram_automorphisms(rs)) {
      const auto& p = sigma.node_permutation;
      for (int a = 0; a < n; ++a) {
        const auto& inner = *classes[static_cast<std::size_t>(a)].inner;
        std::vector<int> image(p.size());
        for (std::size_t i = 0; i < p.size(); ++i)
          image[static_cast<std::size_t>(p[i])] = p[static_cast<std::size_t>(inner.theta0.node_permutation[i])];
        for (int b = 0; b < n; ++b) {
          const auto& other = *classes[static_cast<std::size_t>(b)].inner;
          if (other.theta0.node_permutation != image) continue;
          GradingVector moved(other.fixed_nodes.size());
          const auto& s = classes[static_cast<std::size_t>(a)].canonical();
          for (std::size_t k = 0; k < inner.fixed_nodes.size(); ++k) {
            const int target = p[static_cast<std::size_t>(inner.fixed_nodes[k])];
            const auto pos = std::find(other.fixed_nodes.begin(), other.fixed_nodes.end(), target);
            moved[static_cast<std::size_t>(pos - other.fixed_nodes.begin())] = s[k];
          }
          if (classes[static_cast<std::size_t>(b)].contains(moved)) parent[static_cast<std::size_t>(root(b))] = root(a);
        }
      }
    }
  }
  std::vector<std::vector<int>> groups;
  std::vector<int> slot(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    const int r = root(a);
    if (slot[static_cast<std::size_t>(r)] < 0) {
      slot[static_cast<std::size_t>(r)] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    groups[static_cast<std::size_t>(slot[static_cast<std::size_t>(r)])].push_back(a);
  }
  return groups;
}

std::vector<InvolutionClass> merge_diagram_conjugate(const std::vector<InvolutionClass>& classes) {
  std::vector<InvolutionClass> out;
  for (const auto& group : diagram_conjugacy_groups(classes))
    out.push_back(classes[static_cast<std::size_t>(group.front())]);
  return out;
}

const InvolutionClass& find_class(const std::vector<InvolutionClass>& classes, const std::string& id) {
  for (const auto& c : classes)
    if (c.id() == id) return c;
  throw std::out_of_range("no involution class with id '" + id + "'");
}

}  // namespace symspace
