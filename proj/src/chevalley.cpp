#include "symspace/chevalley.hpp"

#include <map>
#include <random>
#include <stdexcept>

namespace symspace {

namespace {

// Constants are computed for special pairs (a, b), both positive, a < b in
// the root order, and reduced to those for every other pair.
class SpecialTable {
 public:
  explicit SpecialTable(const RootSystem& rs) : rs_(rs) {}

  void set(int a, int b, int value) { special_[{a, b}] = value; }

  int get(int a, int b) const {
    const auto c = rs_.sum(a, b);
    if (!c) return 0;
    const bool pa = rs_.is_positive(a);
    const bool pb = rs_.is_positive(b);
    if (pa && pb) {
      if (a < b) return special_.at({a, b});
      return -special_.at({b, a});
    }
    if (!pa && !pb) return -get(rs_.negative(a), rs_.negative(b));
    if (!pa) return -get(b, a);
    // a positive, b negative, with a + b + (-c) = 0.
    const int nc = rs_.negative(*c);
    if (rs_.is_positive(*c)) {
      // N(a,b)/|c|^2 = N(b,-c)/|a|^2 and N(b,-c) = -N(-b,c).
      return exact(-rs_.norm2(*c) * get(rs_.negative(b), *c), rs_.norm2(a));
    }
    // N(a,b)/|c|^2 = N(-c,a)/|b|^2.
    return exact(rs_.norm2(*c) * get(nc, a), rs_.norm2(b));
  }

  static int exact(int num, int den) {
    if (num % den != 0) throw std::logic_error("structure constant is not integral");
    return num / den;
  }

 private:
  const RootSystem& rs_;
  std::map<std::pair<int, int>, int> special_;
};

}  // namespace

StructureConstants::StructureConstants(const RootSystem& rs, std::optional<std::uint64_t> sign_seed)
    : rs_(rs), n_(rs.num_roots()) {
  std::mt19937_64 rng(sign_seed.value_or(0));
  std::bernoulli_distribution coin(0.5);
  SpecialTable special(rs_);
  const int positives = rs_.num_positive();

  for (int xi = rs_.rank(); xi < positives; ++xi) {
    // Special pairs (a, b) with a < b and a + b = xi; the first is extraspecial.
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < xi; ++a) {
      const auto b = rs_.find(rs_.root(xi) - rs_.root(a));
      if (b && rs_.is_positive(*b) && a < *b) pairs.emplace_back(a, *b);
    }
    if (pairs.empty()) throw std::logic_error("non-simple positive root without a decomposition");
    const auto [gamma, delta] = pairs.front();
    extraspecial_.emplace_back(gamma, delta);

    int p = 0;
    while (rs_.is_root(rs_.root(delta) - (p + 1) * rs_.root(gamma))) ++p;
    const int sign = (sign_seed && coin(rng)) ? -1 : 1;
    const int n_gd = sign * (p + 1);
    special.set(gamma, delta, n_gd);

    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const auto [alpha, beta] = pairs[k];
      const int mg = rs_.negative(gamma);
      const int md = rs_.negative(delta);
      // |xi|^2 / N(g,d) * ( N(b,-g) N(a,-d) / |b-g|^2 + N(-g,a) N(b,-d) / |a-g|^2 )
      int t1 = 0, l1 = 1, t2 = 0, l2 = 1;
      if (const auto bg = rs_.sum(beta, mg)) {
        t1 = special.get(beta, mg) * special.get(alpha, md);
        l1 = rs_.norm2(*bg);
      }
      if (const auto ag = rs_.sum(alpha, mg)) {
        t2 = special.get(mg, alpha) * special.get(beta, md);
        l2 = rs_.norm2(*ag);
      }
      const int num = rs_.norm2(xi) * (t1 * l2 + t2 * l1);
      special.set(alpha, beta, SpecialTable::exact(num, n_gd * l1 * l2));
    }
  }

  table_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b)] =
          static_cast<std::int8_t>(special.get(a, b));
}

PinnedSigns::PinnedSigns(const StructureConstants& n, const DiagramAutomorphism& theta0) : theta0_(theta0) {
  const RootSystem& rs = n.roots();
  signs_.assign(static_cast<std::size_t>(rs.num_roots()), 0);
  for (int i = 0; i < rs.rank(); ++i) signs_[static_cast<std::size_t>(i)] = 1;
  const auto& es = n.extraspecial_pairs();
  for (int xi = rs.rank(); xi < rs.num_positive(); ++xi) {
    const auto [a, b] = es[static_cast<std::size_t>(xi - rs.rank())];
    const int num = signs_[static_cast<std::size_t>(a)] * signs_[static_cast<std::size_t>(b)] *
                    n(rs.apply(theta0, a), rs.apply(theta0, b));
    const int den = n(a, b);
    if (num != den && num != -den) throw std::logic_error("diagram automorphism does not preserve |N|");
    signs_[static_cast<std::size_t>(xi)] = num / den;
  }
  for (int k = 0; k < rs.num_positive(); ++k)
    signs_[static_cast<std::size_t>(rs.negative(k))] = signs_[static_cast<std::size_t>(k)];
}

int PinnedSigns::consistency_violations(const StructureConstants& n) const {
  const RootSystem& rs = n.roots();
  int bad = 0;
  for (int a = 0; a < rs.num_roots(); ++a)
    for (int b = 0; b < rs.num_roots(); ++b) {
      const auto c = rs.sum(a, b);
      if (!c) continue;
      if ((*this)(*c) * n(a, b) != (*this)(a) * (*this)(b) * n(rs.apply(theta0_, a), rs.apply(theta0_, b))) ++bad;
    }
  return bad;
}

}  // namespace symspace
