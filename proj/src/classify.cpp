#include "symspace/classify.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include <Eigen/LU>

#include "symspace/catalog.hpp"

namespace symspace {

namespace {

IntMatrix tau_matrix(const RootClassification& rc) {
  const RootSystem& rs = rc.roots();
  IntMatrix t(rs.rank(), rs.rank());
  for (int i = 0; i < rs.rank(); ++i) t.col(i) = rs.root(rc.tau(i));
  return t;
}

int matrix_rank(const IntMatrix& m) {
  if (m.size() == 0) return 0;
  return static_cast<int>(Eigen::FullPivLU<Eigen::MatrixXd>(m.cast<double>()).rank());
}

std::vector<int> reflection_in_root(const RootSystem& rs, int beta) {
  std::vector<int> out(static_cast<std::size_t>(rs.num_roots()));
  for (int k = 0; k < rs.num_roots(); ++k) {
    const auto image = rs.find(rs.root(k) - rs.pairing(k, beta) * rs.root(beta));
    if (!image) throw std::logic_error("root reflection left the root system");
    out[static_cast<std::size_t>(k)] = *image;
  }
  return out;
}

}  // namespace

RootClassification::RootClassification(std::shared_ptr<const Model> model, std::vector<int> tau, std::vector<int> eps,
                                       bool inner, std::vector<int> cayley_roots)
    : model_(std::move(model)), tau_(std::move(tau)), eps_(std::move(eps)), inner_(inner),
      cayley_roots_(std::move(cayley_roots)) {}

RootLabel RootClassification::label(int root) const {
  if (is_imaginary(root)) return RootLabel::imaginary;
  if (is_real(root)) return RootLabel::real;
  return RootLabel::complex;
}

int RootClassification::epsilon(int root) const {
  if (!is_imaginary(root)) throw std::domain_error("epsilon is only defined on imaginary roots");
  return eps_[static_cast<std::size_t>(root)];
}

RootClassification classify_roots(const InnerClass& inner, const GradingVector& s) {
  const RootSystem& rs = inner.roots();
  std::vector<int> tau(static_cast<std::size_t>(rs.num_roots()));
  std::vector<int> eps(tau.size(), 0);
  for (int k = 0; k < rs.num_roots(); ++k) {
    tau[static_cast<std::size_t>(k)] = rs.apply(inner.theta0, k);
    if (tau[static_cast<std::size_t>(k)] == k) eps[static_cast<std::size_t>(k)] = inner.epsilon(s, k);
  }
  return RootClassification(inner.model, std::move(tau), std::move(eps), inner.is_inner());
}

RootClassification classify_roots(const InvolutionClass& cls) { return classify_roots(*cls.inner, cls.canonical()); }

RootClassification cayley_transform(const RootClassification& rc, int beta) {
  if (!rc.is_noncompact(beta)) throw std::invalid_argument("Cayley transform needs a noncompact imaginary root");
  const RootSystem& rs = rc.roots();
  const auto s_beta = reflection_in_root(rs, beta);
  std::vector<int> tau(static_cast<std::size_t>(rs.num_roots()));
  std::vector<int> eps(tau.size(), 0);
  for (int k = 0; k < rs.num_roots(); ++k) {
    tau[static_cast<std::size_t>(k)] = s_beta[static_cast<std::size_t>(rc.tau(k))];
    if (tau[static_cast<std::size_t>(k)] != k) continue;
    if (!rc.is_imaginary(k) || rs.pairing(k, beta) != 0)
      throw std::logic_error("Cayley transform produced an unexpected imaginary root");
    eps[static_cast<std::size_t>(k)] = rc.epsilon(k) * (rs.sum(k, beta) ? -1 : 1);
  }
  auto roots = rc.cayley_roots();
  roots.push_back(beta);
  return RootClassification(rc.model(), std::move(tau), std::move(eps), rc.inner(), std::move(roots));
}

RootClassification maximally_split_torus(const RootClassification& rc) {
  RootClassification cur = rc;
  for (;;) {
    int beta = -1;
    for (int k = 0; k < cur.roots().num_positive() && beta < 0; ++k)
      if (cur.is_noncompact(k)) beta = k;
    if (beta < 0) return cur;
    cur = cayley_transform(cur, beta);
  }
}

std::vector<RootClassification> reachable_tori(const RootClassification& rc) {
  std::vector<RootClassification> out{rc};
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  auto key = [](const RootClassification& r) {
    std::vector<int> eps;
    for (int k = 0; k < r.roots().num_roots(); ++k) eps.push_back(r.is_imaginary(k) ? r.epsilon(k) : 0);
    return std::make_pair(r.tau(), eps);
  };
  seen.insert(key(rc));
  for (std::size_t h = 0; h < out.size(); ++h) {
    for (int k = 0; k < rc.roots().num_positive(); ++k) {
      if (!out[h].is_noncompact(k)) continue;
      RootClassification next = cayley_transform(out[h], k);
      if (seen.insert(key(next)).second) out.push_back(std::move(next));
    }
  }
  return out;
}

int dim_t_fixed(const RootClassification& rc) {
  const RootSystem& rs = rc.roots();
  const IntMatrix t = tau_matrix(rc);
  return rs.rank() - matrix_rank(t - IntMatrix::Identity(rs.rank(), rs.rank())) +
         (rc.inner() ? rs.central_torus_dim() : 0);
}

int dim_t_split(const RootClassification& rc) {
  const RootSystem& rs = rc.roots();
  const IntMatrix t = tau_matrix(rc);
  return rs.rank() - matrix_rank(t + IntMatrix::Identity(rs.rank(), rs.rank())) +
         (rc.inner() ? 0 : rs.central_torus_dim());
}

std::vector<int> root_kind_counts(const RootClassification& rc) {
  std::vector<int> counts(4, 0);
  for (int k = 0; k < rc.roots().num_roots(); ++k) {
    if (rc.is_imaginary(k))
      ++counts[rc.epsilon(k) > 0 ? 0 : 1];
    else
      ++counts[rc.is_complex(k) ? 2 : 3];
  }
  return counts;
}

int dim_k(const RootClassification& rc) {
  const auto c = root_kind_counts(rc);
  return dim_t_fixed(rc) + c[0] + (c[2] + c[3]) / 2;
}

int dim_u_theta(const RootClassification& rc, const Chamber& w) {
  const RootSystem& rs = rc.roots();
  int compact = 0;
  int pairs = 0;
  for (int k = 0; k < rs.num_roots(); ++k) {
    if (!w.is_positive(rs, k)) continue;
    if (rc.is_imaginary(k)) {
      if (rc.epsilon(k) > 0) ++compact;
    } else if (w.is_positive(rs, rc.tau(k))) {
      ++pairs;  // counted once from each end
    }
  }
  return compact + pairs / 2;
}

bool property_g(const RootClassification& rc, const Chamber& w) {
  const RootSystem& rs = rc.roots();
  for (int i = 0; i < rs.rank(); ++i) {
    const int beta = w.apply(i);
    if (rc.is_imaginary(beta)) {
      if (rc.epsilon(beta) > 0) return false;
    } else if (rc.is_complex(beta)) {
      const int image = rc.tau(beta);
      if (w.is_positive(rs, image) && !w.is_simple(rs, image)) return false;
    }
  }
  return true;
}

std::vector<int> imaginary_simple_roots(const RootClassification& rc, const Chamber& w) {
  const RootSystem& rs = rc.roots();
  std::vector<int> positive;
  for (int k = 0; k < rs.num_roots(); ++k)
    if (rc.is_imaginary(k) && w.is_positive(rs, k)) positive.push_back(k);
  std::vector<char> decomposable(static_cast<std::size_t>(rs.num_roots()), 0);
  for (int a : positive)
    for (int b : positive)
      if (const auto c = rs.sum(a, b)) decomposable[static_cast<std::size_t>(*c)] = 1;
  std::vector<int> out;
  for (int k : positive)
    if (!decomposable[static_cast<std::size_t>(k)]) out.push_back(k);
  return out;
}

std::optional<std::pair<RootClassification, Chamber>> open_chamber(const RootClassification& rc) {
  RootClassification ms = maximally_split_torus(rc);
  const RootSystem& rs = ms.roots();
  for (int k = 0; k < rs.num_roots(); ++k)
    if (ms.is_imaginary(k)) return std::nullopt;
  // lambda = v - tau(v) for a generic v; P = {alpha : (alpha, lambda) > 0} has tau(P) = -P.
  const int n = rs.rank();
  Eigen::MatrixXd gram(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gram(i, j) = rs.inner(rs.root(i), rs.root(j));
  static constexpr double kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                                       59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131};
  if (n > 32) throw std::length_error("rank too large");
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v(i) = std::sqrt(kPrimes[i]);
  const Eigen::VectorXd lambda = v - tau_matrix(ms).cast<double>() * v;
  const Eigen::VectorXd dual = gram * lambda;
  std::vector<char> positive(static_cast<std::size_t>(rs.num_roots()), 0);
  for (int k = 0; k < rs.num_roots(); ++k) {
    const double x = rs.root(k).cast<double>().dot(dual);
    if (std::abs(x) < 1e-9) throw std::logic_error("degenerate choice of generic vector");
    positive[static_cast<std::size_t>(k)] = x > 0;
  }
  Chamber w = chamber_for_positive_system(rs, positive);
  return std::make_pair(std::move(ms), std::move(w));
}

std::string k_subsystem(const RootClassification& rc) {
  const RootSystem& rs = rc.roots();
  if (!rc.inner()) throw std::invalid_argument("K-subsystem type is only available for inner involutions");
  for (int k = 0; k < rs.num_roots(); ++k)
    if (!rc.is_imaginary(k)) throw std::invalid_argument("K-subsystem type needs the fundamental torus");
  std::vector<int> compact;
  for (int k = 0; k < rs.num_positive(); ++k)
    if (rc.epsilon(k) > 0) compact.push_back(k);
  std::set<int> sums;
  for (int a : compact)
    for (int b : compact)
      if (const auto c = rs.sum(a, b)) sums.insert(*c);
  std::vector<int> simple;
  for (int k : compact)
    if (!sums.count(k)) simple.push_back(k);
  const int m = static_cast<int>(simple.size());
  IntMatrix cartan(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      cartan(i, j) = rs.pairing(simple[static_cast<std::size_t>(j)], simple[static_cast<std::size_t>(i)]);
  std::string name = m > 0 ? cartan_type_name(cartan) : "";
  const int torus = rs.rank() - m + rs.central_torus_dim();
  if (torus > 0) name += (name.empty() ? "T" : "+T") + std::to_string(torus);
  return name;
}

SymmetricSpaceReport report(const InvolutionClass& cls, const RealFormTable* table) {
  const RootSystem& rs = cls.inner->roots();
  const RootClassification rc = classify_roots(cls);
  SymmetricSpaceReport r;
  r.root_system = rs.name();
  r.class_id = cls.id();
  r.theta0 = cls.inner->theta0.cycles();
  r.grading = grading_string(cls.canonical());
  r.orbit_size = static_cast<int>(cls.orbit.size());
  r.inner = cls.inner->is_inner();
  r.dim_G = rs.num_roots() + rs.rank() + rs.central_torus_dim();
  r.dim_K = dim_k(rc);
  r.dim_T_fixed = dim_t_fixed(rc);
  r.quasi_split = is_quasisplit_class(cls);
  if (r.quasi_split) r.split_rank = rs.num_positive() + rs.rank() + rs.central_torus_dim() - r.dim_K;
  if (r.inner) r.k_type = k_subsystem(rc);
  if (table) r.real_form = table->lookup(r);
  return r;
}

}  // namespace symspace
