#include "symspace/root_system.hpp"

#include <Eigen/Cholesky>
#include <Eigen/LU>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace symspace {

namespace {

constexpr int kMaxSimpleRank = 4;
constexpr int kMaxTotalRank = 8;

RationalMatrix simple_gram(Family family, int n) {
  RationalMatrix g(static_cast<std::size_t>(n));
  auto link = [&](int i, int j, const Rational& v) {
    g(i, j) = v;
    g(j, i) = v;
  };
  switch (family) {
    case Family::A:
      for (int i = 0; i < n; ++i) g(i, i) = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::B:
      // e_i - e_{i+1}, then the short root e_n.
      for (int i = 0; i < n; ++i) g(i, i) = 2;
      g(n - 1, n - 1) = 1;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::C:
      // Half the usual (e_i - e_{i+1}, 2 e_n) normalization, which puts C2 at
      // <a,a> = 1, <b,b> = 2, <a,b> = -1.
      for (int i = 0; i < n; ++i) g(i, i) = 1;
      g(n - 1, n - 1) = 2;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, Rational(-1, 2));
      link(n - 2, n - 1, -1);
      break;
    case Family::D:
      // e_i - e_{i+1} (i < n), e_{n-1} + e_n: a fork at node n-2.
      for (int i = 0; i < n; ++i) g(i, i) = 2;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case Family::G:
      g(0, 0) = 1;
      g(1, 1) = 3;
      link(0, 1, Rational(-3, 2));
      break;
  }
  return g;
}

void validate_family_rank(Family family, int rank) {
  const char letter = family_letter(family);
  auto reject = [&](const char* why) {
    throw std::invalid_argument(std::string("unsupported root system ") + letter + ":" + std::to_string(rank) +
                                ": " + why);
  };
  if (rank < 1) reject("rank must be positive");
  if (rank > kMaxSimpleRank && family != Family::G) reject("rank above 4 is not supported");
  switch (family) {
    case Family::A:
      break;
    case Family::B:
    case Family::C:
      if (rank < 2) reject("B_n and C_n need n >= 2");
      break;
    case Family::D:
      if (rank < 3) reject("D_n needs n >= 3");
      break;
    case Family::G:
      if (rank != 2) reject("only G2 exists");
      break;
  }
}

IntMatrix reflection_matrix(const IntMatrix& cartan, int j) {
  const auto n = cartan.rows();
  IntMatrix s = IntMatrix::Identity(n, n);
  // s_j(gamma) = gamma - (sum_i gamma_i A_ij) alpha_j
  for (Eigen::Index i = 0; i < n; ++i) s(j, i) -= cartan(i, j);
  return s;
}

std::vector<long long> matrix_key(const IntMatrix& m) {
  return std::vector<long long>(m.data(), m.data() + m.size());
}

Family parse_family(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'A':
      return Family::A;
    case 'B':
      return Family::B;
    case 'C':
      return Family::C;
    case 'D':
      return Family::D;
    case 'G':
      return Family::G;
    default:
      throw std::invalid_argument(std::string("unsupported root system family '") + c + "'");
  }
}

RootSystem parse_simple(std::string_view part) {
  std::string s;
  for (char c : part)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.size() < 2) throw std::invalid_argument("bad root system spec '" + std::string(part) + "'");
  const Family fam = parse_family(s[0]);
  std::string digits = s.substr(s[1] == ':' ? 2 : 1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw std::invalid_argument("bad root system rank in '" + std::string(part) + "'");
  if (digits.size() > 3) throw std::invalid_argument("bad root system rank in '" + std::string(part) + "'");
  return build_root_system(fam, std::stoi(digits));
}

}  // namespace

char family_letter(Family f) {
  switch (f) {
    case Family::A:
      return 'A';
    case Family::B:
      return 'B';
    case Family::C:
      return 'C';
    case Family::D:
      return 'D';
    case Family::G:
      return 'G';
  }
  return '?';
}

RootCoords WeylGroup::apply(std::size_t i, const RootCoords& root) const {
  const IntMatrix& w = elements_.at(i);
  if (static_cast<Eigen::Index>(root.size()) != w.cols()) throw std::invalid_argument("WeylGroup::apply: dimension mismatch");
  RootCoords out(root.size(), 0);
  for (Eigen::Index r = 0; r < w.rows(); ++r) {
    long long acc = 0;
    for (Eigen::Index c = 0; c < w.cols(); ++c) acc += w(r, c) * root[c];
    out[r] = static_cast<int>(acc);
  }
  return out;
}

WeylGroup weyl_group_closure(const std::vector<IntMatrix>& generators, const Eigen::MatrixXd& basis,
                             std::size_t max_order) {
  if (generators.empty()) throw std::invalid_argument("weyl_group_closure: no generators");
  const auto n = generators.front().rows();
  WeylGroup g;
  std::map<std::vector<long long>, std::size_t> seen;

  const IntMatrix id = IntMatrix::Identity(n, n);
  g.elements_.push_back(id);
  g.signs_.push_back(1);
  seen.emplace(matrix_key(id), 0);

  // Breadth-first over words in the generators; each generator is a
  // reflection, so one more letter flips the sign.
  for (std::size_t head = 0; head < g.elements_.size(); ++head) {
    for (const IntMatrix& s : generators) {
      IntMatrix next = s * g.elements_[head];
      auto key = matrix_key(next);
      if (seen.count(key)) continue;
      if (g.elements_.size() >= max_order)
        throw std::runtime_error("weyl_group: closure exceeded the safety bound of " + std::to_string(max_order) +
                                 " elements");
      seen.emplace(std::move(key), g.elements_.size());
      g.signs_.push_back(-g.signs_[head]);
      g.elements_.push_back(std::move(next));
    }
  }

  const Eigen::MatrixXd basis_inv = basis.inverse();
  g.orthogonal_.reserve(g.elements_.size());
  for (const IntMatrix& w : g.elements_) g.orthogonal_.push_back(basis * w.cast<double>() * basis_inv);
  return g;
}

void RootSystem::finish() {
  const auto n = static_cast<Eigen::Index>(gram_.size());
  rank_ = static_cast<int>(n);

  cartan_ = IntMatrix(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      Rational a = 2 * gram_(i, j) / gram_(j, j);
      if (a.get_den() != 1) throw std::logic_error("RootSystem: non-integral Cartan entry");
      cartan_(i, j) = a.get_num().get_si();
    }

  std::vector<IntMatrix> reflections;
  for (Eigen::Index j = 0; j < n; ++j) reflections.push_back(reflection_matrix(cartan_, static_cast<int>(j)));

  // Roots: orbit of the simple roots under the simple reflections.
  std::set<RootCoords> roots;
  std::vector<RootCoords> frontier;
  for (Eigen::Index j = 0; j < n; ++j) {
    RootCoords e(n, 0);
    e[j] = 1;
    if (roots.insert(e).second) frontier.push_back(e);
  }
  while (!frontier.empty()) {
    RootCoords r = std::move(frontier.back());
    frontier.pop_back();
    for (const IntMatrix& s : reflections) {
      RootCoords img(n, 0);
      for (Eigen::Index a = 0; a < n; ++a) {
        long long acc = 0;
        for (Eigen::Index b = 0; b < n; ++b) acc += s(a, b) * r[b];
        img[a] = static_cast<int>(acc);
      }
      if (roots.insert(img).second) frontier.push_back(std::move(img));
    }
  }

  positive_.clear();
  for (const auto& r : roots)
    if (std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; })) positive_.push_back(r);
  std::sort(positive_.begin(), positive_.end(), [](const RootCoords& a, const RootCoords& b) {
    const int ha = std::accumulate(a.begin(), a.end(), 0);
    const int hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a > b;
  });

  Eigen::MatrixXd gd(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) gd(i, j) = gram_(i, j).get_d();
  Eigen::LLT<Eigen::MatrixXd> llt(gd);
  if (llt.info() != Eigen::Success) throw std::logic_error("RootSystem: Gram matrix is not positive definite");
  simple_orth_ = llt.matrixL();

  positive_orth_ = Eigen::MatrixXd(static_cast<Eigen::Index>(positive_.size()), n);
  for (std::size_t k = 0; k < positive_.size(); ++k) {
    Eigen::VectorXd c(n);
    for (Eigen::Index i = 0; i < n; ++i) c[i] = positive_[k][i];
    positive_orth_.row(static_cast<Eigen::Index>(k)) = (simple_orth_.transpose() * c).transpose();
  }

  weyl_ = std::make_shared<const WeylGroup>(weyl_group_closure(reflections, simple_orth_.transpose(), kWeylOrderBound));
}

std::string RootSystem::label() const {
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += "x";
    out += family_letter(f.family);
    out += std::to_string(f.rank);
  }
  return out;
}

std::string RootSystem::family_name() const {
  if (factors_.size() == 1) return std::string(1, family_letter(factors_.front().family));
  return "semisimple";
}

std::vector<RootCoords> RootSystem::all_roots() const {
  std::vector<RootCoords> out = positive_;
  for (const auto& r : positive_) {
    RootCoords neg = r;
    for (int& c : neg) c = -c;
    out.push_back(std::move(neg));
  }
  return out;
}

Rational RootSystem::inner(std::span<const int> a, std::span<const int> b) const {
  if (a.size() != gram_.size() || b.size() != gram_.size()) throw std::invalid_argument("RootSystem::inner: dimension mismatch");
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) acc += gram_(i, j) * (a[i] * b[j]);
  }
  return acc;
}

Eigen::VectorXd RootSystem::to_orthonormal(const Eigen::VectorXd& root_coords) const {
  if (root_coords.size() != rank_) throw std::invalid_argument("to_orthonormal: dimension mismatch");
  return simple_orth_.transpose() * root_coords;
}

Eigen::VectorXd RootSystem::to_root_coords(const Eigen::VectorXd& orthonormal) const {
  if (orthonormal.size() != rank_) throw std::invalid_argument("to_root_coords: dimension mismatch");
  return simple_orth_.transpose().triangularView<Eigen::Upper>().solve(orthonormal);
}

RootSystem build_root_system(Family family, int rank) {
  validate_family_rank(family, rank);
  RootSystem R;
  R.factors_ = {SimpleFactor{family, rank}};
  R.gram_ = simple_gram(family, rank);
  R.finish();
  return R;
}

RootSystem build_root_system(std::string_view spec) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= spec.size(); ++i) {
    if (i == spec.size() || spec[i] == '+' || spec[i] == 'x' || spec[i] == 'X') {
      parts.push_back(spec.substr(start, i - start));
      start = i + 1;
    }
  }
  RootSystem R = parse_simple(parts.front());
  for (std::size_t k = 1; k < parts.size(); ++k) R = direct_sum(R, parse_simple(parts[k]));
  return R;
}

RootSystem direct_sum(const RootSystem& a, const RootSystem& b) {
  const std::size_t na = a.gram_.size();
  const std::size_t nb = b.gram_.size();
  if (static_cast<int>(na + nb) > kMaxTotalRank)
    throw std::invalid_argument("direct_sum: total rank above " + std::to_string(kMaxTotalRank) + " is not supported");
  RootSystem R;
  R.factors_ = a.factors_;
  R.factors_.insert(R.factors_.end(), b.factors_.begin(), b.factors_.end());
  R.gram_ = RationalMatrix(na + nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) R.gram_(i, j) = a.gram_(i, j);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j) R.gram_(na + i, na + j) = b.gram_(i, j);
  R.finish();
  return R;
}

RootCoords rho_root_coords(const RootSystem& R) {
  RootCoords r(static_cast<std::size_t>(R.rank()), 0);
  for (const auto& a : R.positive_roots())
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += a[i];
  return r;
}

Eigen::VectorXd rho(const RootSystem& R) { return R.positive_roots_orthonormal().colwise().sum().transpose(); }

WeylGroup weyl_group(const RootSystem& R, std::size_t max_order) {
  std::vector<IntMatrix> reflections;
  for (int j = 0; j < R.rank(); ++j) reflections.push_back(reflection_matrix(R.cartan(), j));
  return weyl_group_closure(reflections, R.simple_roots_orthonormal().transpose(), max_order);
}

std::vector<Polynomial> pi_plus_factors(const RootSystem& R) {
  std::vector<Polynomial> out;
  out.reserve(R.positive_roots().size());
  for (const auto& a : R.positive_roots()) {
    std::vector<Rational> coeffs(a.begin(), a.end());
    out.push_back(Polynomial::linear(coeffs));
  }
  return out;
}

Polynomial pi_plus_poly(const RootSystem& R) {
  const auto factors = pi_plus_factors(R);
  return product(factors, static_cast<std::size_t>(R.rank()));
}

Polynomial laplacian_poly(const RootSystem& R, const Polynomial& p) { return laplacian(p, R.gram()); }

Rational form_pairing(const RootSystem& R, const Polynomial& f, const Polynomial& g) {
  const std::size_t n = static_cast<std::size_t>(R.rank());
  if (f.num_vars() != n || g.num_vars() != n) throw std::invalid_argument("form_pairing: dimension mismatch");
  if ((!f.is_zero() && f.degree() != 1) || (!g.is_zero() && g.degree() != 1) || !f.is_homogeneous() ||
      !g.is_homogeneous())
    throw std::invalid_argument("form_pairing: arguments must be linear forms");
  auto coeffs = [n](const Polynomial& p) {
    std::vector<Rational> c(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      Polynomial::Exponent e(n, 0);
      e[i] = 1;
      c[i] = p.coefficient(e);
    }
    return c;
  };
  const auto b = coeffs(f);
  const auto c = coeffs(g);
  Rational acc = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) acc += b[i] * R.gram()(i, j) * c[j];
  return acc;
}

Polynomial pair_sum(const RootSystem& R, std::span<const Polynomial> factors) {
  const std::size_t n = static_cast<std::size_t>(R.rank());
  const std::size_t d = factors.size();
  Polynomial sum(n);
  std::vector<Polynomial> rest;
  rest.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (i == j) continue;
      const Rational pairing = form_pairing(R, factors[i], factors[j]);
      if (pairing == 0) continue;
      rest.clear();
      for (std::size_t k = 0; k < d; ++k)
        if (k != i && k != j) rest.push_back(factors[k]);
      sum += product(rest, n) * pairing;
    }
  }
  return sum;
}

Polynomial pair_sum_poly(const RootSystem& R) {
  const auto factors = pi_plus_factors(R);
  return pair_sum(R, factors);
}

std::vector<Rational> spectral_coordinates(const RootSystem& R, std::span<const Rational> root_coords) {
  const std::size_t n = static_cast<std::size_t>(R.rank());
  if (root_coords.size() != n) throw std::invalid_argument("spectral_coordinates: dimension mismatch");
  std::vector<Rational> y(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) y[i] += R.gram()(i, j) * root_coords[j];
  return y;
}

double pi_plus(const RootSystem& R, const Eigen::VectorXd& mu) {
  if (mu.size() != R.rank()) throw std::invalid_argument("pi_plus: dimension mismatch");
  double p = 1.0;
  const auto& roots = R.positive_roots_orthonormal();
  for (Eigen::Index k = 0; k < roots.rows(); ++k) p *= roots.row(k).dot(mu);
  return p;
}

Rational pi_plus_exact(const RootSystem& R, std::span<const Rational> root_coords) {
  const auto y = spectral_coordinates(R, root_coords);
  Rational p = 1;
  for (const auto& a : R.positive_roots()) {
    Rational form = 0;
    for (std::size_t i = 0; i < y.size(); ++i) form += a[i] * y[i];
    p *= form;
  }
  return p;
}

bool weyl_sign_equivariance_check(const RootSystem& R, const Eigen::VectorXd& mu, std::size_t w) {
  const WeylGroup& W = R.weyl();
  const double base = pi_plus(R, mu);
  const double moved = pi_plus(R, W.orthogonal(w) * mu);
  return std::abs(moved - W.sign(w) * base) <= 1e-12 * (1.0 + std::abs(base));
}

bool weyl_sign_equivariance_exact(const RootSystem& R, std::span<const Rational> root_coords, std::size_t w) {
  const WeylGroup& W = R.weyl();
  const IntMatrix& m = W.root_matrix(w);
  const std::size_t n = root_coords.size();
  if (static_cast<Eigen::Index>(n) != m.cols()) throw std::invalid_argument("weyl_sign_equivariance_exact: dimension mismatch");
  std::vector<Rational> moved(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) moved[i] += Rational(static_cast<long>(m(i, j))) * root_coords[j];
  return pi_plus_exact(R, moved) == W.sign(w) * pi_plus_exact(R, root_coords);
}

nlohmann::json to_json(const RootSystem& R) {
  using nlohmann::json;
  const std::size_t n = static_cast<std::size_t>(R.rank());
  auto rational_rows = [](const std::vector<RootCoords>& rows) {
    json out = json::array();
    for (const auto& r : rows) {
      json row = json::array();
      for (int c : r) row.push_back(format_rational(Rational(c)));
      out.push_back(row);
    }
    return out;
  };

  std::vector<RootCoords> simple;
  for (std::size_t i = 0; i < n; ++i) {
    RootCoords e(n, 0);
    e[i] = 1;
    simple.push_back(e);
  }

  json gram = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(format_rational(R.gram()(i, j)));
    gram.push_back(row);
  }

  json components = json::array();
  for (const auto& f : R.factors()) components.push_back({{"family", std::string(1, family_letter(f.family))}, {"rank", f.rank}});

  json orth = json::array();
  for (Eigen::Index i = 0; i < R.simple_roots_orthonormal().rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < R.simple_roots_orthonormal().cols(); ++j) row.push_back(R.simple_roots_orthonormal()(i, j));
    orth.push_back(row);
  }

  json rho_json = json::array();
  for (int c : rho_root_coords(R)) rho_json.push_back(format_rational(Rational(c)));

  return json{{"family", R.family_name()},
              {"label", R.label()},
              {"rank", R.rank()},
              {"components", components},
              {"basis", "simple_roots"},
              {"gram", gram},
              {"simple_roots", rational_rows(simple)},
              {"positive_roots", rational_rows(R.positive_roots())},
              {"num_positive", R.num_positive()},
              {"rho", rho_json},
              {"simple_roots_orthonormal", orth},
              {"weyl_order", R.weyl().order()}};
}

}  // namespace symspace
