#include "sml/orbifold.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <unordered_map>
#include <unordered_set>

#include "sml/errors.hpp"

namespace sml::orbifold {

namespace {

// entries rounded to 9 decimals form the hash key for group-element identity
std::string round_key(const DenseOperator& m) {
  std::string key;
  key.reserve(static_cast<size_t>(m.size()) * 24);
  char buf[48];
  for (long i = 0; i < m.rows(); ++i)
    for (long j = 0; j < m.cols(); ++j) {
      // normalize -0 so keys are stable
      double re = m(i, j).real(), im = m(i, j).imag();
      if (std::abs(re) < 5e-10) re = 0.0;
      if (std::abs(im) < 5e-10) im = 0.0;
      std::snprintf(buf, sizeof buf, "%.9f %.9f;", re, im);
      key += buf;
    }
  return key;
}

bool approx_equal(const DenseOperator& a, const DenseOperator& b, double tol = 1e-9) {
  return (a - b).norm() <= tol * std::max(1.0, std::max(a.norm(), b.norm()));
}

}  // namespace

FiniteMatrixGroup group_from_generators(const std::vector<DenseOperator>& gens,
                                        bool sl_flag, long max_order) {
  if (gens.empty()) throw ConfigError("group_from_generators: no generators");
  const long d = gens[0].rows();
  if (sl_flag)  // determinants are multiplicative, so the generators decide
    for (const auto& gen : gens)
      if (std::abs(gen.determinant() - cdouble(1.0, 0.0)) > 1e-10)
        throw DomainError("group_from_generators: determinant != 1 under the SL flag");
  FiniteMatrixGroup g{static_cast<int>(d), {}};

  std::unordered_set<std::string> seen;
  g.elements.push_back(DenseOperator::Identity(d, d));
  seen.insert(round_key(g.elements[0]));

  for (size_t i = 0; i < g.elements.size(); ++i) {
    for (const auto& gen : gens) {
      if (gen.rows() != d || gen.cols() != d)
        throw ConfigError("group_from_generators: generator dimension mismatch");
      DenseOperator next = g.elements[i] * gen;
      if (seen.insert(round_key(next)).second) {
        if (static_cast<long>(g.elements.size()) >= max_order)
          throw ConfigError("group_from_generators: order exceeds the enumeration budget");
        g.elements.push_back(std::move(next));
      }
    }
  }
  return g;
}

bool is_closed(const FiniteMatrixGroup& g) {
  std::unordered_set<std::string> seen;
  for (const auto& e : g.elements) seen.insert(round_key(e));
  for (const auto& a : g.elements)
    for (const auto& b : g.elements)
      if (!seen.count(round_key(a * b))) return false;
  return true;
}

FiniteMatrixGroup quaternion_group() {
  const cdouble i(0.0, 1.0);
  DenseOperator qi(2, 2), qj(2, 2);
  qi << i, 0.0, 0.0, -i;
  qj << 0.0, 1.0, -1.0, 0.0;
  return group_from_generators({qi, qj}, /*sl_flag=*/true);
}

DenseOperator AbelianDiagonalGroup::realize(const std::vector<int>& exponents) const {
  const cdouble zeta = std::polar(1.0, 2.0 * std::numbers::pi / (r + 1));
  DenseOperator m = DenseOperator::Zero(n, n);
  for (int j = 0; j < n; ++j) m(j, j) = std::pow(zeta, exponents[j]);
  return m;
}

AbelianDiagonalGroup build_Ar(int n, int r, long max_order) {
  if (n < 2) throw ConfigError("build_Ar: n must be >= 2");
  if (r < 1) throw ConfigError("build_Ar: r must be >= 1");
  double count = std::pow(double(r + 1), n - 1);
  if (count > double(max_order))
    throw ConfigError("build_Ar: (r+1)^{n-1} exceeds the enumeration budget");

  AbelianDiagonalGroup g{n, r, {}};
  // the first n-1 exponents are free; the last is forced by the zero-sum rule
  std::vector<int> v(n, 0);
  const int mod = r + 1;
  const long free_count = static_cast<long>(count);
  for (long idx = 0; idx < free_count; ++idx) {
    long rest = idx;
    int sum = 0;
    for (int j = 0; j < n - 1; ++j) {
      v[j] = static_cast<int>(rest % mod);
      rest /= mod;
      sum += v[j];
    }
    v[n - 1] = ((-sum) % mod + mod) % mod;
    g.elements.push_back(v);
  }
  return g;
}

Rational orbifold_euler_linear(const FiniteMatrixGroup& g) {
  const long order = g.order();
  if (order == 0) throw ConfigError("orbifold_euler_linear: empty group");
  long commuting = 0;
  for (const auto& a : g.elements)
    for (const auto& b : g.elements)
      if (approx_equal(a * b, b * a)) ++commuting;
  return Rational(commuting, order);
}

Rational orbifold_euler_linear(const AbelianDiagonalGroup& g) {
  // diagonal matrices commute pairwise; count the pairs literally
  const long order = g.order();
  if (order == 0) throw ConfigError("orbifold_euler_linear: empty group");
  const long commuting = order * order;
  return Rational(commuting, order);
}

GroupCounts class_and_rep_counts(const FiniteMatrixGroup& g) {
  std::unordered_map<std::string, size_t> index;
  for (size_t i = 0; i < g.elements.size(); ++i) index[round_key(g.elements[i])] = i;

  std::vector<char> assigned(g.elements.size(), 0);
  long classes = 0;
  for (size_t i = 0; i < g.elements.size(); ++i) {
    if (assigned[i]) continue;
    ++classes;
    for (const auto& h : g.elements) {
      const DenseOperator conj = h * g.elements[i] * h.inverse();
      auto it = index.find(round_key(conj));
      if (it == index.end())
        throw EvaluationError("class_and_rep_counts: conjugate escaped the element list");
      assigned[it->second] = 1;
    }
  }
  return {classes, classes};
}

GroupCounts class_and_rep_counts(const AbelianDiagonalGroup& g) {
  const long n = g.order();
  return {n, n};  // abelian: every element is its own class
}

HypersurfaceCheck hypersurface_check(int n, int r, const std::vector<cdouble>& z) {
  if (static_cast<int>(z.size()) != n)
    throw ConfigError("hypersurface_check: need n coordinates");
  cdouble x = 1.0;
  for (const auto& zj : z) x *= zj;
  cdouble xr = 1.0;
  for (int i = 0; i < r + 1; ++i) xr *= x;
  cdouble prod_y = 1.0;
  std::vector<cdouble> y(n);
  for (int j = 0; j < n; ++j) {
    cdouble p = 1.0;
    for (int i = 0; i < r + 1; ++i) p *= z[j];
    y[j] = p;
    prod_y *= p;
  }

  // invariance of the map under one nontrivial group element
  double defect = 0.0;
  if (n >= 2) {
    std::vector<int> expo(n, 0);
    expo[0] = 1;
    expo[1] = r;  // sums to r+1 = 0 mod r+1
    const cdouble zeta = std::polar(1.0, 2.0 * std::numbers::pi / (r + 1));
    std::vector<cdouble> gz(n);
    for (int j = 0; j < n; ++j) gz[j] = std::pow(zeta, expo[j]) * z[j];
    cdouble gx = 1.0;
    for (const auto& v : gz) gx *= v;
    defect = std::abs(gx - x);
    for (int j = 0; j < n; ++j) {
      cdouble p = 1.0;
      for (int i = 0; i < r + 1; ++i) p *= gz[j];
      defect = std::max(defect, std::abs(p - y[j]));
    }
  }
  return {xr - prod_y, defect};
}

long exceptional_divisor_count(int r) {
  if (r < 1) throw ConfigError("exceptional_divisor_count: r must be >= 1");
  return static_cast<long>(r) * (r + 1) * (r + 2) / 6;
}

}  // namespace sml::orbifold
