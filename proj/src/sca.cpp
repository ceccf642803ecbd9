#include "sml/sca.hpp"

namespace sml::n2 {

namespace {

void accumulate(SCAElement& e, const SCAMode& m, const Rational& r) {
  if (r.is_zero()) return;
  auto it = e.find(m);
  if (it == e.end()) {
    e.emplace(m, r);
  } else {
    it->second += r;
    if (it->second.is_zero()) e.erase(it);
  }
}

// [L_m, L_n] = (m-n) L_{m+n} + c (m^3 - m)/12 delta_{m,-n}
SCAElement bracket_LL(std::int64_t m2, std::int64_t n2) {
  SCAElement out;
  accumulate(out, SCAMode{ModeKind::L, m2 + n2}, Rational(m2 - n2, 2));
  if (m2 + n2 == 0) {
    const std::int64_t m = m2 / 2;
    accumulate(out, SCAMode::central(), Rational(m * m * m - m, 12));
  }
  return out;
}

// [J_m, J_n] = (c m / 3) delta_{m,-n}
SCAElement bracket_JJ(std::int64_t m2, std::int64_t n2) {
  SCAElement out;
  if (m2 + n2 == 0) accumulate(out, SCAMode::central(), Rational(m2, 6));
  return out;
}

// [L_m, J_n] = -n J_{m+n}
SCAElement bracket_LJ(std::int64_t m2, std::int64_t n2) {
  SCAElement out;
  accumulate(out, SCAMode{ModeKind::J, m2 + n2}, Rational(-n2, 2));
  return out;
}

// [L_m, G_p^pm] = (m/2 - p) G_{m+p}^pm
SCAElement bracket_LG(std::int64_t m2, std::int64_t p2, ModeKind g) {
  SCAElement out;
  accumulate(out, SCAMode{g, m2 + p2}, Rational(m2 - 2 * p2, 4));
  return out;
}

// [J_m, G_p^pm] = pm G_{m+p}^pm
SCAElement bracket_JG(std::int64_t m2, std::int64_t p2, ModeKind g) {
  SCAElement out;
  accumulate(out, SCAMode{g, m2 + p2}, Rational(g == ModeKind::Gplus ? 1 : -1));
  return out;
}

// {G_p^+, G_q^-} = 2 L_{p+q} + (p-q) J_{p+q} + (c/3)(p^2 - 1/4) delta_{p,-q}
SCAElement bracket_GpGm(std::int64_t p2, std::int64_t q2) {
  SCAElement out;
  accumulate(out, SCAMode{ModeKind::L, p2 + q2}, Rational(2));
  accumulate(out, SCAMode{ModeKind::J, p2 + q2}, Rational(p2 - q2, 2));
  if (p2 + q2 == 0) accumulate(out, SCAMode::central(), Rational(p2 * p2 - 1, 12));
  return out;
}

SCAElement negate(SCAElement e) {
  for (auto& [m, r] : e) r = -r;
  return e;
}

}  // namespace

std::string SCAMode::str() const {
  auto idx = [&] {
    return idx2 % 2 == 0 ? std::to_string(idx2 / 2) : std::to_string(idx2) + "/2";
  };
  switch (kind) {
    case ModeKind::L: return "L_" + idx();
    case ModeKind::J: return "J_" + idx();
    case ModeKind::Gplus: return "G+_" + idx();
    case ModeKind::Gminus: return "G-_" + idx();
    case ModeKind::Central: return "c";
  }
  return "?";
}

SCAElement sca_bracket(const SCAMode& x, const SCAMode& y) {
  using K = ModeKind;
  if (x.kind == K::Central || y.kind == K::Central) return {};

  switch (x.kind) {
    case K::L:
      switch (y.kind) {
        case K::L: return bracket_LL(x.idx2, y.idx2);
        case K::J: return bracket_LJ(x.idx2, y.idx2);
        default: return bracket_LG(x.idx2, y.idx2, y.kind);
      }
    case K::J:
      switch (y.kind) {
        case K::L: return negate(bracket_LJ(y.idx2, x.idx2));
        case K::J: return bracket_JJ(x.idx2, y.idx2);
        default: return bracket_JG(x.idx2, y.idx2, y.kind);
      }
    case K::Gplus:
      switch (y.kind) {
        case K::L: return negate(bracket_LG(y.idx2, x.idx2, x.kind));
        case K::J: return negate(bracket_JG(y.idx2, x.idx2, x.kind));
        case K::Gplus: return {};  // {G+, G+} = 0
        default: return bracket_GpGm(x.idx2, y.idx2);
      }
    default:  // Gminus
      switch (y.kind) {
        case K::L: return negate(bracket_LG(y.idx2, x.idx2, x.kind));
        case K::J: return negate(bracket_JG(y.idx2, x.idx2, x.kind));
        case K::Gplus: return bracket_GpGm(y.idx2, x.idx2);  // anticommutator symmetry
        default: return {};  // {G-, G-} = 0
      }
  }
}

SCAElement bracket(const SCAElement& x, const SCAElement& y) {
  SCAElement out;
  for (const auto& [mx, rx] : x)
    for (const auto& [my, ry] : y)
      for (const auto& [m, r] : sca_bracket(mx, my)) accumulate(out, m, rx * ry * r);
  return out;
}

SCAElement scale(const SCAElement& x, const Rational& r) {
  SCAElement out;
  for (const auto& [m, c] : x) accumulate(out, m, c * r);
  return out;
}

SCAElement add(const SCAElement& x, const SCAElement& y) {
  SCAElement out = x;
  for (const auto& [m, c] : y) accumulate(out, m, c);
  return out;
}

Rational max_abs_coeff(const SCAElement& x) {
  Rational best(0);
  for (const auto& [m, c] : x) {
    const Rational a = c < Rational(0) ? -c : c;
    if (best < a) best = a;
  }
  return best;
}

std::vector<SCAMode> mode_window(int window) {
  std::vector<SCAMode> modes;
  for (std::int64_t m = -window; m <= window; ++m) {
    modes.push_back(SCAMode::l(m));
    modes.push_back(SCAMode::j(m));
  }
  for (std::int64_t p2 = -2 * window + 1; p2 <= 2 * window - 1; p2 += 2) {
    modes.push_back(SCAMode::gplus2(p2));
    modes.push_back(SCAMode::gminus2(p2));
  }
  modes.push_back(SCAMode::central());
  return modes;
}

Rational jacobi_residual(int window) {
  if (window < 1) throw ConfigError("jacobi_residual: window must be >= 1");
  const auto modes = mode_window(window);
  Rational worst(0);
  for (const auto& x : modes) {
    for (const auto& y : modes) {
      const SCAElement xy = sca_bracket(x, y);
      const bool sign = x.odd() && y.odd();  // (-1)^{|x||y|}
      for (const auto& z : modes) {
        // [x,[y,z]] - [[x,y],z] - (-1)^{|x||y|}[y,[x,z]]
        SCAElement r = bracket({{x, Rational(1)}}, sca_bracket(y, z));
        r = add(r, negate(bracket(xy, {{z, Rational(1)}})));
        SCAElement t = bracket({{y, Rational(1)}}, sca_bracket(x, z));
        r = add(r, sign ? t : negate(t));
        const Rational res = max_abs_coeff(r);
        if (worst < res) worst = res;
      }
    }
  }
  return worst;
}

}  // namespace sml::n2
