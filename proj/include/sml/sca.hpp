#pragma once

#include <map>
#include <string>
#include <vector>

#include "sml/rational.hpp"

namespace sml::n2 {

// Mode of the N=2 superconformal algebra. Indices are stored doubled so that
// the half-odd-integer G modes stay exact: idx2 = 2m for L_m / J_m, 2p for
// G^pm_p with p in 1/2 + Z (NS convention), and 0 for the central element.
enum class ModeKind { L, J, Gplus, Gminus, Central };

struct SCAMode {
  ModeKind kind;
  std::int64_t idx2;

  static SCAMode l(std::int64_t m) { return {ModeKind::L, 2 * m}; }
  static SCAMode j(std::int64_t m) { return {ModeKind::J, 2 * m}; }
  static SCAMode gplus2(std::int64_t p2) { return {ModeKind::Gplus, p2}; }
  static SCAMode gminus2(std::int64_t p2) { return {ModeKind::Gminus, p2}; }
  static SCAMode central() { return {ModeKind::Central, 0}; }

  bool odd() const { return kind == ModeKind::Gplus || kind == ModeKind::Gminus; }
  Rational index() const { return Rational(idx2, 2); }
  std::string str() const;

  friend bool operator<(const SCAMode& a, const SCAMode& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.idx2 < b.idx2;
  }
  friend bool operator==(const SCAMode& a, const SCAMode& b) {
    return a.kind == b.kind && a.idx2 == b.idx2;
  }
};

// Formal linear combination of modes with exact rational coefficients.
using SCAElement = std::map<SCAMode, Rational>;

// The graded bracket of two basis modes: commutator for even pairs,
// anticommutator when both arguments are G modes. Central terms appear as
// rational multiples of the Central mode.
SCAElement sca_bracket(const SCAMode& x, const SCAMode& y);

SCAElement bracket(const SCAElement& x, const SCAElement& y);

SCAElement scale(const SCAElement& x, const Rational& r);
SCAElement add(const SCAElement& x, const SCAElement& y);
Rational max_abs_coeff(const SCAElement& x);

// Graded Jacobi identity in Leibniz form,
//   [x,[y,z]] - [[x,y],z] - (-1)^{|x||y|} [y,[x,z]],
// checked exhaustively over all mode triples with |index| <= window.
// Returns the largest absolute coefficient of any residual (exactly 0 when
// the structure constants are consistent).
Rational jacobi_residual(int window);

// All modes with |index| <= window (L, J, G+, G-, and the central element).
std::vector<SCAMode> mode_window(int window);

}  // namespace sml::n2
