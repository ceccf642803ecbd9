// Acceptance suite: runs every contract criterion at its pinned tolerance and
// prints one PASS/FAIL line per criterion. Exits nonzero when any line fails.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sml/report.hpp"
#include "sml/suites.hpp"

#ifndef SML_CLI_PATH
#define SML_CLI_PATH "./sml"
#endif

namespace {

using sml::report::Report;

int g_failures = 0;

void line(int idx, const std::string& name, bool pass, const std::string& detail) {
  std::printf("%s  [%2d] %-38s %s\n", pass ? "PASS" : "FAIL", idx, name.c_str(),
              detail.c_str());
  if (!pass) ++g_failures;
}

// all checks with this name pass, and at least min_count of them exist
bool checks_pass(const Report& rep, const std::string& name, int min_count = 1) {
  int found = 0;
  for (const auto& c : rep.checks) {
    if (c.name != name) continue;
    ++found;
    if (!c.pass) return false;
  }
  return found >= min_count;
}

double worst_residual(const Report& rep, const std::string& name) {
  double worst = 0.0;
  for (const auto& c : rep.checks)
    if (c.name == name) worst = std::max(worst, c.residual);
  return worst;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(SML_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main() {
  using sml::report::StopWatch;
  sml::suites::SuiteConfig cfg;  // seed 0, pinned tolerances inside the suites

  // --- chiral Potts: criteria 1-4 ---
  StopWatch sw_cp;
  const Report cp = sml::suites::chiral_potts(cfg);
  const double t_cp = sw_cp.seconds();

  double t_periodicity = 0.0, t_commutation = 0.0;
  for (const auto& c : cp.checks) {
    if (c.name == "weight-periodicity") t_periodicity += c.wall_seconds;
    if (c.name == "transfer-commutation") t_commutation += c.wall_seconds;
  }
  line(1, "weight periodicity (N=2..5, 50 pairs)",
       checks_pass(cp, "weight-periodicity", 4) && t_periodicity < 5.0,
       "worst " + fmt(worst_residual(cp, "weight-periodicity")) + " tol 1e-10, " +
           fmt(t_periodicity) + " s");
  line(2, "transfer commutation (CP)",
       checks_pass(cp, "transfer-commutation", 3) && t_commutation < 30.0,
       "worst " + fmt(worst_residual(cp, "transfer-commutation")) + " tol 1e-9, " +
           fmt(t_commutation) + " s");
  line(3, "T(p,p) = identity", checks_pass(cp, "transfer-identity", 3),
       "worst " + fmt(worst_residual(cp, "transfer-identity")) + " tol 1e-10");
  line(4, "hyperelliptic reduction + R action",
       checks_pass(cp, "hyperelliptic-residual", 4) && checks_pass(cp, "R-action", 4) &&
           checks_pass(cp, "curve-equations", 4),
       "worst " + fmt(std::max(worst_residual(cp, "hyperelliptic-residual"),
                               worst_residual(cp, "R-action"))) +
           " tol 1e-10");

  // --- superintegrable chain / Onsager: criteria 5-6 ---
  StopWatch sw_on;
  const Report on = sml::suites::superintegrable_onsager(cfg);
  const double t_on = sw_on.seconds();
  line(5, "Dolan-Grady + Onsager relations",
       checks_pass(on, "dolan-grady", 4) && checks_pass(on, "onsager-relations", 3) &&
           t_on < 60.0,
       "DG worst " + fmt(worst_residual(on, "dolan-grady")) + ", window 4, " + fmt(t_on) +
           " s");
  line(6, "H(k') Hermitian, real spectrum, Ising",
       checks_pass(on, "hamiltonian-hermitian", 2) && checks_pass(on, "spectrum-real", 2) &&
           checks_pass(on, "ising-reduction-exact", 2),
       "Ising reduction residual " + fmt(worst_residual(on, "ising-reduction-exact")) +
           " (exact)");

  // --- Faddeev-Kashaev: criterion 7 ---
  StopWatch sw_fk;
  const Report fk = sml::suites::fk_bethe(cfg);
  const double t_fk = sw_fk.seconds();
  line(7, "FK suite (Weyl, commute, gauge, tau, poly)",
       fk.pass() && checks_pass(fk, "transfer-commutation", 2) &&
           checks_pass(fk, "tau-curve-preservation", 2) &&
           checks_pass(fk, "eigenvalue-poly-holdout", 2) &&
           checks_pass(fk, "eigenvalue-poly-trace-sum", 2) && t_fk < 30.0,
       "all " + std::to_string(fk.checks.size()) + " checks, " + fmt(t_fk) + " s");

  // --- N=2 characters: criterion 8 ---
  const Report n2 = sml::suites::n2_characters(cfg);
  std::string adjudication = "missing";
  for (const auto& c : n2.checks)
    if (c.name == "h-convention-adjudication" && !c.note.empty()) adjudication = c.note;
  line(8, "N=2 algebra and characters",
       checks_pass(n2, "jacobi-window-3") &&
           checks_pass(n2, "theta-truncation-stability") &&
           checks_pass(n2, "eta-truncation-stability") &&
           checks_pass(n2, "odd-theta-origin") &&
           checks_pass(n2, "character-leading-extraction") &&
           checks_pass(n2, "character-charge-grid") &&
           checks_pass(n2, "h-convention-adjudication") && adjudication != "missing",
       "adjudication: " + adjudication.substr(0, 60));

  // --- orbifold counts: criterion 9 ---
  const Report orb = sml::suites::orbifold_euler(cfg);
  line(9, "orbifold Euler = classes = irreps",
       orb.pass() && checks_pass(orb, "abelian-counts") &&
           checks_pass(orb, "quaternion-counts") &&
           checks_pass(orb, "hypersurface-residual") &&
           checks_pass(orb, "divisor-count-table"),
       "A_r(n) r<=4 n<=5, Q8, divisor table {1,4,10,20}");

  // --- CLI determinism and exit codes: criterion 10 ---
  {
    const std::string out1 = "/tmp/sml_accept_1.json";
    const std::string out2 = "/tmp/sml_accept_2.json";
    const std::string common =
        "verify --module orbifold-euler --seed 0 --tol 1e-9 --out ";
    const int rc1 = run_cli(common + out1);
    const int rc2 = run_cli(common + out2);
    const bool identical = slurp(out1) == slurp(out2) && !slurp(out1).empty();

    const int rc_usage_flag = run_cli("verify --no-such-flag");
    const int rc_usage_module = run_cli("verify --module no-such-module");
    // a tolerance nobody can meet makes the default-tolerance checks fail honestly
    const int rc_fail = run_cli("verify --module weyl-core --tol 1e-18 --out /tmp/sml_accept_fail.json");

    const bool pass = rc1 == 0 && rc2 == 0 && identical && rc_usage_flag == 2 &&
                      rc_usage_module == 2 && rc_fail == 1;
    line(10, "CLI determinism + exit codes", pass,
         std::string("byte-identical=") + (identical ? "yes" : "NO") + ", exits " +
             std::to_string(rc1) + "/" + std::to_string(rc_usage_flag) + "/" +
             std::to_string(rc_fail));
    std::remove(out1.c_str());
    std::remove(out2.c_str());
    std::remove("/tmp/sml_accept_fail.json");
  }

  std::printf("%s: %d criterion(s) failed\n", g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              g_failures);
  std::printf("(chiral-potts %.2fs, onsager %.2fs, fk %.2fs)\n", t_cp, t_on, t_fk);
  return g_failures == 0 ? 0 : 1;
}
