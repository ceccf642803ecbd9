// sml: verification suites and evaluators for the solvable-models lab.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "sml/chiral_potts.hpp"
#include "sml/errors.hpp"
#include "sml/fk.hpp"
#include "sml/n2_characters.hpp"
#include "sml/onsager.hpp"
#include "sml/orbifold.hpp"
#include "sml/report.hpp"
#include "sml/suites.hpp"

namespace {

using sml::report::round15;
using json = nlohmann::json;

// write-then-rename so readers never observe a partial file
void write_atomic(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw sml::ConfigError("cannot open output file " + tmp);
    out << content;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw sml::ConfigError("cannot move output into place at " + path);
}

std::string fmt15(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::string report_csv(const sml::report::Report& rep) {
  std::string out = "suite,check,params,residual,tolerance,pass\n";
  for (const auto& c : rep.checks) {
    out += rep.suite + "," + c.name + ",\"" + c.params.dump() + "\"," +
           fmt15(round15(c.residual)) + "," + fmt15(round15(c.tolerance)) + "," +
           (c.pass ? "1" : "0") + "\n";
  }
  return out;
}

struct VerifyArgs {
  std::string module = "all";
  sml::suites::SuiteConfig cfg;
  int n = 0;
  int l = 0;
  std::string out;
  std::string format = "json";
  bool timings = false;
};

int run_verify(const VerifyArgs& a) {
  sml::suites::SuiteConfig cfg = a.cfg;
  if (a.n > 0) cfg.N = a.n;
  if (a.l > 0) cfg.L = a.l;

  std::vector<std::string> modules;
  if (a.module == "all")
    modules = sml::suites::suite_names();
  else
    modules.push_back(a.module);

  std::vector<sml::report::Report> reports;
  bool pass = true;
  for (const auto& m : modules) {
    reports.push_back(sml::suites::run_suite(m, cfg));
    pass = pass && reports.back().pass();
  }

  std::string payload;
  if (a.format == "json") {
    if (reports.size() == 1) {
      payload = sml::report::serialize(reports[0], a.timings);
    } else {
      json arr = json::array();
      for (const auto& r : reports) arr.push_back(sml::report::to_json(r, a.timings));
      payload = json{{"schema", 1}, {"pass", pass}, {"reports", arr}}.dump(2) + "\n";
    }
  } else if (a.format == "csv") {
    for (const auto& r : reports) payload += report_csv(r);
  } else {
    throw CLI::ValidationError("--format must be json or csv");
  }
  write_atomic(a.out, payload);

  for (const auto& r : reports)
    for (const auto& c : r.checks)
      if (!c.pass)
        std::cerr << "FAIL " << r.suite << "/" << c.name << " residual " << c.residual
                  << " tolerance " << c.tolerance << "\n";
  return pass ? 0 : 1;
}

struct CharacterArgs {
  int k = 1, l = 0, m = 0;
  std::string sector = "NS";
  double a = 0.0, b = 0.0;
  bool custom_twist = false;
  int orders = 0;
  double z_min = 0.05, z_max = 0.45;
  int z_num = 5;
  double tau_im = 1.0, tau_im_max = 0.0;
  int tau_num = 1;
  int terms = 0;
  std::string out;
};

sml::n2::Sector parse_sector(const std::string& s) {
  if (s == "NS" || s == "ns") return sml::n2::Sector::NS;
  if (s == "R" || s == "r" || s == "Ramond") return sml::n2::Sector::Ramond;
  throw CLI::ValidationError("--sector must be NS or R");
}

int run_character(const CharacterArgs& a) {
  const sml::n2::DiscreteLabel lab{a.k, a.l, a.m};
  sml::n2::validate(lab);

  if (a.orders > 0) {
    // q,y-expansion triples
    const auto exp = sml::n2::expand_character(lab, parse_sector(a.sector), a.orders);
    std::string payload = "exponent,charge,coeff_re,coeff_im\n";
    for (const auto& t : exp.terms)
      payload += t.exponent.str() + "," + t.charge.str() + "," +
                 fmt15(round15(t.coeff.real())) + "," + fmt15(round15(t.coeff.imag())) + "\n";
    write_atomic(a.out, payload);
    return 0;
  }

  sml::n2::TwistPair twist =
      a.custom_twist ? sml::n2::TwistPair{a.a, a.b}
                     : sml::n2::sector_twist(parse_sector(a.sector));
  const double tau_hi = a.tau_im_max > 0.0 ? a.tau_im_max : a.tau_im;
  std::string payload = "k,l,m,a,b,z,tau_im,re,im\n";
  for (int t = 0; t < a.tau_num; ++t) {
    const double tau_im =
        a.tau_num == 1 ? a.tau_im : a.tau_im + (tau_hi - a.tau_im) * t / double(a.tau_num - 1);
    for (int i = 0; i < a.z_num; ++i) {
      const double z = a.z_num == 1
                           ? a.z_min
                           : a.z_min + (a.z_max - a.z_min) * i / double(a.z_num - 1);
      const sml::n2::ModularPoint pt{sml::cdouble(0.0, tau_im), z};
      const sml::cdouble v = sml::n2::character(lab, twist, pt, a.terms);
      payload += std::to_string(a.k) + "," + std::to_string(a.l) + "," +
                 std::to_string(a.m) + "," + fmt15(twist.a) + "," + fmt15(twist.b) + "," +
                 fmt15(z) + "," + fmt15(tau_im) + "," + fmt15(round15(v.real())) + "," +
                 fmt15(round15(v.imag())) + "\n";
    }
  }
  write_atomic(a.out, payload);
  return 0;
}

sml::cdouble parse_complex(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) return {std::stod(s), 0.0};
  return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
}

json complex_json(sml::cdouble z) {
  return json::array({round15(z.real()), round15(z.imag())});
}

struct RapidityArgs {
  int n = 3;
  double kprime = 0.8;
  bool superintegrable = false;
  std::string B = "1,0", D = "1,0";
  std::vector<int> branches{0, 0, 0, 0};
  bool with_weights = false;
  std::string qB = "0.3,0.7", qD = "1,0";
  std::string out;
};

json rapidity_json(const sml::chiralpotts::RapidityPoint& p) {
  return json{{"N", p.N},           {"a", complex_json(p.a)}, {"b", complex_json(p.b)},
              {"c", complex_json(p.c)}, {"d", complex_json(p.d)},
              {"k", round15(p.coupling.k)}, {"kprime", round15(p.coupling.kprime)}};
}

int run_rapidity(const RapidityArgs& a) {
  namespace cp = sml::chiralpotts;
  const auto cpl = cp::Coupling::from_kprime(a.kprime);
  if (a.branches.size() != 4)
    throw CLI::ValidationError("--branches needs four entries a,b,c,d");
  const cp::RootBranches br{a.branches[0], a.branches[1], a.branches[2], a.branches[3]};
  const auto p = a.superintegrable
                     ? cp::superintegrable_point(a.n, cpl, br.a, br.c)
                     : cp::sample_rapidity(a.n, cpl, parse_complex(a.B), parse_complex(a.D), br);

  json j{{"schema", 1}, {"point", rapidity_json(p)}};
  json res = json::array();
  for (const auto& r : cp::curve_residual(p)) res.push_back(complex_json(r));
  j["curve_residual"] = res;
  const auto hyp = cp::hyperelliptic_coords(p);
  j["hyperelliptic"] = json{{"t", complex_json(hyp.t)},
                            {"lambda", complex_json(hyp.lambda)},
                            {"residual", complex_json(hyp.residual)}};

  if (a.with_weights) {
    const auto q = cp::sample_rapidity(a.n, cpl, parse_complex(a.qB), parse_complex(a.qD));
    const auto tab = cp::weights(p, q);
    json w = json::array(), wbar = json::array();
    for (int i = 0; i < a.n; ++i) {
      w.push_back(complex_json(tab.W[i]));
      wbar.push_back(complex_json(tab.Wbar[i]));
    }
    j["q"] = rapidity_json(q);
    j["weights"] = json{{"W", w}, {"Wbar", wbar}};
  }
  write_atomic(a.out, j.dump(2) + "\n");
  return 0;
}

struct SpectrumArgs {
  int n = 3, l = 2;
  double kprime = 0.5;
  int window = 4;
  std::string out;
};

int run_spectrum(const SpectrumArgs& a) {
  namespace on = sml::onsager;
  sml::weyl::LatticeConfig cfg(a.n, a.l);
  const auto h0 = on::build_H0(cfg);
  const auto h1 = on::build_H1(cfg);
  const sml::DenseOperator h = h0 + a.kprime * h1;
  const auto ev = on::spectrum(h);

  const auto [a0, a1] = on::seed_A(h0, h1, a.n);
  const auto [r1, r0] = on::dolan_grady_residual(a0, a1);
  const auto fam = on::onsager_extend(a0, a1, a.window);
  const auto rel = on::onsager_relation_residuals(fam);

  json eig = json::array();
  for (double e : ev) eig.push_back(round15(e));
  json j{{"schema", 1},
         {"N", a.n},
         {"L", a.l},
         {"kprime", round15(a.kprime)},
         {"window", a.window},
         {"eigenvalues", eig},
         {"hermiticity_residual", round15((h - h.adjoint()).norm())},
         {"dolan_grady", json::array({round15(r1), round15(r0)})},
         {"onsager_max_residual", round15(rel.max_residual)},
         {"onsager_checked", rel.checked},
         {"onsager_skipped", rel.skipped}};
  write_atomic(a.out, j.dump(2) + "\n");
  return 0;
}

struct FkArgs {
  int n = 3, l = 2;
  std::uint64_t seed = 0;
  int samples = 0;
  std::string emit = "poly";
  std::string out;
};

int run_fk(const FkArgs& a) {
  std::mt19937_64 rng(a.seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto rc = [&] {
    while (true) {
      const sml::cdouble z(u(rng), u(rng));
      if (std::abs(z) > 0.25) return z;
    }
  };
  sml::fk::InhomogeneitySet hs{a.n, {}};
  json sites = json::array();
  for (int j = 0; j < a.l; ++j) {
    hs.sites.push_back({rc(), rc(), rc(), rc()});
    const auto& s = hs.sites.back();
    sites.push_back(json{{"a", complex_json(s.a)},
                         {"b", complex_json(s.b)},
                         {"c", complex_json(s.c)},
                         {"d", complex_json(s.d)}});
  }

  if (a.emit == "poly") {
    std::vector<sml::cdouble> xs;
    const int count = a.samples > 0 ? std::max(a.samples, a.l + 2) : a.l + 3;
    for (int s = 0; s < count; ++s) xs.push_back(std::polar(0.8 + 0.1 * (s % 3), 0.7 * s + 0.2));
    const auto ep = sml::fk::eigenvalue_polynomials(hs, xs, 1e-8, a.seed);
    json lam = json::array();
    for (const auto& coeffs : ep.coeffs) {
      json row = json::array();
      for (const auto& c : coeffs) row.push_back(complex_json(c));
      lam.push_back(row);
    }
    json j{{"schema", 1},         {"N", a.n},
           {"L", a.l},            {"seed", a.seed},
           {"sites", sites},      {"lambda_coefficients", lam},
           {"max_offdiag", round15(ep.max_offdiag)},
           {"max_holdout", round15(ep.max_holdout)}};
    write_atomic(a.out, j.dump(2) + "\n");
    return 0;
  }
  if (a.emit == "curve") {
    std::string csv = "x_re,x_im";
    for (int j = 0; j < a.l; ++j)
      csv += ",xi_" + std::to_string(j) + "_re,xi_" + std::to_string(j) + "_im";
    csv += "\n";
    const int count = a.samples > 0 ? a.samples : 5;
    for (int s = 0; s < count; ++s) {
      const sml::cdouble x = rc();
      for (const auto& u0 : sml::fk::closure_xi0_pow(hs, x)) {
        const sml::cdouble xi0 =
            std::polar(std::pow(std::abs(u0), 1.0 / a.n), std::arg(u0) / a.n);
        const auto sp = sml::fk::sample_curve_point(hs, x, xi0);
        csv += fmt15(round15(x.real())) + "," + fmt15(round15(x.imag()));
        for (const auto& xi : sp.point.xi)
          csv += "," + fmt15(round15(xi.real())) + "," + fmt15(round15(xi.imag()));
        csv += "\n";
      }
    }
    write_atomic(a.out, csv);
    return 0;
  }
  throw CLI::ValidationError("--emit must be poly or curve");
}

struct OrbifoldArgs {
  std::string group = "Ar";
  int n = 4;
  int r = 2;
  std::string out;
};

int run_orbifold(const OrbifoldArgs& a) {
  long order = 0, classes = 0, irreps = 0;
  sml::Rational euler;
  if (a.group == "Ar" || a.group == "ar") {
    const auto g = sml::orbifold::build_Ar(a.n, a.r);
    order = g.order();
    euler = orbifold_euler_linear(g);
    const auto counts = class_and_rep_counts(g);
    classes = counts.conjugacy_classes;
    irreps = counts.irreducible_representations;
  } else if (a.group == "Q8" || a.group == "q8") {
    const auto g = sml::orbifold::quaternion_group();
    order = g.order();
    euler = orbifold_euler_linear(g);
    const auto counts = class_and_rep_counts(g);
    classes = counts.conjugacy_classes;
    irreps = counts.irreducible_representations;
  } else {
    throw CLI::ValidationError("--group must be Ar or Q8");
  }
  json j{{"schema", 1}, {"group", a.group}, {"order", order}, {"classes", classes},
         {"irreps", irreps}};
  j["euler"] = euler.is_integer() ? json(euler.num()) : json(euler.str());
  if (a.group == "Ar" || a.group == "ar") {
    j["n"] = a.n;
    j["r"] = a.r;
  }
  write_atomic(a.out, j.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"solvable-models lab: transfer matrices, Onsager algebra, Bethe residuals, "
               "N=2 characters, orbifold counts"};
  app.require_subcommand(1);
  app.set_config("--config")->description(
      "key=value configuration file; subcommand options use dotted keys (verify.N=3)\n"
      "or [verify] sections, with --config given before the subcommand");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run a module verification suite");
  verify->add_option("--module", va.module,
                     "weyl-core | chiral-potts | superintegrable-onsager | fk-bethe | "
                     "n2-characters | orbifold-euler | all")
      ->default_val("all");
  verify->add_option("--N", va.n, "restrict the N grid");
  verify->add_option("--L", va.l, "restrict the L grid");
  verify->add_option("--kprime", va.cfg.kprime, "coupling k'");
  verify->add_option("--tol", va.cfg.tol, "default tolerance for non-pinned checks")
      ->envname("SML_TOL");
  verify->add_option("--seed", va.cfg.seed, "RNG seed (all randomness flows from it)");
  verify->add_option("--samples", va.cfg.samples, "sample count override");
  verify->add_option("--window", va.cfg.window, "Onsager window");
  verify->add_option("--out", va.out, "output path (default stdout)");
  verify->add_option("--format", va.format, "json | csv");
  verify->add_flag("--timings", va.timings,
                   "include wall times in the report (breaks byte-identical reruns)");

  CharacterArgs ca;
  auto* character = app.add_subcommand("character", "evaluate a discrete-series character");
  character->add_option("--k", ca.k)->required();
  character->add_option("--l", ca.l)->required();
  character->add_option("--m", ca.m)->required();
  character->add_option("--sector", ca.sector, "NS | R");
  auto* aopt = character->add_option("--a", ca.a, "custom twist a");
  auto* bopt = character->add_option("--b", ca.b, "custom twist b");
  character->add_option("--orders", ca.orders,
                        "emit the q,y-expansion to this many levels instead of values");
  character->add_option("--z-min", ca.z_min);
  character->add_option("--z-max", ca.z_max);
  character->add_option("--z-num", ca.z_num);
  character->add_option("--tau-im", ca.tau_im, "Im(tau) of the evaluation line");
  character->add_option("--tau-im-max", ca.tau_im_max, "upper Im(tau) of the grid");
  character->add_option("--tau-num", ca.tau_num, "tau grid size");
  character->add_option("--terms", ca.terms, "theta truncation override (0 = automatic)");
  character->add_option("--out", ca.out, "output path (default stdout)");

  CharacterArgs ea;
  auto* expand = app.add_subcommand("expand", "q,y-expansion of a character");
  expand->add_option("--k", ea.k)->required();
  expand->add_option("--l", ea.l)->required();
  expand->add_option("--m", ea.m)->required();
  expand->add_option("--sector", ea.sector, "NS | R");
  expand->add_option("--orders", ea.orders)->default_val(8);
  expand->add_option("--out", ea.out, "output path (default stdout)");

  OrbifoldArgs oa;
  auto* orbifold = app.add_subcommand("orbifold", "orbifold Euler characteristic counts");
  orbifold->add_option("--group", oa.group, "Ar | Q8");
  orbifold->add_option("--n", oa.n, "dimension for Ar");
  orbifold->add_option("--r", oa.r, "order parameter for Ar");
  orbifold->add_option("--out", oa.out, "output path (default stdout)");

  RapidityArgs ra;
  auto* rapidity = app.add_subcommand("rapidity", "sample a rapidity point, emit JSON");
  rapidity->add_option("--N", ra.n)->default_val(3);
  rapidity->add_option("--kprime", ra.kprime);
  rapidity->add_flag("--superintegrable", ra.superintegrable, "a = b, c = d point");
  rapidity->add_option("--B", ra.B, "b^N as re,im");
  rapidity->add_option("--D", ra.D, "d^N as re,im");
  rapidity->add_option("--branches", ra.branches, "root branches a,b,c,d")->expected(4);
  rapidity->add_flag("--weights", ra.with_weights, "include the weight table against q");
  rapidity->add_option("--q-B", ra.qB, "q point b^N as re,im");
  rapidity->add_option("--q-D", ra.qD, "q point d^N as re,im");
  rapidity->add_option("--out", ra.out, "output path (default stdout)");

  SpectrumArgs sa;
  auto* spectrum = app.add_subcommand("spectrum", "superintegrable chain spectrum, JSON");
  spectrum->add_option("--N", sa.n)->default_val(3);
  spectrum->add_option("--L", sa.l)->default_val(2);
  spectrum->add_option("--kprime", sa.kprime);
  spectrum->add_option("--window", sa.window, "Onsager window");
  spectrum->add_option("--out", sa.out, "output path (default stdout)");

  FkArgs fa;
  auto* fkcmd = app.add_subcommand("fk", "transfer eigenvalue polynomials / curve points");
  fkcmd->add_option("--N", fa.n)->default_val(3);
  fkcmd->add_option("--L", fa.l)->default_val(2);
  fkcmd->add_option("--seed", fa.seed, "site parameters are drawn from this seed");
  fkcmd->add_option("--samples", fa.samples, "x-sample count");
  fkcmd->add_option("--emit", fa.emit, "poly (JSON) | curve (CSV)");
  fkcmd->add_option("--out", fa.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
    if (verify->parsed()) return run_verify(va);
    if (character->parsed()) {
      ca.custom_twist = aopt->count() > 0 || bopt->count() > 0;
      if (ca.orders < 0) throw CLI::ValidationError("--orders must be positive");
      return run_character(ca);
    }
    if (expand->parsed()) {
      if (ea.orders < 1) throw CLI::ValidationError("--orders must be >= 1");
      ea.orders = std::max(ea.orders, 1);
      return run_character(ea);
    }
    if (orbifold->parsed()) return run_orbifold(oa);
    if (rapidity->parsed()) return run_rapidity(ra);
    if (spectrum->parsed()) return run_spectrum(sa);
    if (fkcmd->parsed()) return run_fk(fa);
    std::cerr << app.help() << "\n";
    return 2;
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help() << "\n";
    return 2;
  } catch (const sml::ConfigError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
