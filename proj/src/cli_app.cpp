#include "verlinde/cli_app.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "verlinde/bases.hpp"
#include "verlinde/expand.hpp"
#include "verlinde/residue.hpp"
#include "verlinde/symmetry.hpp"
#include "verlinde/trig_sum.hpp"

namespace verlinde {
namespace {

using nlohmann::ordered_json;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep)) out.push_back(tok);
  return out;
}

std::vector<long> parse_level_range(const std::string& spec) {
  auto pos = spec.find("..");
  if (pos == std::string::npos) {
    long k = std::stol(spec);
    if (k < 1) throw std::invalid_argument("level must be positive: " + spec);
    return {k};
  }
  long a = std::stol(spec.substr(0, pos));
  long b = std::stol(spec.substr(pos + 2));
  if (a < 1 || b < a) throw std::invalid_argument("bad level range: " + spec);
  std::vector<long> out;
  for (long k = a; k <= b; ++k) out.push_back(k);
  return out;
}

IntegralWeight parse_lambda(const std::string& spec, int r) {
  IntegralWeight w;
  for (const auto& tok : split(spec, ','))
    w.v.push_back(std::stol(tok));
  if (w.r() != r)
    throw std::invalid_argument("weight " + spec + " does not have " +
                                std::to_string(r) + " entries");
  return w;
}

std::string lambda_text(const IntegralWeight& w, char sep) {
  std::string s;
  for (int i = 0; i < w.r(); ++i) {
    if (i) s += sep;
    s += std::to_string(w.v[i]);
  }
  return s;
}

struct FamilyChoice {
  std::string name;
  std::vector<OrderedBasis> bases;
};

std::vector<FamilyChoice> parse_families(const std::string& spec, int r) {
  std::vector<FamilyChoice> out;
  auto add_hamiltonian = [&](int m) {
    if (m < 1 || m > r)
      throw std::invalid_argument("hamiltonian start vertex out of range");
    out.push_back({"hamiltonian:" + std::to_string(m), hamiltonian_family(r, m)});
  };
  auto add_nbc = [&](const EdgeOrder& order, const std::string& name) {
    out.push_back({name, nbc_family(r, order)});
  };
  if (spec == "all") {
    add_hamiltonian(1);
    if (r > 2) add_hamiltonian(r);
    add_nbc(lex_edge_order(r), "nbc:lex");
    EdgeOrder rev = lex_edge_order(r);
    std::reverse(rev.begin(), rev.end());
    add_nbc(rev, "nbc:revlex");
    return out;
  }
  for (const auto& part : split(spec, ';')) {
    auto colon = part.find(':');
    std::string kind = part.substr(0, colon);
    std::string arg =
        colon == std::string::npos ? std::string() : part.substr(colon + 1);
    if (kind == "hamiltonian") {
      add_hamiltonian(arg.empty() ? 1 : (int)std::stol(arg));
    } else if (kind == "nbc") {
      if (arg.empty())
        add_nbc(lex_edge_order(r), "nbc:lex");
      else
        add_nbc(parse_edge_order(arg, r), "nbc:" + arg);
    } else {
      throw std::invalid_argument("unknown basis family: " + part);
    }
  }
  if (out.empty()) throw std::invalid_argument("no basis family selected");
  return out;
}

// ---------------------------------------------------------------------------
// ver subcommand

struct VerOptions {
  int r = 2;
  int g = 1;
  std::string k_spec = "1";
  std::vector<std::string> lambda_specs;
  bool grid = false;
  std::string routes = "residue";
  long precision = 0;
  long trunc_extra = 0;
  std::string basis = "hamiltonian:1";
  long jobs = 1;
  std::string format = "json";
  std::string target = "hat";
  bool both_sides = false;
};

struct VerItem {
  long k = 0;
  IntegralWeight lam;
};

struct VerResult {
  bool have_residue = false;
  Rational residue_value;
  Rational residue_minus;
  bool have_sum = false;
  Integer sum_value;
  bool families_agree = true;
  bool sides_agree = true;
  bool routes_agree = true;
  bool ok() const { return families_agree && sides_agree && routes_agree; }
};

VerResult evaluate_item(const VerItem& item, const VerOptions& opts,
                        const std::vector<FamilyChoice>& families,
                        bool want_sum, bool want_residue, ChamberTarget target) {
  VerResult res;
  ModuliInput in{opts.r, opts.g, item.k, item.lam};
  if (want_residue) {
    bool first = true;
    for (const auto& fam : families) {
      Rational plus, minus;
      if (opts.both_sides) {
        auto pair = resolve_chamber_both(item.k, item.lam, target);
        plus = p_anchor(in, pair.first, fam.bases);
        minus = p_anchor(in, pair.second, fam.bases);
      } else {
        plus = ver_residue(in, fam.bases, target);
        minus = plus;
      }
      if (first) {
        res.residue_value = plus;
        res.residue_minus = minus;
        first = false;
      } else if (plus != res.residue_value || minus != res.residue_minus) {
        res.families_agree = false;
      }
    }
    res.sides_agree = res.residue_value == res.residue_minus;
    res.have_residue = true;
  }
  if (want_sum) {
    SumResult s = ver_sum(in, opts.precision);
    res.sum_value = s.value;
    res.have_sum = true;
  }
  if (res.have_sum && res.have_residue) {
    res.routes_agree = res.residue_value.get_den() == 1 &&
                       res.residue_value.get_num() == res.sum_value;
  }
  return res;
}

int run_ver(const VerOptions& opts, std::ostream& out) {
  if (opts.r < 2 || opts.r > kMaxVars + 1)
    throw std::invalid_argument("rank out of supported range");
  if (opts.g < 1) throw std::invalid_argument("genus must be at least 1");
  bool want_sum = false, want_residue = false;
  for (const auto& route : split(opts.routes, ',')) {
    if (route == "sum")
      want_sum = true;
    else if (route == "residue")
      want_residue = true;
    else
      throw std::invalid_argument("unknown route: " + route);
  }
  if (!want_sum && !want_residue)
    throw std::invalid_argument("no route selected");
  if (opts.both_sides && !want_residue)
    throw std::invalid_argument("--both-sides needs the residue route");
  ChamberTarget target;
  if (opts.target == "hat")
    target = ChamberTarget::Hat;
  else if (opts.target == "lam")
    target = ChamberTarget::LamOverK;
  else
    throw std::invalid_argument("unknown chamber target: " + opts.target);
  if (opts.format != "json" && opts.format != "csv")
    throw std::invalid_argument("unknown output format: " + opts.format);

  std::vector<FamilyChoice> families;
  if (want_residue) families = parse_families(opts.basis, opts.r);

  std::vector<VerItem> items;
  for (long k : parse_level_range(opts.k_spec)) {
    if (opts.grid) {
      for (const auto& lam : enumerate_admissible(k, opts.r))
        items.push_back({k, lam});
    } else {
      if (opts.lambda_specs.empty())
        throw std::invalid_argument("pass --lambda or --grid");
      for (const auto& spec : opts.lambda_specs) {
        IntegralWeight lam = parse_lambda(spec, opts.r);
        if (!admissible(k, lam))
          throw std::invalid_argument("weight " + spec +
                                      " is not admissible at level " +
                                      std::to_string(k));
        items.push_back({k, lam});
      }
    }
  }

  residue_settings().trunc_extra = opts.trunc_extra;

  std::vector<VerResult> results(items.size());
  long jobs = std::clamp(opts.jobs, 1L, 16L);
  if (jobs > 1 && items.size() > 1) {
    std::vector<std::future<void>> futs;
    for (long j = 0; j < jobs; ++j) {
      futs.push_back(std::async(std::launch::async, [&, j]() {
        for (size_t i = (size_t)j; i < items.size(); i += (size_t)jobs)
          results[i] = evaluate_item(items[i], opts, families, want_sum,
                                     want_residue, target);
      }));
    }
    for (auto& f : futs) f.get();
  } else {
    for (size_t i = 0; i < items.size(); ++i)
      results[i] = evaluate_item(items[i], opts, families, want_sum,
                                 want_residue, target);
  }

  bool all_ok = true;
  if (opts.format == "csv") {
    out << "r,g,k,lambda";
    if (want_residue) out << ",residue";
    if (want_residue && opts.both_sides) out << ",residue_minus";
    if (want_sum) out << ",sum";
    out << ",match\n";
  }
  for (size_t i = 0; i < items.size(); ++i) {
    const auto& item = items[i];
    const auto& res = results[i];
    all_ok = all_ok && res.ok();
    if (opts.format == "json") {
      ordered_json rec;
      rec["r"] = opts.r;
      rec["g"] = opts.g;
      rec["k"] = item.k;
      rec["lambda"] = item.lam.v;
      if (res.have_residue) {
        rec["residue"] = rational_to_string(res.residue_value);
        if (opts.both_sides)
          rec["residue_minus"] = rational_to_string(res.residue_minus);
      }
      if (res.have_sum) rec["sum"] = res.sum_value.get_str();
      if (families.size() > 1) rec["families"] = families.size();
      rec["match"] = res.ok();
      out << rec.dump() << "\n";
    } else {
      out << opts.r << ',' << opts.g << ',' << item.k << ','
          << lambda_text(item.lam, ' ');
      if (res.have_residue) out << ',' << rational_to_string(res.residue_value);
      if (res.have_residue && opts.both_sides)
        out << ',' << rational_to_string(res.residue_minus);
      if (res.have_sum) out << ',' << res.sum_value.get_str();
      out << ',' << (res.ok() ? "true" : "false") << "\n";
    }
  }
  return all_ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// crosscheck subcommand

struct SuiteReport {
  long checks = 0;
  long failures = 0;
  void record(bool ok) {
    ++checks;
    if (!ok) ++failures;
  }
};

SuiteReport suite_basis_independence() {
  SuiteReport rep;
  std::mt19937_64 rng(0x5eed2024ull);
  for (int r : {2, 3}) {
    std::vector<std::vector<OrderedBasis>> fams;
    fams.push_back(hamiltonian_family(r, 1));
    fams.push_back(hamiltonian_family(r, r));
    fams.push_back(nbc_family(r, lex_edge_order(r)));
    for (int trial = 0; trial < 6; ++trial) {
      long k = 1 + (long)(rng() % 3);
      auto adm = enumerate_admissible(k, r);
      IntegralWeight lam = adm[rng() % adm.size()];
      IntegralWeight seed = adm[rng() % adm.size()];
      int g = 1 + trial % 2;
      ModuliInput in{r, g, k, lam};
      WeightVector c = resolve_chamber(k, seed, ChamberTarget::Hat);
      Rational ref = p_anchor(in, c, fams[0]);
      bool ok = true;
      for (size_t fi = 1; fi < fams.size(); ++fi)
        ok = ok && p_anchor(in, c, fams[fi]) == ref;
      rep.record(ok);
    }
  }
  return rep;
}

SuiteReport suite_chamber_independence() {
  SuiteReport rep;
  for (int r : {2, 3}) {
    auto fam = hamiltonian_family(r, 1);
    for (long k = 1; k <= 2; ++k) {
      for (const auto& lam : enumerate_admissible(k, r)) {
        ModuliInput in{r, 1, k, lam};
        Rational a = ver_residue(in, fam, ChamberTarget::Hat);
        Rational b = ver_residue(in, fam, ChamberTarget::LamOverK);
        auto pair = resolve_chamber_both(k, lam, ChamberTarget::Hat);
        Rational plus = p_anchor(in, pair.first, fam);
        Rational minus = p_anchor(in, pair.second, fam);
        rep.record(a == b && a == plus && plus == minus);
      }
    }
  }
  return rep;
}

SuiteReport suite_wall_crossing() {
  SuiteReport rep;
  int r = 3;
  auto fam = hamiltonian_family(r, 1);
  Wall w{Partition({2}, r), 0};
  auto pair = chamber_pair_in_simplex(w);
  if (!pair.has_value()) {
    rep.record(false);
    return rep;
  }
  for (long k = 1; k <= 2; ++k) {
    for (const auto& lam : enumerate_admissible(k, r)) {
      ModuliInput in{r, 1, k, lam};
      Rational full = wallcross_full(in, w, pair->first, pair->second, fam);
      Rational reduced = wallcross_reduced(in, w, pair->first);
      rep.record(full == reduced);
    }
  }
  return rep;
}

SuiteReport suite_weyl_antisymmetry() {
  SuiteReport rep;
  int r = 3;
  long k = 2;
  auto fam = hamiltonian_family(r, 1);
  for (int side : {1, -1}) {
    auto gens = stabilizer_generators(r, side);
    for (long a = 0; a < 3; ++a) {
      for (long b = 0; b < 3; ++b) {
        IntegralWeight lam;
        lam.v = {a, b, -a - b};
        ModuliInput in{r, 1, k, lam};
        Rational base = p_theta(in, side, fam);
        bool ok = true;
        for (const auto& gen : gens) {
          IntegralWeight ref = affine_act_dot(gen, k, lam);
          ModuliInput rin{r, 1, k, ref};
          ok = ok && p_theta(rin, side, fam) == -base;
        }
        rep.record(ok);
      }
    }
  }
  return rep;
}

SuiteReport suite_two_point() {
  SuiteReport rep;
  for (long k = 1; k <= 2; ++k) {
    for (int g = 1; g <= 2; ++g) {
      for (long lam = -k - 2; lam <= k + 2; ++lam) {
        for (long mu = -k - 2; mu <= k + 2; ++mu) {
          Rational gt = h_tilde(k, lam, mu, g, +1);
          Rational lt = h_tilde(k, lam, mu, g, -1);
          bool ok = gt == -h_tilde(k, lam, -mu - 1, g, +1);
          ok = ok && gt == -h_tilde(k, -lam + k + 1, mu, g, +1);
          ok = ok && lt == -h_tilde(k, -lam - 1, mu, g, -1);
          ok = ok && lt == -h_tilde(k, lam, -mu + k + 1, g, -1);
          LinearForm u(1);
          u.c[0] = Rational(lam - mu);
          std::vector<YFactor> fs;
          if (!u.is_zero()) fs.push_back({FactorKind::ExpForm, u, 1});
          LinearForm one(1);
          one.c[0] = 1;
          fs.push_back({FactorKind::InvTwoSinhHalf, one, 2 * g});
          Rational res = iterated_residue(fs, 1, Rational(1), 0);
          Rational expected = res * int_pow(Rational(2 * k + 4), g);
          if (g % 2 != 0) expected = -expected;
          ok = ok && (gt - lt == expected);
          rep.record(ok);
        }
      }
      auto fam = hamiltonian_family(2, 1);
      for (long lam = 0; 2 * lam <= k; ++lam) {
        IntegralWeight w;
        w.v = {lam, -lam};
        ModuliInput in{2, g, k, w};
        rep.record(h_tilde(k, lam, 0, g, +1) == ver_residue(in, fam));
      }
    }
  }
  return rep;
}

int run_crosscheck(const std::string& suite, bool inject_sign_flip,
                   std::ostream& out) {
  residue_settings().flip_sign = inject_sign_flip;
  SuiteReport rep;
  if (suite == "basis-independence")
    rep = suite_basis_independence();
  else if (suite == "chamber-independence")
    rep = suite_chamber_independence();
  else if (suite == "wall-crossing")
    rep = suite_wall_crossing();
  else if (suite == "weyl-antisymmetry")
    rep = suite_weyl_antisymmetry();
  else if (suite == "two-point")
    rep = suite_two_point();
  else
    throw std::invalid_argument("unknown suite: " + suite);
  residue_settings().flip_sign = false;
  if (rep.failures == 0) {
    out << "suite " << suite << ": PASS (" << rep.checks << " checks)\n";
    return 0;
  }
  out << "suite " << suite << ": FAIL (" << rep.failures << " of "
      << rep.checks << " checks failed)\n";
  return 1;
}

// ---------------------------------------------------------------------------
// bases subcommand

int run_bases(int r, const std::string& kind, int m, const std::string& order,
              bool verify, std::ostream& out, std::ostream& err) {
  if (r < 2 || r > 6) throw std::invalid_argument("rank out of range for bases");
  std::vector<OrderedBasis> fam;
  if (kind == "hamiltonian") {
    if (m < 1 || m > r)
      throw std::invalid_argument("start vertex out of range");
    fam = hamiltonian_family(r, m);
  } else if (kind == "nbc") {
    EdgeOrder eo = order.empty() ? lex_edge_order(r) : parse_edge_order(order, r);
    fam = nbc_family(r, eo);
  } else {
    throw std::invalid_argument("unknown family kind: " + kind);
  }
  for (const auto& B : fam) {
    for (size_t i = 0; i < B.roots.size(); ++i) {
      if (i) out << ' ';
      out << B.roots[i].i << B.roots[i].j;
    }
    out << "\n";
  }
  out << "count=" << fam.size() << "\n";
  if (verify) {
    if (!is_diagonal(r, fam)) {
      err << "family fails the diagonal criterion\n";
      out << "diagonal=false\n";
      return 1;
    }
    out << "diagonal=true\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------

void apply_config_defaults(const std::string& path, CLI::App* ver,
                           VerOptions& opts) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open config file: " + path);
  nlohmann::json cfg;
  f >> cfg;
  if (!cfg.is_object())
    throw std::invalid_argument("config file must hold a JSON object");
  auto unset = [&](const std::string& name) {
    auto* opt = ver->get_option("--" + name);
    return opt->count() == 0;
  };
  for (const auto& [key, value] : cfg.items()) {
    if (key == "r" && unset("r"))
      opts.r = value.get<int>();
    else if (key == "g" && unset("g"))
      opts.g = value.get<int>();
    else if (key == "k" && unset("k"))
      opts.k_spec = value.is_string() ? value.get<std::string>()
                                      : std::to_string(value.get<long>());
    else if (key == "lambda" && unset("lambda")) {
      if (value.is_array())
        for (const auto& item : value)
          opts.lambda_specs.push_back(item.get<std::string>());
      else
        opts.lambda_specs.push_back(value.get<std::string>());
    } else if (key == "grid" && unset("grid"))
      opts.grid = value.get<bool>();
    else if (key == "routes" && unset("routes"))
      opts.routes = value.get<std::string>();
    else if (key == "precision" && unset("precision"))
      opts.precision = value.get<long>();
    else if (key == "trunc-extra" && unset("trunc-extra"))
      opts.trunc_extra = value.get<long>();
    else if (key == "basis" && unset("basis"))
      opts.basis = value.get<std::string>();
    else if (key == "jobs" && unset("jobs"))
      opts.jobs = value.get<long>();
    else if (key == "format" && unset("format"))
      opts.format = value.get<std::string>();
    else if (key == "target" && unset("target"))
      opts.target = value.get<std::string>();
    else if (key == "both-sides" && unset("both-sides"))
      opts.both_sides = value.get<bool>();
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  residue_settings() = ResidueSettings{};

  CLI::App app{"exact parabolic Verlinde numbers by independent routes"};
  app.require_subcommand(1);

  VerOptions vo;
  std::string config_path;
  auto* ver = app.add_subcommand(
      "ver", "evaluate Verlinde numbers along one or more routes");
  ver->add_option("--r", vo.r, "rank of the structure group");
  ver->add_option("--g", vo.g, "genus of the curve");
  ver->add_option("--k", vo.k_spec, "level, a single value or a range a..b");
  auto* lam_opt = ver->add_option("--lambda", vo.lambda_specs,
                                  "weight as comma-separated integers; repeatable");
  auto* grid_opt = ver->add_flag(
      "--grid", vo.grid, "evaluate every admissible weight at each level");
  grid_opt->excludes(lam_opt);
  ver->add_option("--routes", vo.routes,
                  "comma-separated subset of {sum,residue}");
  ver->add_option("--precision", vo.precision,
                  "working precision in bits for the sum route");
  ver->add_option("--trunc-extra", vo.trunc_extra,
                  "extra series truncation margin for the residue route");
  ver->add_option("--basis", vo.basis,
                  "residue bases: hamiltonian[:m], nbc[:order], all, or a "
                  "semicolon-separated list");
  ver->add_option("--jobs", vo.jobs, "number of worker threads");
  ver->add_option("--format", vo.format, "output format, json or csv");
  ver->add_option("--target", vo.target,
                  "chamber anchor: hat (shifted weight) or lam (weight itself)");
  ver->add_flag("--both-sides", vo.both_sides,
                "evaluate on both sides of the target point and compare");
  ver->add_option("--config", config_path,
                  "JSON file supplying defaults for unset options");

  std::string suite;
  bool inject_sign_flip = false;
  auto* cross = app.add_subcommand(
      "crosscheck", "run a quick identity suite and report pass or fail");
  cross->add_option("--suite", suite,
                    "basis-independence, chamber-independence, wall-crossing, "
                    "weyl-antisymmetry, or two-point")
      ->required();
  cross->add_flag("--inject-sign-flip", inject_sign_flip)->group("");

  int bases_r = 3;
  std::string bases_kind = "hamiltonian";
  int bases_m = 1;
  std::string bases_order;
  bool bases_verify = false;
  auto* bas = app.add_subcommand("bases", "list a diagonal basis family");
  bas->add_option("--r", bases_r, "rank");
  bas->add_option("--kind", bases_kind, "hamiltonian or nbc");
  bas->add_option("--m", bases_m, "start vertex for hamiltonian families");
  bas->add_option("--order", bases_order,
                  "edge order for nbc families, e.g. 13,14,23,24,12,34");
  bas->add_flag("--verify", bases_verify,
                "check the diagonal criterion and report");

  std::vector<std::string> full;
  full.reserve(args.size() + 1);
  full.push_back("verlinde");
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(full.size());
  for (const auto& s : full) argv.push_back(s.c_str());

  try {
    app.parse((int)argv.size(), argv.data());
    if (ver->parsed()) {
      if (!config_path.empty()) apply_config_defaults(config_path, ver, vo);
      return run_ver(vo, out);
    }
    if (cross->parsed()) return run_crosscheck(suite, inject_sign_flip, out);
    if (bas->parsed())
      return run_bases(bases_r, bases_kind, bases_m, bases_order, bases_verify,
                       out, err);
    return 2;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace verlinde
