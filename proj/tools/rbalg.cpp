// rbalg: batch front end for the weighted Rota-Baxter algebra engine.
// Exit codes: 0 = verified / success, 1 = mathematical verdict (invalid
// structure, non-cocycle, obstruction), 2 = malformed input.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <random>

#include "rbl/fixtures.hpp"
#include "rbl/io.hpp"

using namespace rbl;
using ordered_json = rbl::io::json;

namespace {

struct Options {
  std::string input;
  std::string other;  // second input for extension-compare
  std::string out;
  std::string format = "text";
  std::string complex_name = "rb";
  std::size_t max_degree = 3;
  std::uint64_t seed = 0;
};

void emit(const Options& opt, const ordered_json& report) {
  std::string text;
  if (opt.format == "machine") {
    text = report.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << report["command"].get<std::string>() << ": "
       << report["verdict"].get<std::string>() << "\n";
    for (const auto& line : report["lines"])
      os << "  " << line.get<std::string>() << "\n";
    text = os.str();
  }
  if (opt.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(opt.out);
    if (!f) throw SchemaError("cannot open output file: " + opt.out);
    f << text;
  }
}

ordered_json cert_json(const std::string& name, const Certificate& c) {
  ordered_json j;
  j["check"] = name;
  j["ok"] = c.ok;
  if (!c.ok) {
    j["law"] = c.law;
    j["indices"] = c.indices;
    j["residual"] = io::vec_to_json(c.residual);
  }
  return j;
}

std::string cert_line(const std::string& name, const Certificate& c) {
  return name + ": " + (c.ok ? "OK" : c.message());
}

int run_validate(const Options& opt) {
  io::Bundle b = io::load_bundle(opt.input);
  ordered_json report;
  report["command"] = "validate";
  ordered_json checks = ordered_json::array();
  std::vector<std::string> lines;
  bool all_ok = true;
  auto record = [&](const std::string& name, const Certificate& c) {
    checks.push_back(cert_json(name, c));
    lines.push_back(cert_line(name, c));
    all_ok = all_ok && c.ok;
  };
  if (b.lie) {
    record("lie", validate_lie(*b.lie));
    if (b.rep) record("rep", validate_representation(*b.lie, *b.rep));
    if (b.weight && b.T) {
      WeightedRBLie rb = io::require_rb_lie(b);
      record("rota-baxter", check_rb_lie(rb));
      if (b.rep && b.calT)
        record("rb-representation", check_rb_rep(rb, io::require_rb_rep(b)));
    }
  } else if (b.assoc) {
    record("assoc", validate_associative(*b.assoc));
    if (b.bimodule) record("bimodule", validate_bimodule(*b.assoc, *b.bimodule));
    if (b.weight && b.T) {
      WeightedRBAssoc rba = io::require_rb_assoc(b);
      record("rota-baxter", check_rb_assoc(rba));
      if (b.bimodule && b.calT)
        record("rb-bimodule", check_rb_bimodule(rba, io::require_rb_bimodule(b)));
    }
  } else {
    throw SchemaError("validate: needs a 'lie' or 'assoc' section");
  }
  report["verdict"] = all_ok ? "OK" : "INVALID";
  report["checks"] = checks;
  report["lines"] = lines;
  emit(opt, report);
  return all_ok ? 0 : 1;
}

int run_cohomology(const Options& opt) {
  io::Bundle b = io::load_bundle(opt.input);
  std::unique_ptr<CochainComplex> cx;
  if (opt.complex_name == "ce") {
    if (!b.lie || !b.rep) throw SchemaError("cohomology: needs lie + rep");
    cx = std::make_unique<CEComplex>(*b.lie, *b.rep);
  } else if (opt.complex_name == "tce") {
    cx = std::make_unique<CEComplex>(
        make_twisted_ce_complex(io::require_rb_lie(b), io::require_rb_rep(b)));
  } else if (opt.complex_name == "rb") {
    cx = std::make_unique<RBComplex>(io::require_rb_lie(b), io::require_rb_rep(b));
  } else if (opt.complex_name == "h") {
    if (!b.assoc || !b.bimodule)
      throw SchemaError("cohomology: needs assoc + bimodule");
    cx = std::make_unique<HochschildComplex>(*b.assoc, *b.bimodule);
  } else if (opt.complex_name == "th") {
    cx = std::make_unique<HochschildComplex>(make_twisted_hochschild_complex(
        io::require_rb_assoc(b), io::require_rb_bimodule(b)));
  } else if (opt.complex_name == "rbass") {
    cx = std::make_unique<RBAssocComplex>(io::require_rb_assoc(b),
                                          io::require_rb_bimodule(b));
  } else if (opt.complex_name == "rbp") {
    cx = std::make_unique<RBpComplex>(io::require_paired(b));
  } else {
    throw SchemaError("unknown complex selector: " + opt.complex_name);
  }
  ordered_json report;
  report["command"] = "cohomology";
  report["complex"] = opt.complex_name;
  ordered_json degrees = ordered_json::array();
  std::vector<std::string> lines;
  for (std::size_t n = 0; n <= opt.max_degree; ++n) {
    CohomologyReport r = cohomology(*cx, n);
    ordered_json d;
    d["degree"] = r.degree;
    d["dim_cochains"] = r.dim_cochains;
    d["dim_cocycles"] = r.dim_cocycles;
    d["dim_coboundaries"] = r.dim_coboundaries;
    d["betti"] = r.betti;
    ordered_json reps = ordered_json::array();
    for (const Vec& v : r.representatives) reps.push_back(io::vec_to_json(v));
    d["representatives"] = reps;
    degrees.push_back(std::move(d));
    lines.push_back("H^" + std::to_string(n) + ": betti " +
                    std::to_string(r.betti) + " (cocycles " +
                    std::to_string(r.dim_cocycles) + ", coboundaries " +
                    std::to_string(r.dim_coboundaries) + ")");
  }
  report["verdict"] = "OK";
  report["degrees"] = degrees;
  report["lines"] = lines;
  emit(opt, report);
  return 0;
}

int run_derivations(const Options& opt) {
  io::Bundle b = io::load_bundle(opt.input);
  WeightedRBLie rb = io::require_rb_lie(b);
  RBLieRepresentation rr = io::require_rb_rep(b);
  auto der = derivations(rb, rr);
  auto inner = inner_derivations(rb, rr);
  ordered_json report;
  report["command"] = "derivations";
  report["dim_derivations"] = der.size();
  report["dim_inner"] = inner.size();
  report["outer"] = der.size() - inner.size();
  ordered_json basis = ordered_json::array();
  for (const auto& v : der) basis.push_back(io::vec_to_json(v));
  report["derivation_basis"] = basis;
  ordered_json ibasis = ordered_json::array();
  for (const auto& v : inner) ibasis.push_back(io::vec_to_json(v));
  report["inner_basis"] = ibasis;
  report["verdict"] = "OK";
  report["lines"] = {"dim Der = " + std::to_string(der.size()),
                     "dim InnDer = " + std::to_string(inner.size()),
                     "outer = " + std::to_string(der.size() - inner.size())};
  emit(opt, report);
  return 0;
}

int run_extension_build(const Options& opt) {
  io::Bundle b = io::load_bundle(opt.input);
  WeightedRBLie rb = io::require_rb_lie(b);
  RBLieRepresentation rr = io::require_rb_rep(b);
  if (!b.cocycle) throw SchemaError("extension-build: needs a 'cocycle' section");
  AbelianExtension ext =
      extension_from_cocycle(rb, rr, b.cocycle->psi, b.cocycle->chi);
  ordered_json report = io::extension_to_json(rb, rr, ext);
  std::string text = report.dump(2) + "\n";
  if (opt.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(opt.out);
    if (!f) throw SchemaError("cannot open output file: " + opt.out);
    f << text;
  }
  return 0;
}

std::tuple<WeightedRBLie, RBLieRepresentation, AbelianExtension> load_extension(
    const std::string& path) {
  io::Bundle b = io::load_bundle(path);
  if (!b.base) throw SchemaError(path + ": extension document needs a 'base'");
  WeightedRBLie rb = io::require_rb_lie(*b.base);
  RBLieRepresentation rr = io::require_rb_rep(*b.base);
  AbelianExtension ext = io::require_extension(b, rb, rr);
  return {rb, rr, ext};
}

int run_extension_extract(const Options& opt) {
  auto [rb, rr, ext] = load_extension(opt.input);
  if (auto cert = validate_extension(rb, rr, ext); !cert) {
    ordered_json report;
    report["command"] = "extension-extract";
    report["verdict"] = "INVALID";
    report["checks"] = {cert_json("extension", cert)};
    report["lines"] = {cert_line("extension", cert)};
    emit(opt, report);
    return 1;
  }
  auto [psi, chi] = cocycle_from_extension(rb, rr, ext);
  ordered_json report;
  report["command"] = "extension-extract";
  report["verdict"] = "OK";
  report["cocycle"] = {{"psi", io::cochain_to_json(psi)},
                       {"chi", io::cochain_to_json(chi)}};
  report["lines"] = {"extracted a 2-cocycle (psi, chi)"};
  emit(opt, report);
  return 0;
}

int run_extension_compare(const Options& opt) {
  auto [rb1, rr1, e1] = load_extension(opt.input);
  auto [rb2, rr2, e2] = load_extension(opt.other);
  if (!(rb1.T - rb2.T).is_zero() || rb1.weight != rb2.weight ||
      rb1.g.dim() != rb2.g.dim())
    throw SchemaError("extension-compare: the two documents have different bases");
  auto iso = extensions_isomorphic(rb1, rr1, e1, e2);
  ordered_json report;
  report["command"] = "extension-compare";
  report["isomorphic"] = bool(iso);
  if (iso) report["phi"] = io::matrix_to_json(*iso);
  report["verdict"] = iso ? "ISOMORPHIC" : "DISTINCT";
  report["lines"] = {iso ? "extensions are isomorphic (phi attached)"
                         : "extensions represent different classes"};
  emit(opt, report);
  return iso ? 0 : 1;
}

int run_deform_check(const Options& opt) {
  io::Bundle b = io::load_bundle(opt.input);
  WeightedRBLie rb = io::require_rb_lie(b);
  TruncatedDeformation d = io::require_deformation(b);
  Certificate cert = check_deformation(rb, d);
  ordered_json report;
  report["command"] = "deform-check";
  report["verdict"] = cert.ok ? "OK" : "INVALID";
  report["checks"] = {cert_json("deformation", cert)};
  std::vector<std::string> lines = {cert_line("deformation", cert)};
  if (cert.ok && d.order >= 1) {
    auto [inf, is_coc] = infinitesimal(rb, d);
    report["infinitesimal_cocycle"] = is_coc;
    lines.push_back(std::string("infinitesimal is a 2-cocycle: ") +
                    (is_coc ? "yes" : "no"));
  }
  report["lines"] = lines;
  emit(opt, report);
  return cert.ok ? 0 : 1;
}

int run_deform_trivialize(const Options& opt) {
  io::Bundle b = io::load_bundle(opt.input);
  WeightedRBLie rb = io::require_rb_lie(b);
  TruncatedDeformation d = io::require_deformation(b);
  TrivializationResult res = trivialize(rb, d);
  ordered_json report;
  report["command"] = "deform-trivialize";
  if (res.gauge) {
    report["verdict"] = "TRIVIAL";
    ordered_json phis = ordered_json::array();
    for (const auto& m : res.gauge->phi) phis.push_back(io::matrix_to_json(m));
    report["gauge"] = phis;
    report["lines"] = {"deformation is gauge-trivial to order " +
                       std::to_string(d.order)};
    emit(opt, report);
    return 0;
  }
  report["verdict"] = "OBSTRUCTED";
  report["blocking_order"] = res.blocking_order;
  report["blocking_class"] = io::vec_to_json(res.blocking_class);
  report["lines"] = {"obstruction at order " + std::to_string(res.blocking_order) +
                     ": the term is not a coboundary"};
  emit(opt, report);
  return 1;
}

int run_mc_check(const Options& opt) {
  io::Bundle b = io::load_bundle(opt.input);
  PairedOperators p = io::require_paired(b);
  Certificate paired = check_paired(p);
  Certificate mc = mc_check(p);
  if (paired.ok != mc.ok)
    throw std::logic_error("mc-check: paired verdict and MC residual disagree");
  ordered_json report;
  report["command"] = "mc-check";
  report["verdict"] = mc.ok ? "MAURER-CARTAN" : "NOT-MAURER-CARTAN";
  report["checks"] = {cert_json("paired", paired), cert_json("maurer-cartan", mc)};
  report["lines"] = {cert_line("paired", paired), cert_line("maurer-cartan", mc)};
  emit(opt, report);
  return mc.ok ? 0 : 1;
}

int run_rbp_cohomology(const Options& opt) {
  io::Bundle b = io::load_bundle(opt.input);
  PairedOperators p = io::require_paired(b);
  ordered_json report;
  report["command"] = "rbp-cohomology";
  ordered_json degrees = ordered_json::array();
  std::vector<std::string> lines;
  for (std::size_t n = 1; n <= opt.max_degree; ++n) {
    CohomologyReport r = rbp_cohomology(p, n);
    ordered_json d;
    d["degree"] = r.degree;
    d["dim_cochains"] = r.dim_cochains;
    d["dim_cocycles"] = r.dim_cocycles;
    d["dim_coboundaries"] = r.dim_coboundaries;
    d["betti"] = r.betti;
    degrees.push_back(std::move(d));
    lines.push_back("H^" + std::to_string(n) + "_RBp: betti " +
                    std::to_string(r.betti));
  }
  report["verdict"] = "OK";
  report["degrees"] = degrees;
  report["lines"] = lines;
  emit(opt, report);
  return 0;
}

MultiMap random_multimap(std::mt19937_64& rng, std::size_t arity,
                         std::size_t dim) {
  std::uniform_int_distribution<int> num(-3, 3);
  MultiMap f = MultiMap::zero(arity, dim);
  for (auto& val : f.values)
    for (auto& x : val) x = Rational(num(rng));
  return f;
}

int run_nr_debug(const Options& opt) {
  io::Bundle b = io::load_bundle(opt.input);
  if (!b.lie || !b.rep) throw SchemaError("nr-debug: needs lie + rep");
  Rational weight = b.weight.value_or(Rational(0));
  BlockSpace bs{b.lie->dim(), b.rep->module_dim};
  MultiMap th = build_theta(*b.lie, *b.rep);
  MultiMap tp = build_theta_prime(*b.lie, *b.rep);
  std::mt19937_64 rng(opt.seed);
  ordered_json report;
  report["command"] = "nr-debug";
  report["seed"] = opt.seed;
  ordered_json checks = ordered_json::array();
  std::vector<std::string> lines;
  bool all_ok = true;
  auto record = [&](const std::string& name, bool ok) {
    checks.push_back({{"check", name}, {"ok", ok}});
    lines.push_back(name + ": " + (ok ? "OK" : "FAILED"));
    all_ok = all_ok && ok;
  };
  record("theta maurer-cartan", nr_bracket(th, th).is_zero());
  record("theta-prime maurer-cartan", nr_bracket(tp, tp).is_zero());
  record("theta pair commutes", nr_bracket(th, tp).is_zero());
  bool antisym_ok = true, jacobi_ok = true;
  for (int trial = 0; trial < 5; ++trial) {
    MultiMap f = random_multimap(rng, 1 + trial % 2, bs.total());
    MultiMap g = random_multimap(rng, 2, bs.total());
    MultiMap h = random_multimap(rng, 1, bs.total());
    std::size_t m = f.arity, n = g.arity;
    MultiMap lhs = nr_bracket(f, g);
    MultiMap rhs = nr_bracket(g, f);
    bool flip = ((m - 1) * (n - 1)) % 2 == 1;
    antisym_ok = antisym_ok &&
                 (flip ? lhs == rhs : (lhs + rhs).is_zero());
    // graded Jacobi: [f,[g,h]] = [[f,g],h] + (-1)^{(m-1)(n-1)} [g,[f,h]]
    MultiMap left = nr_bracket(f, nr_bracket(g, h));
    MultiMap right = nr_bracket(nr_bracket(f, g), h);
    MultiMap mixed = nr_bracket(g, nr_bracket(f, h));
    if (flip) mixed = Rational(-1) * mixed;
    jacobi_ok = jacobi_ok && (left - right - mixed).is_zero();
  }
  record("graded antisymmetry", antisym_ok);
  record("graded jacobi", jacobi_ok);
  bool abelian_ok = true, roundtrip_ok = true;
  for (int trial = 0; trial < 5; ++trial) {
    std::uniform_int_distribution<int> num(-3, 3);
    RBpCochain c1 = RBpCochain::zero(1 + trial % 2, bs.g_dim, bs.v_dim);
    for (auto& v : c1.part1.values)
      for (auto& x : v) x = Rational(num(rng));
    for (auto& v : c1.part2)
      for (auto& x : v) x = Rational(num(rng));
    RBpCochain c2 = RBpCochain::zero(1, bs.g_dim, bs.v_dim);
    for (auto& v : c2.part1.values)
      for (auto& x : v) x = Rational(num(rng));
    for (auto& v : c2.part2)
      for (auto& x : v) x = Rational(num(rng));
    abelian_ok = abelian_ok &&
                 nr_bracket(embed(bs, c1), embed(bs, c2)).is_zero();
    roundtrip_ok = roundtrip_ok &&
                   project(bs, embed(bs, c1), c1.n) == c1;
  }
  record("embedded subspace abelian", abelian_ok);
  record("project-embed roundtrip", roundtrip_ok);
  (void)weight;
  report["verdict"] = all_ok ? "OK" : "FAILED";
  report["checks"] = checks;
  report["lines"] = lines;
  emit(opt, report);
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted Rota-Baxter Lie/associative algebra workbench"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool needs_input = true) {
    if (needs_input)
      sub->add_option("input", opt.input, "input bundle (JSON)")->required();
    sub->add_option("--out", opt.out, "write the report to this path");
    sub->add_option("--format", opt.format, "text or machine")
        ->check(CLI::IsMember({"text", "machine"}));
    sub->add_option("--seed", opt.seed, "seed for randomized property runs");
    sub->add_option("--max-degree", opt.max_degree, "top cohomology degree");
  };

  auto* validate = app.add_subcommand("validate", "run the structure verifiers");
  add_common(validate);
  auto* coh = app.add_subcommand("cohomology", "betti numbers and representatives");
  add_common(coh);
  coh->add_option("--complex", opt.complex_name,
                  "ce | tce | rb | h | th | rbass | rbp");
  auto* der = app.add_subcommand("derivations", "Der and InnDer bases");
  add_common(der);
  auto* extb = app.add_subcommand("extension-build", "extension from a 2-cocycle");
  add_common(extb);
  auto* exte = app.add_subcommand("extension-extract", "2-cocycle of an extension");
  add_common(exte);
  auto* extc = app.add_subcommand("extension-compare", "decide isomorphism");
  add_common(extc);
  extc->add_option("other", opt.other, "second extension document")->required();
  auto* defc = app.add_subcommand("deform-check", "order-by-order systems");
  add_common(defc);
  auto* deft = app.add_subcommand("deform-trivialize", "gauge away a deformation");
  add_common(deft);
  auto* mc = app.add_subcommand("mc-check", "Maurer-Cartan residual of (T, calT)");
  add_common(mc);
  auto* rbp = app.add_subcommand("rbp-cohomology", "paired-operator cohomology");
  add_common(rbp);
  auto* nr = app.add_subcommand("nr-debug", "NR engine self-checks");
  add_common(nr);

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return run_validate(opt);
    if (coh->parsed()) return run_cohomology(opt);
    if (der->parsed()) return run_derivations(opt);
    if (extb->parsed()) return run_extension_build(opt);
    if (exte->parsed()) return run_extension_extract(opt);
    if (extc->parsed()) return run_extension_compare(opt);
    if (defc->parsed()) return run_deform_check(opt);
    if (deft->parsed()) return run_deform_trivialize(opt);
    if (mc->parsed()) return run_mc_check(opt);
    if (rbp->parsed()) return run_rbp_cohomology(opt);
    if (nr->parsed()) return run_nr_debug(opt);
  } catch (const MathError& e) {
    std::cerr << "verdict: " << e.what() << "\n";
    return 1;
  } catch (const SchemaError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
