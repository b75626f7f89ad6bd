// Command-line front end: build algebras, compute invariants and derived
// functors, run the ring checks, print the d(t) table, run and audit sweeps.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "gorext/bench.hpp"
#include "gorext/series.hpp"

using namespace gorext;

namespace {

struct Globals {
  std::uint32_t p = 2;
  int bound = 6;
  std::uint64_t seed = 0;
  std::string out, dump;
};

struct AlgebraInput {
  std::string ideal, file, vars;

  LocalAlgebra load(const Globals& g) const {
    if (!file.empty()) return algebra_from_json(read_json_file(file));
    if (ideal.empty()) throw std::invalid_argument("give --ideal or --algebra");
    std::optional<std::vector<std::string>> names;
    if (!vars.empty()) {
      names.emplace();
      std::stringstream ss(vars);
      for (std::string v; std::getline(ss, v, ',');) names->push_back(v);
    }
    return algebra_from_ideal(ideal, g.p, names);
  }
};

void add_algebra_options(CLI::App* cmd, AlgebraInput& in) {
  auto* a = cmd->add_option("--ideal,-i", in.ideal, "ideal generators, e.g. \"x^2, x*y, y^2\"");
  auto* b = cmd->add_option("--algebra,-a", in.file, "algebra JSON file");
  a->excludes(b);
  cmd->add_option("--vars", in.vars, "comma-separated variable names");
}

/// k, A, D, m (the maximal ideal) or a module JSON file.
AModule load_module(const std::string& spec, const LocalAlgebra& A) {
  if (spec == "k") return residue_field_module(A);
  if (spec == "A") return regular_module(A);
  if (spec == "D") return dualizing_module(A);
  if (spec == "m") return submodule(regular_module(A), A.maximal_ideal()).module;
  return module_from_json(read_json_file(spec), A);
}

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw std::runtime_error(g.out + ": cannot open for writing");
  f << text;
  if (!f) throw std::runtime_error(g.out + ": write failed");
}

void emit(const Globals& g, const Json& j) { emit(g, j.dump(2) + "\n"); }

void write_dump(const Globals& g, const Json& j) {
  if (g.dump.empty()) return;
  std::ofstream f(g.dump);
  if (!f) throw std::runtime_error(g.dump + ": cannot open for writing");
  f << j.dump(2) << "\n";
}

Json verdict_with(const Verdict& v) { return Json{{"property", v.property}, {"value", v.value}, {"tag", v.tag()}, {"certificate", v.certificate}}; }

template <class T>
Json opt_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string s;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) s += ",";
    const bool quote = cells[i].find_first_of(",\"") != std::string::npos;
    if (!quote) {
      s += cells[i];
      continue;
    }
    s += '"';
    for (char c : cells[i]) s += c == '"' ? std::string("\"\"") : std::string(1, c);
    s += '"';
  }
  return s + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Derived-functor experiments over artinian local algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--char,-p", g.p, "field characteristic")->capture_default_str();
  app.add_option("--bound,-B", g.bound, "homological bound")->capture_default_str();
  app.add_option("--seed", g.seed, "random seed")->capture_default_str();
  app.add_option("--out,-o", g.out, "output file (default stdout)");
  app.add_option("--dump", g.dump, "write Betti/Bass tables or spectral pages as JSON");

  int code = 0;
  AlgebraInput in;

  auto* build = app.add_subcommand("build", "ideal -> algebra JSON");
  add_algebra_options(build, in);
  build->callback([&] { emit(g, algebra_to_json(in.load(g))); });

  auto* inv = app.add_subcommand("invariants", "dimension, Hilbert series, socle, Loewy length");
  add_algebra_options(inv, in);
  inv->callback([&] {
    LocalAlgebra A = in.load(g);
    std::vector<std::uint64_t> h;
    const IntegerPolynomial hs = hilbert_series(A);
    for (const auto& c : hs.coeffs()) h.push_back(static_cast<std::uint64_t>(c));
    emit(g, Json{{"fingerprint", fingerprint(A)},
                 {"dim", A.dim()},
                 {"edim", edim(A)},
                 {"hilbert", h},
                 {"socle_dim", socle(A).dim()},
                 {"loewy_length", A.loewy_length()},
                 {"koszul_homology", koszul_homology_ranks(A)},
                 {"gorenstein", verdict_with(gorenstein(A))}});
  });

  std::string mod = "k", mod2 = "A";
  auto* res = app.add_subcommand("resolve", "Betti and Bass numbers of a module");
  add_algebra_options(res, in);
  res->add_option("--module,-m", mod, "k, A, D, m or a module JSON file")->capture_default_str();
  res->callback([&] {
    LocalAlgebra A = in.load(g);
    Json t = betti_table_json(load_module(mod, A), g.bound);
    write_dump(g, t);
    emit(g, t);
  });

  auto* ext = app.add_subcommand("ext", "dim Ext^i(M, N) and Tor_i(M, N) for i <= bound");
  add_algebra_options(ext, in);
  ext->add_option("--module,-m", mod, "first argument")->capture_default_str();
  ext->add_option("--target,-n", mod2, "second argument")->capture_default_str();
  ext->callback([&] {
    LocalAlgebra A = in.load(g);
    AModule M = load_module(mod, A), N = load_module(mod2, A);
    emit(g, Json{{"bound", g.bound}, {"ext", ext_dims(M, N, g.bound)}, {"tor", tor_dims(M, N, g.bound)}});
    if (!g.dump.empty()) {
      // pages of Hom(F, N) for F -> M minimal free; N must be injective
      if (!injective_copies(N)) throw std::invalid_argument("--dump for ext needs an injective second argument (e.g. D)");
      FreeResolution F = minimal_free_resolution(M, g.bound);
      write_dump(g, spectral_pages_json(spectral_sequence(F.complex, ChainComplex::single(N))));
    }
  });

  auto* tc1 = app.add_subcommand("tc1", "Ext^i(D, A) = 0 for i <= bound forces Gorenstein?");
  add_algebra_options(tc1, in);
  tc1->callback([&] {
    Tc1Result r = tc1_check(in.load(g), g.bound);
    emit(g, Json{{"bound", r.bound}, {"ext_DA", r.ext}, {"first_nonzero", opt_json(r.first_nonzero)}, {"gorenstein", r.gorenstein}, {"outcome", to_string(r.outcome)}});
    if (r.outcome != TcOutcome::consistent) code = 2;
  });

  auto* tc2 = app.add_subcommand("tc2", "over a selfinjective ring, Ext^i(M, M) = 0 forces M free?");
  add_algebra_options(tc2, in);
  tc2->add_option("--module,-m", mod, "k, A, D, m or a module JSON file")->capture_default_str();
  tc2->callback([&] {
    LocalAlgebra A = in.load(g);
    Tc2Result r = tc2_check(A, load_module(mod, A), g.bound);
    emit(g, Json{{"bound", r.bound}, {"ext_MM", r.ext}, {"first_nonzero", opt_json(r.first_nonzero)}, {"projective", r.projective}, {"outcome", to_string(r.outcome)}});
    if (r.outcome != TcOutcome::consistent) code = 2;
  });

  auto* gol = app.add_subcommand("golod", "Betti numbers of k against the Serre bound");
  add_algebra_options(gol, in);
  gol->callback([&] {
    LocalAlgebra A = in.load(g);
    SerreComparison c = serre_comparison(A, std::max(g.bound, 2));
    std::vector<std::string> bound;
    for (const auto& b : c.bound) bound.push_back(b.str());
    emit(g, Json{{"koszul_homology", koszul_homology_ranks(A)},
                 {"betti_k", c.betti},
                 {"serre_bound", bound},
                 {"first_strict", opt_json(c.first_strict)},
                 {"golod", verdict_with(golod(A, std::max(g.bound, 2)))},
                 {"hypersurface", verdict_with(hypersurface(A, g.bound))},
                 {"complete_intersection", verdict_with(complete_intersection(A, g.bound))}});
  });

  auto* l3 = app.add_subcommand("loewy3", "the m^3 = 0 diagnostic");
  add_algebra_options(l3, in);
  l3->callback([&] {
    Loewy3Report r = loewy3_diagnostic(in.load(g));
    Json chain = Json::array();
    for (const auto& c : r.chain)
      chain.push_back(Json{{"left", c.left}, {"rel", c.rel}, {"right", c.right}, {"values", {c.left_value, c.right_value}}, {"holds", c.holds()}});
    emit(g, Json{{"branch", r.branch},
                 {"length", r.length},
                 {"edim", r.edim},
                 {"len_m2", r.len_m2},
                 {"socle_dim", r.socle_dim},
                 {"m2_equals_socle", r.m2_equals_socle},
                 {"gorenstein", r.gorenstein},
                 {"ext1_DA", r.ext1_DA},
                 {"ext2_DA", r.ext2_D_A},
                 {"ext2_kA", r.ext2_k_A},
                 {"cover", {{"rank", r.cover_rank}, {"dim_C", r.dim_C}, {"mu_C", r.mu_C}, {"mu_D", r.mu_D}, {"mC_zero", r.mC_zero}}},
                 {"ext1_CA", r.ext1_C_A},
                 {"ext2_CA", r.ext2_C_A},
                 {"tor1_DD", r.tor1_DD},
                 {"dim_C_tensor_D", r.dim_C_tensor_D},
                 {"dim_hom_DD", r.dim_hom_DD},
                 {"chain_element", opt_json(r.chain_element)},
                 {"chain", chain},
                 {"failed_links", r.failed_links()}});
  });

  auto* series = app.add_subcommand("series", "the d(t) table of codepth <= 3 rings");
  series->require_subcommand(1);
  int cap = 10, lmax = 10;
  auto* table = series->add_subcommand("table", "rows with their square-factor and simple-root verdicts (CSV)");
  table->add_option("--cap", cap, "parameter cap")->capture_default_str();
  table->callback([&] {
    std::string csv = csv_row({"row", "codepth", "l", "m", "p", "q", "r", "d", "square_factor", "certificate", "roots_in_unit_interval", "simple_roots"});
    for (const auto& row : table_rows(cap)) {
      const IntegerPolynomial d = table_d(row);
      SquareFactorVerdict sq = square_factor_exclusion(d);
      SimpleRootVerdict sr = simple_root_check(d);
      csv += csv_row({row.name(), std::to_string(row.codepth()), std::to_string(row.l), std::to_string(row.m), std::to_string(row.p),
                      std::to_string(row.q), std::to_string(row.r), d.str(), sq.pass ? "PASS" : "FAIL",
                      sq.certificate ? sq.certificate->str() : "", std::to_string(sr.roots), sr.pass() ? "PASS" : "FAIL"});
    }
    emit(g, csv);
  });
  auto* check = series->add_subcommand("check", "pole at t = 1: factorization against the H rows (CSV)");
  check->add_option("--lmax", lmax, "check l = 2 .. lmax")->capture_default_str();
  check->callback([&] {
    std::string csv = csv_row({"l", "expansion", "root_at_one", "h_shape", "matching_rows", "holds"});
    for (int l = 2; l <= lmax; ++l) {
      PoleFactorization f = pole_factorization_check(l);
      std::string rows;
      for (const auto& r : f.matches) rows += (rows.empty() ? "" : " ") + r.name() + "[m=" + std::to_string(r.m) + "]";
      csv += csv_row({std::to_string(l), f.expansion.str(), f.root_at_one ? "yes" : "no", f.h_shape ? "yes" : "no", rows, f.holds() ? "PASS" : "FAIL"});
    }
    emit(g, csv);
  });

  GeneratorSpec spec;
  std::string family = "monomial-enumerate";
  std::size_t quadrics = 0;
  SweepOptions opt;
  auto* sweep = app.add_subcommand("sweep", "generate instances and write one JSONL record per instance");
  sweep->add_option("--family", family, "monomial-enumerate, random-homogeneous or loewy3-random")->capture_default_str();
  sweep->add_option("--n", spec.n, "variable count (maximum for random families)")->capture_default_str();
  sweep->add_option("--cap", spec.cap, "dimension cap")->capture_default_str();
  sweep->add_option("--count", spec.count, "samples for random families")->capture_default_str();
  auto* qopt = sweep->add_option("--quadrics", quadrics, "loewy3: fixed number of quadrics");
  sweep->add_option("--threads", opt.threads, "worker threads (0: all cores)")->capture_default_str();
  sweep->add_option("--tail-from", opt.tail_from, "start of the tail window")->capture_default_str();
  sweep->add_flag("--timing", opt.timing, "record wall time per instance (breaks byte-identical logs)");
  sweep->callback([&] {
    spec.family = family_from_string(family);
    spec.p = g.p;
    spec.seed = g.seed;
    if (qopt->count()) spec.quadrics = quadrics;
    opt.bound = g.bound;
    SweepResult r = run_sweep(generate(spec), opt);
    emit(g, to_jsonl(r.records));
    std::cerr << Json{{"spec", spec.to_json()}, {"bound", g.bound}, {"summary", r.summary.to_json()}}.dump() << "\n";
    code = r.summary.exit_code();
  });

  std::string log;
  auto* audit = app.add_subcommand("audit", "recompute every stored Ext window of a JSONL log");
  audit->add_option("log", log, "JSONL file")->required();
  audit->callback([&] {
    std::ifstream f(log);
    if (!f) throw std::runtime_error(log + ": cannot open");
    AuditReport rep = audit_records(f, log);
    emit(g, Json{{"records", rep.records}, {"mismatches", rep.mismatches}, {"messages", rep.messages}});
    if (!rep.clean()) code = 2;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return code;
}
