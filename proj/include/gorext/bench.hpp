// Instance generators, experiment records and sweeps.
#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <set>
#include <thread>

#include "gorext/detect.hpp"
#include "gorext/groebner.hpp"
#include "gorext/io.hpp"

namespace gorext {

enum class Family { monomial_enumerate, random_homogeneous, loewy3_random };

inline std::string to_string(Family f) {
  switch (f) {
    case Family::monomial_enumerate: return "monomial-enumerate";
    case Family::random_homogeneous: return "random-homogeneous";
    case Family::loewy3_random: return "loewy3-random";
  }
  return "?";
}

inline Family family_from_string(const std::string& s) {
  for (Family f : {Family::monomial_enumerate, Family::random_homogeneous, Family::loewy3_random})
    if (to_string(f) == s) return f;
  throw std::invalid_argument("unknown family: " + s);
}

inline constexpr std::size_t kDimSoftLimit = 30;

struct GeneratorSpec {
  Family family = Family::monomial_enumerate;
  std::size_t n = 2;               // variable count; for random families the maximum
  std::uint32_t p = 2;             // characteristic
  std::size_t cap = 7;             // dimension cap (monomial: quotient dimension)
  std::size_t count = 0;           // samples drawn by the random families
  std::uint64_t seed = 0;
  std::optional<std::size_t> quadrics;  // loewy3: fixed number of quadrics, else drawn

  Json to_json() const {
    Json j{{"family", to_string(family)}, {"n", n}, {"char", p}, {"cap", cap}, {"count", count}, {"seed", seed}};
    if (quadrics) j["quadrics"] = *quadrics;
    return j;
  }
};

struct Instance {
  LocalAlgebra algebra;
  Json provenance;
};

inline const std::vector<std::string>& variable_names() {
  static const std::vector<std::string> names{"x", "y", "z", "w"};
  return names;
}

inline std::vector<std::string> variables(std::size_t n) {
  if (n == 0 || n > variable_names().size()) throw std::invalid_argument("variable count must be in [1, 4]");
  return {variable_names().begin(), variable_names().begin() + static_cast<std::ptrdiff_t>(n)};
}

inline std::string monomial_text(const std::vector<unsigned>& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!e[i]) continue;
    if (!s.empty()) s += "*";
    s += variable_names()[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

// ---------------------------------------------------------------------------
// Monomial enumeration

using Staircase = std::vector<std::vector<unsigned>>;  // sorted exponent vectors

/// Greatest relabeling of the variables (x gets the longest leg), for
/// dedup up to permutation.
inline Staircase canonical_staircase(const Staircase& S, std::size_t n) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Staircase best;
  do {
    Staircase T;
    for (const auto& e : S) {
      std::vector<unsigned> f(n);
      for (std::size_t i = 0; i < n; ++i) f[perm[i]] = e[i];
      T.push_back(std::move(f));
    }
    std::sort(T.begin(), T.end());
    if (best.empty() || T > best) best = std::move(T);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Finite order ideals of N^n containing 1 and every variable, with at most
/// cap elements, one per permutation class, ordered by size then content.
inline std::vector<Staircase> enumerate_staircases(std::size_t n, std::size_t cap) {
  if (n == 0 || n > 3) throw std::invalid_argument("enumerate_staircases: n must be in [1, 3]");
  std::set<Staircase> level{Staircase{std::vector<unsigned>(n, 0)}};
  std::set<std::pair<std::size_t, Staircase>> out;
  for (std::size_t size = 1; size <= cap && !level.empty(); ++size) {
    std::set<Staircase> next;
    for (const auto& S : level) {
      bool all_vars = true;
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<unsigned> e(n, 0);
        e[i] = 1;
        if (!std::binary_search(S.begin(), S.end(), e)) all_vars = false;
      }
      if (all_vars) out.insert({size, S});
      if (size == cap) continue;
      // grow by one addable corner
      for (const auto& s : S)
        for (std::size_t i = 0; i < n; ++i) {
          std::vector<unsigned> u = s;
          ++u[i];
          if (std::binary_search(S.begin(), S.end(), u)) continue;
          bool addable = true;
          for (std::size_t j = 0; j < n && addable; ++j) {
            if (!u[j]) continue;
            std::vector<unsigned> v = u;
            --v[j];
            addable = std::binary_search(S.begin(), S.end(), v);
          }
          if (!addable) continue;
          Staircase T = S;
          T.insert(std::upper_bound(T.begin(), T.end(), u), u);
          next.insert(canonical_staircase(T, n));
        }
    }
    level = std::move(next);
  }
  std::vector<Staircase> result;
  for (auto& [s, S] : out) result.push_back(S);
  return result;
}

/// Minimal monomial generators of the ideal whose complement is S.
inline std::vector<std::vector<unsigned>> staircase_ideal(const Staircase& S, std::size_t n) {
  std::set<std::vector<unsigned>> gens;
  for (const auto& s : S)
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<unsigned> u = s;
      ++u[i];
      if (std::binary_search(S.begin(), S.end(), u)) continue;
      bool minimal = true;
      for (std::size_t j = 0; j < n && minimal; ++j) {
        if (!u[j]) continue;
        std::vector<unsigned> v = u;
        --v[j];
        minimal = std::binary_search(S.begin(), S.end(), v);
      }
      if (minimal) gens.insert(u);
    }
  return {gens.begin(), gens.end()};
}

inline std::string ideal_text(const std::vector<std::vector<unsigned>>& gens) {
  std::string s;
  for (auto it = gens.rbegin(); it != gens.rend(); ++it) s += (s.empty() ? "" : ", ") + monomial_text(*it);
  return s;
}

inline std::vector<Instance> enumerate_monomial_algebras(const GeneratorSpec& spec) {
  std::vector<Instance> out;
  for (const auto& S : enumerate_staircases(spec.n, std::min(spec.cap, kDimSoftLimit))) {
    const std::string I = ideal_text(staircase_ideal(S, spec.n));
    out.push_back({algebra_from_ideal(I, spec.p, variables(spec.n)),
                   Json{{"family", to_string(Family::monomial_enumerate)}, {"n", spec.n}, {"char", spec.p}, {"ideal", I}}});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Random families

inline std::vector<std::vector<unsigned>> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (unsigned a = left + 1; a-- > 0;) {
      e[i] = a;
      self(self, i + 1, left - a);
    }
  };
  rec(rec, 0, d);
  return out;
}

template <class Rng>
std::string random_form(std::size_t n, unsigned d, std::uint32_t p, Rng& rng) {
  std::uniform_int_distribution<std::uint32_t> coef(0, p - 1);
  std::string s;
  for (const auto& m : monomials_of_degree(n, d)) {
    const std::uint32_t c = coef(rng);
    if (!c) continue;
    s += (s.empty() ? "" : " + ") + std::to_string(c) + "*" + monomial_text(m);
  }
  return s;
}

inline std::string power_of_max_ideal(std::size_t n, unsigned t) {
  std::string s;
  for (const auto& m : monomials_of_degree(n, t)) s += (s.empty() ? "" : ", ") + monomial_text(m);
  return s;
}

/// k[x_1..x_n] / ((x)^3 + span of `quadrics` random quadrics). With at
/// least as many quadrics as quadratic monomials, all of (x)^2 is used.
template <class Rng>
Instance random_loewy3(std::size_t n, std::uint32_t p, std::size_t quadrics, Rng& rng) {
  const auto vars = variables(n);
  const std::size_t nq = n * (n + 1) / 2;
  std::string I = power_of_max_ideal(n, 3);
  std::vector<std::string> forms;
  if (quadrics >= nq) {
    I = power_of_max_ideal(n, 2);
  } else {
    for (std::size_t i = 0; i < quadrics; ++i) {
      std::string f = random_form(n, 2, p, rng);
      if (!f.empty()) forms.push_back(f);
    }
  }
  for (const auto& f : forms) I += ", " + f;
  LocalAlgebra A = algebra_from_ideal(I, p, vars);
  if (A.loewy_length() > 3) throw std::logic_error("random_loewy3: m^3 != 0");
  return {A, Json{{"family", to_string(Family::loewy3_random)}, {"n", n}, {"char", p}, {"quadrics", quadrics}, {"ideal", I}}};
}

/// (x)^t + random forms of one degree d in [2, t - 1].
template <class Rng>
Instance random_homogeneous(std::size_t n, std::uint32_t p, unsigned t, unsigned d, std::size_t forms, Rng& rng) {
  if (d < 2 || d >= t) throw std::invalid_argument("random_homogeneous: need 2 <= d < t");
  std::string I = power_of_max_ideal(n, t);
  for (std::size_t i = 0; i < forms; ++i) {
    std::string f = random_form(n, d, p, rng);
    if (!f.empty()) I += ", " + f;
  }
  return {algebra_from_ideal(I, p, variables(n)),
          Json{{"family", to_string(Family::random_homogeneous)}, {"n", n}, {"char", p}, {"top", t}, {"degree", d}, {"forms", forms}, {"ideal", I}}};
}

/// The s-th draw of a random family; depends only on (spec.seed, s).
inline Instance random_instance(const GeneratorSpec& spec, std::size_t s) {
  std::seed_seq seq{static_cast<std::uint32_t>(spec.seed), static_cast<std::uint32_t>(spec.seed >> 32), static_cast<std::uint32_t>(s)};
  std::mt19937_64 rng(seq);
  const std::size_t cap = std::min(spec.cap, kDimSoftLimit);
  for (int attempt = 0; attempt < 64; ++attempt) {
    const std::size_t n = 1 + rng() % spec.n;
    Instance inst = [&] {
      if (spec.family == Family::loewy3_random) {
        const std::size_t q = spec.quadrics ? *spec.quadrics : rng() % (n * (n + 1) / 2 + 1);
        return random_loewy3(n, spec.p, q, rng);
      }
      const unsigned t = 3 + static_cast<unsigned>(rng() % 2);
      const unsigned d = 2 + static_cast<unsigned>(rng() % (t - 2));
      return random_homogeneous(n, spec.p, t, d, 1 + rng() % (n + 1), rng);
    }();
    if (inst.algebra.dim() <= cap) {
      inst.provenance["seed"] = spec.seed;
      inst.provenance["sample"] = s;
      return inst;
    }
  }
  throw std::runtime_error("random_instance: no draw within the dimension cap");
}

inline std::vector<Instance> generate(const GeneratorSpec& spec) {
  if (spec.family == Family::monomial_enumerate) return enumerate_monomial_algebras(spec);
  std::vector<Instance> out;
  for (std::size_t s = 0; s < spec.count; ++s) out.push_back(random_instance(spec, s));
  return out;
}

// ---------------------------------------------------------------------------
// Records

struct SweepOptions {
  int bound = 6;
  int tail_from = 5;  // start of the tail window for the edim <= 3 surrogate
  unsigned threads = 0;  // 0: hardware concurrency
  bool timing = false;   // timing makes logs nondeterministic
};

inline Json verdict_json(const Verdict& v) {
  return Json{{"value", v.value}, {"tag", v.tag()}, {"certificate", v.certificate}};
}

/// One named implication: checked only when its hypothesis applies.
inline Json assertion(bool applies, bool holds) { return Json{{"applies", applies}, {"holds", !applies || holds}}; }

inline Json experiment_record(const Instance& inst, std::size_t index, const SweepOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  const LocalAlgebra& A = inst.algebra;
  const int B = opt.bound;
  Json r{{"schema", kSchemaVersion}, {"index", index}, {"fingerprint", fingerprint(A)}, {"provenance", inst.provenance}, {"bound", B}};
  r["algebra"] = algebra_to_json(A);

  const std::size_t e = edim(A);
  const IntegerPolynomial h = hilbert_series(A);
  std::vector<std::uint64_t> hilbert;
  for (const auto& c : h.coeffs()) hilbert.push_back(static_cast<std::uint64_t>(c));
  r["invariants"] = Json{{"dim", A.dim()}, {"edim", e}, {"hilbert", hilbert}, {"socle_dim", socle(A).dim()}, {"loewy_length", A.loewy_length()}};

  const AModule D = dualizing_module(A);
  auto ext = ext_dims(D, regular_module(A), B);
  std::vector<std::uint64_t> window(ext.begin() + 1, ext.end());
  r["ext_DA"] = window;
  const std::size_t hom_DA = hom_module(D, regular_module(A)).dim();
  r["hom_DA"] = hom_DA;

  const Verdict gor = gorenstein(A), gol = golod(A, std::max(B, 2)), hyp = hypersurface(A, B);
  Tc1Result tc1 = tc1_check(A, B);
  r["verdicts"] = Json{{"gorenstein", verdict_json(gor)}, {"golod", verdict_json(gol)}, {"hypersurface", verdict_json(hyp)}, {"tc1", to_string(tc1.outcome)}};

  const bool ext1_zero = window.empty() || window[0] == 0;
  const bool window_zero = std::all_of(window.begin(), window.end(), [](auto v) { return v == 0; });
  bool tail_zero = true;
  for (int i = std::max(1, std::min(opt.tail_from, B)); i <= B; ++i) tail_zero = tail_zero && ext[static_cast<std::size_t>(i)] == 0;
  SerreComparison serre = serre_comparison(A, std::max(B, 2));
  r["checks"] = Json{
      {"hom_DA_nonzero", assertion(true, hom_DA > 0)},
      {"serre_inequality", assertion(true, serre.inequality_holds)},
      {"edim2_ext1_forces_gorenstein", assertion(e <= 2 && ext1_zero, gor.value)},
      {"loewy3_ext1_forces_gorenstein", assertion(A.loewy_length() <= 3 && ext1_zero, gor.value)},
      {"golod_window_forces_hypersurface", assertion(gol.value && window_zero, hyp.value)},
      {"edim3_tail_window_forces_gorenstein", assertion(e <= 3 && tail_zero, gor.value)},
  };
  r["tail_window"] = {std::max(1, std::min(opt.tail_from, B)), B};
  std::vector<std::string> violations;
  for (const auto& [k, v] : r["checks"].items())
    if (!v["holds"].get<bool>()) violations.push_back(k);
  r["violations"] = violations;
  if (opt.timing)
    r["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

// ---------------------------------------------------------------------------
// Sweeps

struct SweepSummary {
  std::size_t instances = 0, gorenstein = 0, ext1_zero = 0, candidates = 0, violations = 0, errors = 0;

  Json to_json() const {
    return Json{{"instances", instances}, {"gorenstein", gorenstein}, {"ext1_zero", ext1_zero},
                {"candidates", candidates}, {"violations", violations}, {"errors", errors}};
  }
  /// 0 clean, 2 counterexample candidate or failed assertion, 1 operational error.
  int exit_code() const { return errors ? 1 : (candidates || violations) ? 2 : 0; }
};

struct SweepResult {
  std::vector<Json> records;  // by instance index
  SweepSummary summary;
};

/// Records are computed by a worker pool and returned in index order, so
/// equal inputs give identical logs.
inline SweepResult run_sweep(const std::vector<Instance>& instances, const SweepOptions& opt) {
  SweepResult res;
  res.records.resize(instances.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < instances.size();) {
      try {
        res.records[i] = experiment_record(instances[i], i, opt);
      } catch (const std::exception& e) {
        res.records[i] = Json{{"schema", kSchemaVersion}, {"index", i}, {"provenance", instances[i].provenance}, {"error", e.what()}};
      }
    }
  };
  unsigned T = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  T = static_cast<unsigned>(std::min<std::size_t>(T, std::max<std::size_t>(instances.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < T; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();

  SweepSummary& s = res.summary;
  s.instances = instances.size();
  for (const auto& r : res.records) {
    if (r.contains("error")) {
      ++s.errors;
      continue;
    }
    if (r["verdicts"]["gorenstein"]["value"].get<bool>()) ++s.gorenstein;
    const auto& w = r["ext_DA"];
    if (w.empty() || w[0] == 0) ++s.ext1_zero;
    if (r["verdicts"]["tc1"] != to_string(TcOutcome::consistent)) ++s.candidates;
    if (!r["violations"].empty()) ++s.violations;
  }
  return res;
}

inline std::string to_jsonl(const std::vector<Json>& records) {
  std::string out;
  for (const auto& r : records) out += r.dump() + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Audit: recompute each stored Ext window from the stored algebra

struct AuditReport {
  std::size_t records = 0, mismatches = 0;
  std::vector<std::string> messages;
  bool clean() const { return mismatches == 0; }
};

inline AuditReport audit_records(std::istream& in, const std::string& source = "log") {
  AuditReport rep;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    ++rep.records;
    const std::string where = source + ":" + std::to_string(lineno);
    try {
      Json r = Json::parse(line);
      check_schema(r, "record");
      if (r.contains("error")) {
        ++rep.mismatches;
        rep.messages.push_back(where + ": record carries an error");
        continue;
      }
      LocalAlgebra A = algebra_from_json(r.at("algebra"));
      if (fingerprint(A) != r.at("fingerprint").get<std::string>()) {
        ++rep.mismatches;
        rep.messages.push_back(where + ": fingerprint mismatch");
        continue;
      }
      const int B = r.at("bound").get<int>();
      auto ext = ext_dims(dualizing_module(A), regular_module(A), B);
      std::vector<std::uint64_t> window(ext.begin() + 1, ext.end());
      if (window != r.at("ext_DA").get<std::vector<std::uint64_t>>()) {
        ++rep.mismatches;
        rep.messages.push_back(where + ": Ext window differs on recomputation");
      }
    } catch (const std::exception& e) {
      ++rep.mismatches;
      rep.messages.push_back(where + ": " + e.what());
    }
  }
  return rep;
}

}  // namespace gorext
