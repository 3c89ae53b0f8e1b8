#include "suite/acceptance.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <thread>

#include "suite/json_out.hpp"

namespace suite {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Fx {
  uint32_t n, p;
  std::vector<uint32_t> r;
};
const std::vector<Fx> kGsFixtures{{2, 3, {1}}, {2, 5, {2}}, {3, 5, {1, 2}}, {3, 7, {2, 3}}};

hodges::HodgesData make(const Fx& f) { return hodges::HodgesData::make(f.n, f.p, f.r); }

// Collects named boolean checks and keeps the first failure message.
struct Checks {
  bool ok = true;
  json failures = json::array();
  void expect(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (failures.size() < 20) failures.push_back(what);
  }
};

CriterionResult gs_reproduction(const SuiteOptions&) {
  CriterionResult r{1, "Groebner-Shirshov reproduction", false, true, 0, 10, {}};
  Checks c;
  json rows = json::array();
  for (const auto& f : kGsFixtures) {
    auto d = make(f);
    auto t0 = Clock::now();
    auto rep = hodges::verify_shirshov(d);
    double s = since(t0);
    bool in_time = s < 10;
    r.within_budget &= in_time;
    c.expect(rep.match, d.label() + ": completed basis differs from the expected one");
    c.expect(rep.expected_is_gs, d.label() + ": expected basis is not closed under compositions");
    rows.push_back({{"fixture", d.label()}, {"match", rep.match}, {"rules", rep.computed.size()}, {"within_10s", in_time}});
  }
  r.pass = c.ok && r.within_budget;
  r.detail = {{"fixtures", rows}, {"failures", c.failures}};
  return r;
}

uint32_t sum_sq(const hodges::HodgesData& d) {
  uint32_t s = 0;
  for (uint32_t i = 0; i < d.n; ++i) s += d.r_at(i) * d.r_at(i);
  return s;
}

CriterionResult dimensions(const SuiteOptions&) {
  CriterionResult r{2, "dimension formulas", false, true, 0, 5, {}};
  Checks c;
  json rows = json::array();
  auto timed = [&](const hodges::HodgesData& d, hodges::Level level, size_t want) {
    auto t0 = Clock::now();
    size_t got = hodges::quotient_dim(d, level);
    bool in_time = since(t0) < 5;
    r.within_budget &= in_time;
    c.expect(got == want, d.label() + " " + hodges::level_name(level) + ": " + std::to_string(got) + " != " +
                              std::to_string(want));
    rows.push_back({{"fixture", d.label()}, {"level", hodges::level_name(level)}, {"dim", got}, {"expected", want},
                    {"within_5s", in_time}});
  };
  for (const auto& f : kGsFixtures) {
    auto d = make(f);
    timed(d, hodges::Level::frakT, static_cast<size_t>(f.n) * f.p * f.p);
    timed(d, hodges::Level::t, 2 * f.p * f.p - sum_sq(d));
  }
  timed(hodges::HodgesData::make(2, 5, {2}), hodges::Level::t, 37);
  timed(hodges::HodgesData::make(3, 7, {2, 3}), hodges::Level::t, 81);
  r.pass = c.ok && r.within_budget;
  r.detail = {{"rows", rows}, {"failures", c.failures}};
  return r;
}

CriterionResult baby_verma_structure(const SuiteOptions& opt) {
  CriterionResult r{3, "baby Verma structure", false, true, 0, 0, {}};
  Checks c;
  auto d = hodges::HodgesData::make(3, 5, {1, 2});
  auto s = hodges::structure_report(d);
  std::vector<fdrep::FDModule> simples;
  for (size_t i : s.present) simples.push_back(s.L[i]);
  for (size_t i = 0; i < d.n; ++i)
    c.expect(s.dim_L[i] == d.r_at(d.n - 1 - i), "dim L_" + std::to_string(i) + " != r_" + std::to_string(d.n - 1 - i));
  const int64_t p = d.p;
  const int64_t lo = opt.quick ? 0 : -p, hi = opt.quick ? p : 2 * p;
  json rows = json::array();
  size_t nonzero = 0;
  for (int64_t lam = lo; lam < hi; ++lam) {
    auto v = hodges::baby_verma(d, lam, hodges::Variant::plain);
    if (v.zero) continue;
    ++nonzero;
    const std::string tag = "lambda=" + std::to_string(lam);
    c.expect(v.module.dim == d.p, tag + ": dimension " + std::to_string(v.module.dim));
    auto top = fdrep::loewy_series(v.module, simples, fdrep::Series::radical);
    auto bottom = fdrep::loewy_series(v.module, simples, fdrep::Series::socle);
    c.expect(top.size() == d.n, tag + ": " + std::to_string(top.size()) + " radical layers");
    c.expect(top.size() == bottom.size(), tag + ": radical and socle lengths differ");
    json layers = json::array();
    bool shape = top.size() == d.n && bottom.size() == top.size();
    for (size_t t = 0; shape && t < top.size(); ++t) {
      shape = top[t].parts.size() == 1 && top[t].parts[0].multiplicity == 1 && bottom[top.size() - 1 - t].parts.size() == 1;
      if (!shape) break;
      const auto& part = top[t].parts[0];
      const auto& mirror = bottom[top.size() - 1 - t].parts[0];
      size_t simple = s.present[part.simple];
      shape = part.simple == mirror.simple && part.shift == mirror.shift && part.shift.has_value() &&
              top[t].dim == s.dim_L[simple];
      if (t > 0) {
        size_t prev = s.present[top[t - 1].parts[0].simple];
        // Raw degrees: one step of the shift functor moves degrees by p.
        shape = shape && simple == (prev + 1) % d.n && *part.shift == *top[t - 1].parts[0].shift - p;
      }
      layers.push_back({{"simple", simple}, {"shift", part.shift ? json(*part.shift) : json(nullptr)}, {"dim", top[t].dim}});
    }
    c.expect(shape, tag + ": not uniserial with cyclic single-simple layers");
    auto matches = hodges::verma_matches(s, lam, 6);
    c.expect(matches.size() == 1, tag + ": " + std::to_string(matches.size()) + " matches among V_i[j]");
    json m = matches.size() == 1 ? json{{"i", matches[0].first}, {"j", matches[0].second}} : json(nullptr);
    rows.push_back({{"lambda", lam}, {"layers", layers}, {"match", m}});
  }
  c.expect(nonzero > 0, "no nonzero baby Verma found");
  r.pass = c.ok;
  r.detail = {{"fixture", d.label()}, {"dim_L", s.dim_L}, {"nonzero", nonzero}, {"vermas", rows}, {"failures", c.failures}};
  return r;
}

CriterionResult projective_identity(const SuiteOptions&) {
  CriterionResult r{4, "projective dimension identity", false, true, 0, 0, {}};
  Checks c;
  json rows = json::array();
  for (const auto& f : kGsFixtures) {
    auto d = make(f);
    auto s = hodges::structure_report(d);
    size_t total = 0;
    for (size_t i : s.present) {
      size_t ri = d.r_at(d.n - 1 - i);
      total += (2 * d.p - ri) * ri;
    }
    c.expect(total == s.dim_t, d.label() + ": sum " + std::to_string(total) + " != dim t(v) " + std::to_string(s.dim_t));
    c.expect(total == s.weighted_sum, d.label() + ": sum disagrees with sum dim T_i dim L_i");
    rows.push_back({{"fixture", d.label()}, {"sum", total}, {"dim_t", s.dim_t}, {"weighted_sum", s.weighted_sum}});
  }
  r.pass = c.ok;
  r.detail = {{"fixtures", rows}, {"failures", c.failures}};
  return r;
}

CriterionResult ext_quiver(const SuiteOptions&) {
  CriterionResult r{5, "Ext quiver equals the no-cycle quiver", false, true, 0, 0, {}};
  Checks c;
  json rows = json::array();
  for (const auto& f : std::vector<Fx>{{2, 3, {1}}, {3, 5, {1, 2}}}) {
    auto d = make(f);
    auto q = hodges::ext1_quiver(d);
    auto alg = nocycle::build_nocycle(f.n, 2);
    std::vector<std::vector<size_t>> arrows(f.n, std::vector<size_t>(f.n, 0));
    for (size_t x = 0; x < alg.dim(); ++x)
      if (alg.basis[x].length == 1) ++arrows[alg.basis[x].start][alg.end(x)];
    c.expect(q == arrows, d.label() + ": Ext quiver differs from the no-cycle quiver");
    rows.push_back({{"k", f.n}, {"fixture", d.label()}, {"ext1", q}, {"no_cycle_arrows", arrows}});
  }
  r.pass = c.ok;
  r.detail = {{"rows", rows}, {"failures", c.failures}};
  return r;
}

CriterionResult no_cycle(const SuiteOptions& opt) {
  CriterionResult r{6, "no-cycle algebra", false, true, 0, 60, {}};
  auto t0 = Clock::now();
  Checks c;
  json dims = json::object();
  for (uint32_t k : {1u, 2u, 3u, 5u}) {
    auto alg = nocycle::build_nocycle(k, 2);
    c.expect(alg.dim() == k * (2 * k - 1), "dim N(" + std::to_string(k) + ")");
    dims[std::to_string(k)] = alg.dim();
  }
  json strings = json::object();
  for (uint32_t k = 2; k <= 4; ++k) {
    auto alg = nocycle::build_nocycle(k, 5);
    std::vector<fdrep::FDModule> mods;
    for (uint32_t t = 1; t < k; ++t)
      for (const auto& w : nocycle::enumerate_strings(k, t)) {
        mods.push_back(nocycle::string_module(alg, w));
        c.expect(fdrep::is_indecomposable(mods.back()), "St(" + nocycle::to_string(w) + ") decomposes");
      }
    for (size_t a = 0; a < mods.size(); ++a)
      for (size_t b = a + 1; b < mods.size(); ++b)
        if (mods[a].dim == mods[b].dim)
          c.expect(!fdrep::is_isomorphic(mods[a], mods[b]), "two string modules are isomorphic at k=" + std::to_string(k));
    strings[std::to_string(k)] = mods.size();
  }
  json bands = json::object();
  for (uint32_t k = 2; k <= 4; ++k) {
    auto alg = nocycle::build_nocycle(k, 5);
    std::vector<fdrep::FDModule> mods;
    for (const auto& w : nocycle::enumerate_strings(k, k))
      for (uint32_t lam = 1; lam < 5; ++lam) {
        mods.push_back(nocycle::band_module(alg, {w, lam}));
        c.expect(fdrep::is_indecomposable(mods.back()),
                 "Bd_" + std::to_string(lam) + "(" + nocycle::to_string(w) + ") decomposes");
      }
    for (size_t a = 0; a < mods.size(); ++a)
      for (size_t b = a + 1; b < mods.size(); ++b)
        c.expect(!fdrep::is_isomorphic(mods[a], mods[b]), "two band modules are isomorphic at k=" + std::to_string(k));
    bands[std::to_string(k)] = mods.size();
  }
  json sweeps = json::array();
  std::vector<std::tuple<uint32_t, uint32_t, size_t>> plan{{2, 3, 2}};
  if (!opt.quick) plan.push_back({3, 2, 3});
  for (const auto& [k, q, dim] : plan) {
    auto rep = nocycle::toy_sweep(nocycle::build_nocycle(k, q), dim);
    c.expect(rep.ok(), "toy sweep k=" + std::to_string(k) + " found modules outside the lists");
    json j = to_json(rep);
    j["k"] = k;
    j["q"] = q;
    j["max_dim"] = dim;
    sweeps.push_back(j);
  }
  r.within_budget = since(t0) < 60;
  r.pass = c.ok && r.within_budget;
  r.detail = {{"dims", dims}, {"string_modules", strings}, {"band_modules", bands}, {"sweeps", sweeps}, {"failures", c.failures}};
  return r;
}

CriterionResult upsilon(const SuiteOptions&) {
  CriterionResult r{7, "upsilon isomorphism", false, true, 0, 0, {}};
  Checks c;
  json rows = json::array();
  for (auto [n, q] : std::vector<std::pair<uint32_t, uint32_t>>{{2, 3}, {3, 7}, {4, 5}}) {
    auto rep = nocycle::coinvariant_upsilon(n, q);
    c.expect(rep.ok(), "upsilon fails at n=" + std::to_string(n) + ", q=" + std::to_string(q));
    rows.push_back(to_json(rep));
  }
  r.pass = c.ok;
  r.detail = {{"reports", rows}, {"failures", c.failures}};
  return r;
}

CriterionResult modular_lie(const SuiteOptions&) {
  CriterionResult r{8, "modular Lie structure", false, true, 0, 120, {}};
  auto t0 = Clock::now();
  Checks c;
  auto chi = modlie::make_chi(3, 5);
  auto w = modlie::make_weight(3, 5, {1, 2});
  auto ch = modlie::chain(chi, w);
  std::multiset<size_t> dims(ch.dim_L.begin(), ch.dim_L.end());
  c.expect(dims == std::multiset<size_t>{25, 50, 50}, "simple dimensions are not 25*{2,1,2}");
  json rows = json::array();
  std::optional<std::vector<size_t>> first;
  const std::vector<std::pair<uint32_t, uint32_t>> samples{{0, 0}, {1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 3}};
  for (auto [k, alpha] : samples) {
    auto rep = modlie::verma_report(ch, modlie::flag_borel(chi, k, alpha));
    const std::string tag = "(k,alpha)=(" + std::to_string(k) + "," + std::to_string(alpha) + ")";
    c.expect(rep.dim == 125, tag + ": dimension " + std::to_string(rep.dim));
    c.expect(rep.multiplicities == std::vector<size_t>(ch.L.size(), 1), tag + ": multiplicities are not all one");
    if (!first) first = rep.multiplicities;
    c.expect(rep.multiplicities == *first, tag + ": multiplicities change with the flag");
    if (alpha != 0) c.expect(rep.end_dim == 1, tag + ": End has dimension " + std::to_string(rep.end_dim));
    c.expect(rep.relations.ok(), tag + ": bracket or p-th power relations fail");
    json j = to_json(rep);
    j.erase("layers");
    rows.push_back(j);
  }
  for (const auto& L : ch.L) c.expect(modlie::check_relations(L, chi).ok(), "a simple fails the relation suite");
  r.within_budget = since(t0) < 120;
  r.pass = c.ok && r.within_budget;
  r.detail = {{"dim_L", ch.dim_L}, {"samples", rows}, {"failures", c.failures}};
  return r;
}

CriterionResult hecke(const SuiteOptions& opt) {
  using namespace ktheory;
  using scalars::LaurentBi;
  CriterionResult r{9, "Hecke and K-theory suite", false, true, 0, 30, {}};
  auto t0 = Clock::now();
  Checks c;
  json rows = json::array();
  const auto C = Convention::categorified;
  for (uint32_t n = 2; n <= 6; ++n) {
    const std::string tag = "n=" + std::to_string(n) + ": ";
    json row{{"n", n}};
    auto rep = verify_algebra_relations(n);
    for (const auto& rel : rep.relations) c.expect(rel.ok, tag + rel.name + " fails: " + rel.witness);
    c.expect(rep.theta_discrepancy == rep.expected_discrepancy, tag + "theta discrepancy");
    row["relations"] = to_json(rep);

    // Gram matrix against the printed table.
    auto g = gram(n), printed = printed_gram(n);
    json mismatches = json::array();
    for (uint32_t i = 0; i < n; ++i)
      for (uint32_t j = 0; j <= i; ++j)
        if (g[i][j] != printed[i][j])
          mismatches.push_back({{"i", i + 1}, {"j", j + 1}, {"computed", g[i][j].to_string()}, {"table", printed[i][j].to_string()}});
    c.expect(mismatches.empty(), tag + "Gram matrix differs from the table in " + std::to_string(mismatches.size()) + " entries");
    row["gram"] = gram_json(g);
    row["gram_mismatches"] = mismatches;

    bool signed_ok = true;
    for (uint32_t k = 1; k <= n; ++k)
      for (int64_t s = -2; s <= 2; ++s)
        signed_ok &= signed_basis_check(LaurentBi::vp(s) * basis(n, k)) && signed_basis_check(-(LaurentBi::vp(s) * basis(n, k)));
    c.expect(signed_ok, tag + "some +-v'^s O_k fails the signed basis test");
    c.expect(!signed_basis_check(basis(n, 1) + basis(n, 2)), tag + "O_1 + O_2 passes the signed basis test");

    bool twist = true, adjoint = true;
    for (uint32_t a = 1; a <= n; ++a) {
      KElt x = LaurentBi::v(1) * LaurentBi::vp(1) * basis(n, a);
      for (uint32_t i = 0; i < n; ++i) twist &= bar_dual(apply_T(C, i, 1, x)) == apply_T(C, i, -1, bar_dual(x));
      twist &= bar_dual(apply_sigma(1, x)) == apply_sigma(1, bar_dual(x));
      twist &= bar_dual(LaurentBi::v(1) * x) == LaurentBi::v(-1) * bar_dual(x);
      twist &= bar_dual(LaurentBi::vp(1) * x) == LaurentBi::vp(1) * bar_dual(x);
      for (uint32_t b = 1; b <= n; ++b) {
        KElt y = basis(n, b), xa = basis(n, a);
        for (uint32_t i = 0; i < n; ++i) adjoint &= pairing(apply_T(C, i, 1, xa), y) == pairing(xa, apply_T(C, i, 1, y));
        adjoint &= pairing(apply_sigma(1, xa), y) == pairing(xa, apply_sigma(-1, y));
        adjoint &= pairing(xa, y) == pairing(y, xa).dagger();
      }
    }
    c.expect(twist, tag + "bar duality does not twist the action");
    c.expect(adjoint, tag + "pairing adjointness fails");

    // Ext groups typed from the display: C at i=j, v'^{+-1} v^-1 at i=j+-1, v^-2 at i=j.
    ExtTable t = ext_table(n);
    bool ext_ok = true;
    for (uint32_t i = 1; i <= n; ++i)
      for (uint32_t j = 1; j <= n; ++j) {
        std::map<std::pair<int64_t, int64_t>, uint32_t> e0, e1, e2;
        if (i == j) e0[{0, 0}] = 1, e2[{0, -2}] = 1;
        if (i % n == (j + 1) % n) ++e1[{1, -1}];
        if ((i + 1) % n == j % n) ++e1[{-1, -1}];
        ext_ok &= t.at(i, j, 0) == e0 && t.at(i, j, 1) == e1 && t.at(i, j, 2) == e2;
      }
    c.expect(ext_ok, tag + "Ext table differs from the display");
    row["ext_ok"] = ext_ok;
    rows.push_back(row);
  }
  (void)opt;
  r.within_budget = since(t0) < 30;
  r.pass = c.ok && r.within_budget;
  r.detail = {{"ranks", rows}, {"failures", c.failures}};
  return r;
}

CriterionResult cross_theory(const SuiteOptions&) {
  CriterionResult r{10, "cross-theory Loewy shifts", false, true, 0, 0, {}};
  Checks c;
  auto d = hodges::HodgesData::make(3, 5, {1, 2});
  auto s = hodges::structure_report(d);
  auto chi = modlie::make_chi(3, 5);
  auto ch = modlie::chain(chi, modlie::make_weight(3, 5, {1, 2}));
  const size_t scale = 25;  // p^{(n^2-n-2)/2}
  json rows = json::array();
  for (size_t i : s.present) {
    const auto& tv = s.v_layers[i];
    const auto& sl = ch.layers.at(i);
    c.expect(tv.size() == sl.size(), "V_" + std::to_string(i) + ": layer counts differ");
    for (size_t t = 0; t < std::min(tv.size(), sl.size()); ++t) {
      bool single = tv[t].size() == 1;
      c.expect(single, "V_" + std::to_string(i) + " layer " + std::to_string(t) + " is not a single simple");
      if (!single) continue;
      const auto& a = tv[t][0];
      const auto& b = sl[t];
      bool same = a.simple == b.simple && a.shift == b.shift && b.integral && b.dim % scale == 0 &&
                  b.dim / scale == s.dim_L[a.simple] && a.multiplicity == b.multiplicity;
      c.expect(same, "V_" + std::to_string(i) + " layer " + std::to_string(t) + " differs");
      rows.push_back({{"i", i},
                      {"layer", t},
                      {"t_v", {{"simple", a.simple}, {"shift", a.shift}, {"dim", s.dim_L[a.simple]}}},
                      {"sl3", {{"simple", b.simple}, {"shift", b.shift}, {"dim", b.dim}}}});
    }
  }
  r.pass = c.ok;
  r.detail = {{"layers", rows}, {"failures", c.failures}};
  return r;
}

using Runner = std::function<CriterionResult(const SuiteOptions&)>;

const std::vector<Runner>& runners() {
  static const std::vector<Runner> all{gs_reproduction, dimensions,  baby_verma_structure, projective_identity,
                                       ext_quiver,      no_cycle,    upsilon,              modular_lie,
                                       hecke,           cross_theory};
  return all;
}

}  // namespace

unsigned parallel_width() {
  if (const char* env = std::getenv("ARTIFACT_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

std::vector<CriterionResult> run_acceptance(const SuiteOptions& opt) {
  std::vector<int> ids = opt.only;
  if (ids.empty())
    for (int i = 1; i <= 10; ++i) ids.push_back(i);
  for (int id : ids)
    if (id < 1 || id > 10) throw std::invalid_argument("criterion ids run from 1 to 10");
  std::vector<CriterionResult> out(ids.size());
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t k = next++; k < ids.size(); k = next++) {
      auto t0 = Clock::now();
      try {
        out[k] = runners()[ids[k] - 1](opt);
      } catch (const std::exception& e) {
        out[k].id = ids[k];
        out[k].title = "criterion " + std::to_string(ids[k]);
        out[k].pass = false;
        out[k].detail = {{"error", e.what()}};
      }
      out[k].seconds = since(t0);
    }
  };
  unsigned width = opt.threads ? opt.threads : parallel_width();
  width = std::max(1u, std::min<unsigned>(width, static_cast<unsigned>(ids.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < width; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return out;
}

json to_json(const CriterionResult& r, bool with_timings) {
  json j{{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"within_budget", r.within_budget}, {"detail", r.detail}};
  if (r.budget > 0) j["budget_seconds"] = r.budget;
  if (with_timings) j["seconds"] = r.seconds;
  return j;
}

std::string summary_line(const CriterionResult& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2fs", r.seconds);
  std::string line = "criterion " + std::to_string(r.id) + ": " + (r.pass ? "PASS" : "FAIL") + "  " + r.title + "  (" + buf + ")";
  if (!r.pass && r.detail.contains("failures") && !r.detail["failures"].empty())
    line += "\n    " + r.detail["failures"][0].get<std::string>();
  if (!r.pass && r.detail.contains("error")) line += "\n    error: " + r.detail["error"].get<std::string>();
  return line;
}

}  // namespace suite
