// Command-line driver: every report as JSON on standard output.
#include <CLI11.hpp>
#include <cstdio>
#include <iostream>

#include "gs/engine.hpp"
#include "suite/acceptance.hpp"
#include "suite/json_out.hpp"

using suite::json;

namespace {

struct HodgesArgs {
  uint32_t n = 3, p = 5;
  std::vector<uint32_t> r;
};

void add_hodges_args(CLI::App* cmd, HodgesArgs& a) {
  cmd->add_option("--n", a.n, "rank n")->required();
  cmd->add_option("--p", a.p, "prime p")->required();
  cmd->add_option("--r", a.r, "r_1,...,r_{n-1}")->delimiter(',')->required();
}

void print(const json& doc, const std::string& kind) { std::cout << suite::emit(doc, kind); }

ktheory::Convention parse_convention(const std::string& s) {
  if (s == "lusztig") return ktheory::Convention::lusztig;
  if (s == "categorified") return ktheory::Convention::categorified;
  throw std::invalid_argument("convention must be lusztig or categorified");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kleinian singularity and McKay correspondence computations"};
  app.require_subcommand(1);

  // gs
  auto* gs_cmd = app.add_subcommand("gs", "Groebner-Shirshov completion for the Hodges relations");
  gs_cmd->require_subcommand(1);
  HodgesArgs gs_args;
  std::string gs_level = "frakT";
  uint32_t gs_cap = 0;
  auto* gs_verify = gs_cmd->add_subcommand("verify", "complete and compare with the explicit basis");
  add_hodges_args(gs_verify, gs_args);
  auto* gs_complete = gs_cmd->add_subcommand("complete", "complete the relations of one level");
  add_hodges_args(gs_complete, gs_args);
  gs_complete->add_option("--level", gs_level, "T, frakT or t");
  gs_complete->add_option("--cap", gs_cap, "weight cap (default from the data)");

  // hodges
  auto* h_cmd = app.add_subcommand("hodges", "finite-dimensional quotients of Hodges' algebra");
  h_cmd->require_subcommand(1);
  HodgesArgs h_args;
  int64_t h_lambda = 0;
  bool h_primed = false;
  auto* h_report = h_cmd->add_subcommand("report", "simples, baby Vermas, layers and the Ext quiver");
  add_hodges_args(h_report, h_args);
  auto* h_verma = h_cmd->add_subcommand("verma", "one baby Verma module");
  add_hodges_args(h_verma, h_args);
  h_verma->add_option("--lambda", h_lambda)->required();
  h_verma->add_flag("--primed", h_primed, "the primed variant");

  // nocycle
  auto* nc_cmd = app.add_subcommand("nocycle", "the no-cycle algebra and its modules");
  nc_cmd->require_subcommand(1);
  uint32_t nc_k = 3, nc_t = 1, nc_q = 3, nc_n = 2;
  size_t nc_dim = 2;
  auto* nc_alg = nc_cmd->add_subcommand("algebra", "basis, degrees and dimension");
  nc_alg->add_option("--k", nc_k)->required();
  auto* nc_str = nc_cmd->add_subcommand("strings", "string classes of length t");
  nc_str->add_option("--k", nc_k)->required();
  nc_str->add_option("--t", nc_t)->required();
  auto* nc_sweep = nc_cmd->add_subcommand("sweep", "brute-force classification at toy scale");
  nc_sweep->add_option("--k", nc_k)->required();
  nc_sweep->add_option("--q", nc_q, "field size");
  nc_sweep->add_option("--max-dim", nc_dim);
  auto* nc_ups = nc_cmd->add_subcommand("upsilon", "the skew coinvariant isomorphism");
  nc_ups->add_option("--n", nc_n)->required();
  nc_ups->add_option("--q", nc_q)->required();

  // modlie
  auto* ml_cmd = app.add_subcommand("modlie", "baby Verma modules for sl_n at a subregular character");
  ml_cmd->require_subcommand(1);
  HodgesArgs ml_args;
  uint32_t ml_k = 0, ml_alpha = 0;
  std::string ml_report = "json";
  auto* ml_verma = ml_cmd->add_subcommand("verma", "one baby Verma module at a flag");
  add_hodges_args(ml_verma, ml_args);
  ml_verma->add_option("--k", ml_k, "component index, 0 for b_+");
  ml_verma->add_option("--alpha", ml_alpha, "point on the component");
  ml_verma->add_option("--report", ml_report)->check(CLI::IsMember({"json"}));
  auto* ml_chain = ml_cmd->add_subcommand("chain", "simples and Loewy layers at b_+");
  add_hodges_args(ml_chain, ml_args);

  // ktheory
  auto* k_cmd = app.add_subcommand("ktheory", "equivariant K-theory of the Springer fibre");
  k_cmd->require_subcommand(1);
  uint32_t k_n = 3;
  std::string k_x, k_y, k_word, k_conv = "categorified", k_dir = "to_S";
  auto* k_verify = k_cmd->add_subcommand("verify", "Hecke relations, theta words and the sign discrepancy");
  k_verify->add_option("--n", k_n)->required();
  auto* k_pair = k_cmd->add_subcommand("pair", "the pairing (x|y)");
  k_pair->add_option("--n", k_n, "rank (default 3)");
  k_pair->add_option("--x", k_x)->required();
  k_pair->add_option("--y", k_y)->required();
  auto* k_apply = k_cmd->add_subcommand("apply", "act by a word in T_i^{+-1}, s^{+-1} and [scalars]");
  k_apply->add_option("--n", k_n, "rank (default 3)");
  k_apply->add_option("--word", k_word)->required();
  k_apply->add_option("--x", k_x)->required();
  k_apply->add_option("--convention", k_conv)->check(CLI::IsMember({"lusztig", "categorified"}));
  auto* k_gram = k_cmd->add_subcommand("gram", "Gram matrix and the printed table");
  k_gram->add_option("--n", k_n)->required();
  auto* k_ext = k_cmd->add_subcommand("ext", "Ext groups between simples");
  k_ext->add_option("--n", k_n)->required();
  auto* k_signed = k_cmd->add_subcommand("signed", "signed basis test");
  k_signed->add_option("--n", k_n, "rank (default 3)");
  k_signed->add_option("--x", k_x)->required();
  auto* k_sb = k_cmd->add_subcommand("sbasis", "change between O_k and [S_i] coordinates");
  k_sb->add_option("--n", k_n, "rank (default 3)");
  k_sb->add_option("--x", k_x)->required();
  k_sb->add_option("--direction", k_dir)->check(CLI::IsMember({"to_S", "from_S"}));

  // acceptance
  auto* acc = app.add_subcommand("acceptance", "run the acceptance criteria");
  bool acc_quick = false, acc_timings = false;
  std::vector<int> acc_only;
  acc->add_flag("--quick", acc_quick, "fewer extra samples");
  acc->add_flag("--timings", acc_timings, "include wall-clock seconds (breaks byte-identical output)");
  acc->add_option("--only", acc_only, "criterion ids")->delimiter(',');

  CLI11_PARSE(app, argc, argv);

  try {
    if (gs_verify->parsed()) {
      auto d = hodges::HodgesData::make(gs_args.n, gs_args.p, gs_args.r);
      json j = suite::to_json(hodges::verify_shirshov(d));
      j["data"] = suite::to_json(d);
      print(j, "gs.verify");
      return 0;
    }
    if (gs_complete->parsed()) {
      auto d = hodges::HodgesData::make(gs_args.n, gs_args.p, gs_args.r);
      auto level = hodges::parse_level(gs_level);
      uint32_t cap = gs_cap ? gs_cap : hodges::default_weight_cap(d);
      auto pair = gs::complete(hodges::relation_pair(d, level), cap);
      json j{{"data", suite::to_json(d)}, {"level", gs_level}, {"weight_cap", cap}, {"rules", gs::to_strings(pair)}};
      try {
        j["dim"] = gs::standard_monomials(pair, gs::Scope::of_ring(), 100000).size();
      } catch (const gs::CapExceeded&) {
        j["dim"] = nullptr;  // infinite, or beyond the listing cap
      }
      print(j, "gs.complete");
      return 0;
    }
    if (h_report->parsed()) {
      auto d = hodges::HodgesData::make(h_args.n, h_args.p, h_args.r);
      print(suite::to_json(hodges::structure_report(d)), "hodges.report");
      return 0;
    }
    if (h_verma->parsed()) {
      auto d = hodges::HodgesData::make(h_args.n, h_args.p, h_args.r);
      auto v = hodges::baby_verma(d, h_lambda, h_primed ? hodges::Variant::primed : hodges::Variant::plain);
      json j{{"data", suite::to_json(d)}, {"lambda", h_lambda}, {"primed", h_primed}, {"zero", v.zero}};
      if (!v.zero) {
        auto s = hodges::structure_report(d);
        std::vector<fdrep::FDModule> simples;
        for (size_t i : s.present) simples.push_back(s.L[i]);
        json layers = json::array();
        for (const auto& l : fdrep::loewy_series(v.module, simples))
          for (const auto& part : l.parts)
            layers.push_back({{"simple", s.present[part.simple]},
                              {"multiplicity", part.multiplicity},
                              {"degree_shift", part.shift ? json(*part.shift) : json(nullptr)},
                              {"dim", l.dim}});
        j["dim"] = v.module.dim;
        j["layers"] = layers;
        json matches = json::array();
        if (!h_primed)
          for (auto [i, sh] : hodges::verma_matches(s, h_lambda, 6)) matches.push_back({{"i", i}, {"j", sh}});
        j["matches"] = matches;
      }
      print(j, "hodges.verma");
      return 0;
    }
    if (nc_alg->parsed()) {
      auto alg = nocycle::build_nocycle(nc_k, 2);
      print({{"k", nc_k}, {"dim", alg.dim()}, {"basis", alg.names}, {"degree", alg.degree},
             {"associative", nocycle::check_associativity(alg)}},
            "nocycle.algebra");
      return 0;
    }
    if (nc_str->parsed()) {
      json words = json::array();
      for (const auto& w : nocycle::enumerate_strings(nc_k, nc_t)) words.push_back(nocycle::to_string(w));
      print({{"k", nc_k}, {"t", nc_t}, {"count", words.size()}, {"words", words}}, "nocycle.strings");
      return 0;
    }
    if (nc_sweep->parsed()) {
      json j = suite::to_json(nocycle::toy_sweep(nocycle::build_nocycle(nc_k, nc_q), nc_dim));
      j["k"] = nc_k;
      j["q"] = nc_q;
      j["max_dim"] = nc_dim;
      print(j, "nocycle.sweep");
      return 0;
    }
    if (nc_ups->parsed()) {
      print(suite::to_json(nocycle::coinvariant_upsilon(nc_n, nc_q)), "nocycle.upsilon");
      return 0;
    }
    if (ml_verma->parsed() || ml_chain->parsed()) {
      auto chi = modlie::make_chi(ml_args.n, ml_args.p);
      auto w = modlie::make_weight(ml_args.n, ml_args.p, ml_args.r);
      auto c = modlie::chain(chi, w);
      if (ml_chain->parsed()) {
        print(suite::to_json(c), "modlie.chain");
        return 0;
      }
      json j = suite::to_json(modlie::verma_report(c, modlie::flag_borel(chi, ml_k, ml_alpha)));
      j["weight"] = w.label();
      j["dim_L"] = c.dim_L;
      print(j, "modlie.verma");
      return 0;
    }
    if (k_verify->parsed()) {
      print(suite::to_json(ktheory::verify_algebra_relations(k_n)), "ktheory.verify");
      return 0;
    }
    if (k_pair->parsed()) {
      auto x = ktheory::parse_kelt(k_x, k_n), y = ktheory::parse_kelt(k_y, k_n);
      print({{"n", k_n}, {"x", suite::to_json(x)}, {"y", suite::to_json(y)}, {"pairing", ktheory::pairing(x, y).to_string()}},
            "ktheory.pair");
      return 0;
    }
    if (k_apply->parsed()) {
      auto conv = parse_convention(k_conv);
      auto w = ktheory::parse_word(k_word, k_n, conv);
      auto x = ktheory::parse_kelt(k_x, k_n);
      print({{"n", k_n},
             {"convention", k_conv},
             {"word", ktheory::to_string(w, k_n)},
             {"x", suite::to_json(x)},
             {"result", suite::to_json(ktheory::hecke_apply(w, x))}},
            "ktheory.apply");
      return 0;
    }
    if (k_gram->parsed()) {
      auto g = ktheory::gram(k_n), p = ktheory::printed_gram(k_n);
      print({{"n", k_n}, {"gram", suite::gram_json(g)}, {"printed_table", suite::gram_json(p)}, {"agree", g == p}},
            "ktheory.gram");
      return 0;
    }
    if (k_ext->parsed()) {
      print(suite::to_json(ktheory::ext_table(k_n)), "ktheory.ext");
      return 0;
    }
    if (k_signed->parsed()) {
      auto x = ktheory::parse_kelt(k_x, k_n);
      print({{"n", k_n},
             {"x", suite::to_json(x)},
             {"bar_fixed", ktheory::bar_dual(x) == x},
             {"self_pairing", ktheory::pairing(x, x).to_string()},
             {"signed_basis", ktheory::signed_basis_check(x)}},
            "ktheory.signed");
      return 0;
    }
    if (k_sb->parsed()) {
      auto x = ktheory::parse_kelt(k_x, k_n);
      auto dir = k_dir == "to_S" ? ktheory::Direction::to_S : ktheory::Direction::from_S;
      // for to_S the result's coordinates refer to [S_1..S_n], not O_k
      json out = suite::to_json(ktheory::sbasis_change(x, dir));
      print({{"n", k_n}, {"direction", k_dir}, {"x", suite::to_json(x)}, {"result", out}}, "ktheory.sbasis");
      return 0;
    }
    if (acc->parsed()) {
      suite::SuiteOptions opt;
      opt.quick = acc_quick;
      opt.only = acc_only;
      auto results = suite::run_acceptance(opt);
      json rows = json::array();
      size_t passed = 0;
      for (const auto& r : results) {
        rows.push_back(suite::to_json(r, acc_timings));
        passed += r.pass;
        std::cerr << suite::summary_line(r) << "\n";
      }
      print({{"quick", acc_quick}, {"criteria", rows}, {"passed", passed}, {"total", results.size()}}, "acceptance");
      return passed == results.size() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
