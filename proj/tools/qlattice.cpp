// qlattice: command-line front end for the subspace-lattice toolkit.
//
// Commands: gaussian, build, search, verify, conjecture, push, lym,
// patterns-check. All reports are JSON on stdout (--out FILE to duplicate to
// a file); numeric values that may exceed machine range are strings, and
// rationals are "p/q" strings. Exit codes: 0 success, 1 a verification
// clause failed, 2 usage or domain error, 3 resource limit (lattice cap).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qlattice/extremal.hpp"
#include "qlattice/normalize.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace qlat;

namespace {

std::string default_cache_dir() {
  if (const char* env = std::getenv("QLATTICE_CACHE")) return env;
  return "qlattice-cache";
}

fs::path cache_path(const std::string& dir, int n, int q) {
  return fs::path(dir) / ("lnq1_" + std::to_string(n) + "_" + std::to_string(q) +
                          ".txt");
}

// Load from the cache when present, otherwise build and populate it.
LinearLattice get_lattice(int n, int q, const std::string& cache_dir) {
  fs::path path = cache_path(cache_dir, n, q);
  if (fs::exists(path)) return load_lattice_file(path.string());
  LinearLattice l(n, q);
  std::error_code ec;
  fs::create_directories(fs::path(cache_dir), ec);
  if (!ec) save_lattice_file(l, path.string());
  return l;
}

std::vector<PatternSpec> parse_patterns(const std::vector<std::string>& names) {
  std::vector<PatternSpec> out;
  for (const auto& n : names) out.push_back(PatternSpec::parse(n));
  if (out.empty()) throw bad_pattern("no patterns given");
  return out;
}

void emit(const json& j, const std::string& out_file) {
  std::string text = j.dump(2);
  std::cout << text << "\n";
  if (!out_file.empty()) {
    std::ofstream os(out_file, std::ios::binary);
    if (!os) throw io_error("cannot open " + out_file + " for writing");
    os << text << "\n";
  }
}

json certificate_json(const Certificate& c) {
  json w = json::array();
  for (const auto& ids : c.witnesses) w.push_back(ids);
  return json{{"optimum", c.optimum},
              {"exhaustive", c.exhaustive},
              {"nodes", c.nodes},
              {"bound", c.bound},
              {"witnesses", w}};
}

json report_json(const VerifyReport& r) {
  json clauses = json::array();
  for (const auto& c : r.clauses)
    clauses.push_back({{"name", c.name},
                       {"expected", c.expected},
                       {"got", c.got},
                       {"pass", c.pass}});
  json notes = json::object();
  for (const auto& [k, v] : r.notes) notes[k] = v;
  json j{{"v", 1},          {"theorem", r.title},
         {"n", r.n},        {"q", r.q},
         {"clauses", clauses}, {"notes", notes},
         {"pass", r.pass},  {"budget_exceeded", r.budget_exceeded}};
  if (r.title == "B") {
    j["u"] = r.u;
    j["v_fork"] = r.v;
  }
  return j;
}

struct CommonOpts {
  long long budget = 400'000'000;
  int workers = 1;
  std::uint64_t seed = 0;
  std::string cache_dir = default_cache_dir();
  std::string out_file;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--budget", o.budget, "total search node budget");
  cmd->add_option("--workers", o.workers, "worker threads for search");
  cmd->add_option("--seed", o.seed, "seed for randomized commands");
  cmd->add_option("--cache", o.cache_dir, "lattice cache directory");
  cmd->add_option("--out", o.out_file, "also write the JSON report here");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for forbidden subposets in subspace lattices"};
  app.require_subcommand(1);

  // gaussian <n> <k> <q>
  int g_n = 0, g_k = 0, g_q = 0;
  auto* cmd_gaussian = app.add_subcommand("gaussian", "print a Gaussian coefficient");
  cmd_gaussian->add_option("n", g_n)->required();
  cmd_gaussian->add_option("k", g_k)->required();
  cmd_gaussian->add_option("q", g_q)->required();

  // build <n> <q>
  int b_n = 0, b_q = 0;
  CommonOpts b_opts;
  auto* cmd_build = app.add_subcommand("build", "build a lattice and cache it");
  cmd_build->add_option("n", b_n)->required();
  cmd_build->add_option("q", b_q)->required();
  add_common(cmd_build, b_opts);

  // search
  int s_n = 0, s_q = 0;
  std::vector<std::string> s_patterns;
  bool s_proper = false;
  std::string s_levels;
  CommonOpts s_opts;
  auto* cmd_search = app.add_subcommand("search", "exact extremal search");
  cmd_search->add_option("--n", s_n)->required();
  cmd_search->add_option("--q", s_q)->required();
  cmd_search->add_option("--patterns", s_patterns, "comma separated pattern names")
      ->required()
      ->delimiter(',');
  cmd_search->add_flag("--proper", s_proper, "exclude {0} and the full space");
  cmd_search->add_option("--levels", s_levels, "restrict to levels a..b");
  bool s_enumerate = false;
  cmd_search->add_flag("--enumerate", s_enumerate, "collect every optimum family");
  add_common(cmd_search, s_opts);

  // verify <A|B|C> <n> <q> [u v]
  std::string v_theorem;
  int v_n = 0, v_q = 0, v_u = 2, v_v = 2;
  CommonOpts v_opts;
  auto* cmd_verify = app.add_subcommand("verify", "run a theorem verifier");
  cmd_verify->add_option("theorem", v_theorem)->required()
      ->check(CLI::IsMember({"A", "B", "C"}));
  cmd_verify->add_option("n", v_n)->required();
  cmd_verify->add_option("q", v_q)->required();
  cmd_verify->add_option("u", v_u, "broom parameter (theorem B)");
  cmd_verify->add_option("v", v_v, "fork parameter (theorem B)");
  add_common(cmd_verify, v_opts);

  // conjecture <n> <q> <k>
  int c_n = 0, c_q = 0, c_k = 0;
  CommonOpts c_opts;
  auto* cmd_conj = app.add_subcommand("conjecture", "compare ex for (Y_k, Y_k') and for chains");
  cmd_conj->add_option("n", c_n)->required();
  cmd_conj->add_option("q", c_q)->required();
  cmd_conj->add_option("k", c_k)->required();
  add_common(cmd_conj, c_opts);

  // push
  std::string p_family, p_direction = "down";
  int p_i = 0, p_u = 2, p_v = 2;
  CommonOpts p_opts;
  auto* cmd_push = app.add_subcommand("push", "run one push step on a family file");
  cmd_push->add_option("--family", p_family, "family file")->required();
  cmd_push->add_option("--direction", p_direction)
      ->check(CLI::IsMember({"down", "up", "shadow"}));
  cmd_push->add_option("--i", p_i, "level to replace")->required();
  cmd_push->add_option("--u", p_u, "broom parameter");
  cmd_push->add_option("--v", p_v, "fork parameter");
  add_common(cmd_push, p_opts);

  // lym
  std::string l_family, l_mode = "antichain";
  CommonOpts l_opts;
  auto* cmd_lym = app.add_subcommand("lym", "LYM sums for a family file");
  cmd_lym->add_option("--family", l_family)->required();
  cmd_lym->add_option("--mode", l_mode)->check(CLI::IsMember({"antichain", "ytype"}));
  add_common(cmd_lym, l_opts);

  // patterns-check
  std::string pc_family;
  std::vector<std::string> pc_patterns;
  CommonOpts pc_opts;
  auto* cmd_pc = app.add_subcommand("patterns-check",
                                    "which patterns does a family contain?");
  cmd_pc->add_option("--family", pc_family)->required();
  cmd_pc->add_option("--patterns", pc_patterns)->required()->delimiter(',');
  add_common(cmd_pc, pc_opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_gaussian->parsed()) {
      std::cout << gaussian(g_n, g_k, g_q).get_str() << "\n";
      return 0;
    }

    if (cmd_build->parsed()) {
      if (b_n < 1) throw domain_error("build: n must be >= 1");
      LinearLattice l(b_n, b_q);
      std::error_code ec;
      fs::create_directories(fs::path(b_opts.cache_dir), ec);
      save_lattice_file(l, cache_path(b_opts.cache_dir, b_n, b_q).string());
      for (int k = 0; k <= l.rank(); ++k)
        std::cout << (k ? " " : "") << l.rank_number(k);
      std::cout << "\n";
      return 0;
    }

    if (cmd_search->parsed()) {
      LinearLattice l = get_lattice(s_n, s_q, s_opts.cache_dir);
      SearchProblem prob(l, parse_patterns(s_patterns));
      prob.proper = s_proper;
      prob.node_budget = s_opts.budget;
      prob.workers = s_opts.workers;
      std::string filter = s_proper ? "proper" : "all";
      json levels = nullptr;
      if (!s_levels.empty()) {
        auto dots = s_levels.find("..");
        if (dots == std::string::npos)
          throw domain_error("--levels expects a..b");
        prob.level_window = {std::stoi(s_levels.substr(0, dots)),
                             std::stoi(s_levels.substr(dots + 2))};
        levels = json::array({prob.level_window->first, prob.level_window->second});
      }
      Certificate cert = s_enumerate ? enumerate_optima(prob) : exact_max(prob);
      json patterns = json::array();
      for (const auto& p : prob.patterns) patterns.push_back(p.name());
      json j = certificate_json(cert);
      j["v"] = 1;
      j["problem"] = {{"n", s_n},
                      {"q", s_q},
                      {"patterns", patterns},
                      {"filter", filter},
                      {"levels", levels},
                      {"seed", s_opts.seed}};
      emit(j, s_opts.out_file);
      return 0;
    }

    if (cmd_verify->parsed()) {
      SearchTuning tuning{v_opts.budget, v_opts.workers};
      VerifyReport rep;
      if (v_theorem == "A")
        rep = verify_theorem_A(v_n, v_q, tuning);
      else if (v_theorem == "B")
        rep = verify_theorem_B(v_n, v_q, v_u, v_v, tuning);
      else
        rep = verify_theorem_C(v_n, v_q, tuning);
      emit(report_json(rep), v_opts.out_file);
      return rep.pass ? 0 : 1;
    }

    if (cmd_conj->parsed()) {
      SearchTuning tuning{c_opts.budget, c_opts.workers};
      ConjectureReport rep = conjecture_check(c_n, c_q, c_k, tuning);
      json j{{"v", 1},
             {"n", rep.n},
             {"q", rep.q},
             {"k", rep.k},
             {"yk_side", certificate_json(rep.yk_side)},
             {"chain_side", certificate_json(rep.chain_side)},
             {"equal", rep.equal},
             {"exhaustive", rep.exhaustive}};
      emit(j, c_opts.out_file);
      return 0;
    }

    if (cmd_push->parsed()) {
      std::ifstream is(p_family);
      if (!is) throw io_error("cannot open " + p_family);
      std::string magic;
      int fn = 0, fq = 0;
      is >> magic >> fn >> fq;
      is.seekg(0);
      LinearLattice l = get_lattice(fn, fq, p_opts.cache_dir);
      Family fam = load_family(l, is);
      PushReport rep = p_direction == "down" ? pushdown_matched(fam, p_i, p_u, p_v)
                       : p_direction == "up" ? pushup_matched(fam, p_i, p_u, p_v)
                                             : push_top_to_shadow(fam, p_i, p_u);
      json matching = json::array();
      for (auto [a, b] : rep.matching) matching.push_back(json::array({a, b}));
      json j{{"v", 1},
             {"op", p_direction},
             {"n", fn},
             {"q", fq},
             {"level", rep.level},
             {"u", p_u},
             {"v_fork", p_v},
             {"replaced", rep.replaced},
             {"alpha", rat_string(rep.alpha)},
             {"bound_applicable", rep.bound_applicable},
             {"size_bound_ok", rep.size_bound_ok},
             {"input", rep.input.members()},
             {"output", rep.output.members()},
             {"input_size", rep.input.size()},
             {"output_size", rep.output.size()},
             {"matching", matching}};
      emit(j, p_opts.out_file);
      return 0;
    }

    if (cmd_lym->parsed()) {
      std::ifstream is(l_family);
      if (!is) throw io_error("cannot open " + l_family);
      std::string magic;
      int fn = 0, fq = 0;
      is >> magic >> fn >> fq;
      is.seekg(0);
      LinearLattice l = get_lattice(fn, fq, l_opts.cache_dir);
      Family fam = load_family(l, is);
      json j{{"v", 1}, {"mode", l_mode}, {"n", fn}, {"q", fq},
             {"size", fam.size()}};
      if (l_mode == "antichain") {
        Rat sum = lym_sum(fam);
        bool anti = !contains_pattern(fam, PatternSpec::chain(2));
        j["sum"] = rat_string(sum);
        j["is_antichain"] = anti;
        j["lym_holds"] = sum <= 1;
      } else {
        LymTypeReport rep = lym_type_check(l, fam);
        j["sum"] = rat_string(rep.sum);
        j["holds"] = rep.holds;
        j["equality_structure"] = rep.equality_structure;
      }
      emit(j, l_opts.out_file);
      return 0;
    }

    if (cmd_pc->parsed()) {
      std::ifstream is(pc_family);
      if (!is) throw io_error("cannot open " + pc_family);
      std::string magic;
      int fn = 0, fq = 0;
      is >> magic >> fn >> fq;
      is.seekg(0);
      LinearLattice l = get_lattice(fn, fq, pc_opts.cache_dir);
      Family fam = load_family(l, is);
      auto pats = parse_patterns(pc_patterns);
      json results = json::object();
      bool all_free = true;
      for (const auto& p : pats) {
        bool has = contains_pattern(fam, p);
        results[p.name()] = has;
        all_free = all_free && !has;
      }
      json j{{"v", 1},         {"n", fn},
             {"q", fq},        {"family_size", fam.size()},
             {"contains", results}, {"free_of_all", all_free}};
      emit(j, pc_opts.out_file);
      return 0;
    }
  } catch (const too_large& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
