#include "lmflat/cli.hpp"

#include "lmflat/alcove.hpp"
#include "lmflat/groebner.hpp"
#include "lmflat/localmodel.hpp"
#include "lmflat/suite.hpp"
#include "lmflat/tableau.hpp"
#include "lmflat/weylc.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

namespace lmflat::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Common {
  std::string config;
  std::string format = "text";
  std::string output;
  bool timings = false;
  int jobs = 1;
};

struct IdealSelect {
  int ring_R = 0;
  int rank = 0;
  int index = -1;
  bool grassmannian = false;
  bool implied = false;
  std::string fibre = "variable";
  std::uint32_t prime = local::kDefaultPrime;
  std::string order = "degrevlex";
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json envelope(const std::string& command, Json config, Json result) {
  Json j;
  j["schema"] = 1;
  j["command"] = command;
  j["config"] = std::move(config);
  j["result"] = std::move(result);
  return j;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = std::stoi(item, &used);
    if (used != item.size()) throw UsageError("bad integer list '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? sep : "") + std::to_string(v[k]);
  return s;
}

// key=value lines; '#' starts a comment.
std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  auto trim = [](std::string s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError("config line without '=': " + line);
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

bool has_flag(const std::vector<std::string>& args, const std::string& flag) {
  for (const auto& a : args)
    if (a == flag || a.starts_with(flag + "=")) return true;
  return false;
}

// Config values become flags unless the command line already sets them.
void apply_config(CLI::App& app, std::vector<std::string>& args) {
  std::string path;
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (args[k] == "--config" && k + 1 < args.size()) path = args[k + 1];
    else if (args[k].starts_with("--config=")) path = args[k].substr(9);
  }
  if (path.empty()) return;
  CLI::App* sub = nullptr;
  for (const auto& a : args)
    if (!a.starts_with("-"))
      if ((sub = app.get_subcommand_no_throw(a)) != nullptr) break;
  for (const auto& [key, value] : read_config(path)) {
    std::string flag = "--" + key;
    if (has_flag(args, flag)) continue;
    const CLI::Option* opt = sub ? sub->get_option_no_throw(flag) : nullptr;
    if (!opt) opt = app.get_option_no_throw(flag);
    if (!opt) throw UsageError("unknown config key '" + key + "'");
    args.push_back(flag);
    if (opt->get_type_size() != 0) args.push_back(value);
  }
}

IdealSelect add_ideal_options(CLI::App* sub, IdealSelect& s) {
  sub->add_option("--ring-R", s.ring_R, "Ring R of the 2m x 2m matrix C");
  sub->add_option("--rank", s.rank, "Rank r of a chart");
  sub->add_option("--index", s.index, "Chart index i, 1 <= i <= r-1");
  sub->add_flag("--grassmannian", s.grassmannian, "Lagrangian Grassmannian chart of rank r");
  sub->add_option("--fibre", s.fibre, "variable | special | generic")
      ->check(CLI::IsMember({"variable", "special", "generic"}));
  sub->add_option("--prime", s.prime, "Characteristic");
  sub->add_option("--order", s.order, "degrevlex | deglex | lex");
  return s;
}

local::IdealPresentation select_ideal(const IdealSelect& s) {
  int chosen = (s.ring_R > 0) + (s.index >= 0) + s.grassmannian;
  if (chosen != 1) throw UsageError("choose exactly one of --ring-R, --index (with --rank), --grassmannian");
  local::IdealPresentation P;
  if (s.ring_R > 0) {
    P = local::ring_R(s.ring_R, s.prime);
  } else if (s.grassmannian) {
    if (s.rank < 1) throw UsageError("--grassmannian needs --rank");
    P = local::grassmannian_chart(s.rank, 0, s.prime);
  } else {
    if (s.rank < 2) throw UsageError("a chart needs --rank >= 2");
    P = s.implied ? local::redundant_equations(s.rank, s.index, s.prime)
                  : local::chart_ideal(s.rank, s.index, local::parse_fibre(s.fibre), s.prime);
  }
  auto order = poly::parse_order(s.order);
  if (order != P.ring->order()) {
    auto R = poly::make_ring(P.ring->names(), s.prime, order);
    for (auto& g : P.generators) g = g.reinterpret(R);
    P.ring = R;
  }
  return P;
}

Json ideal_config(const IdealSelect& s) {
  Json c;
  if (s.ring_R > 0) c["ring_R"] = s.ring_R;
  if (s.rank > 0) c["rank"] = s.rank;
  if (s.index >= 0) c["index"] = s.index;
  if (s.grassmannian) c["grassmannian"] = true;
  if (s.index >= 0) c["fibre"] = s.fibre;
  if (s.implied) c["implied"] = true;
  c["prime"] = s.prime;
  c["order"] = s.order;
  return c;
}

// Help of the subcommand that was named, else of the whole tool.
std::string usage_of(const CLI::App& app) {
  auto subs = app.get_subcommands();
  return subs.empty() ? app.help() : subs.back()->help();
}

int cmd_weyl(const Common& c, int rank, const std::string& length_of, const std::string& word_of,
             const std::vector<std::string>& bruhat, const std::string& orbit, std::ostream& out) {
  Json result;
  std::ostringstream text;
  int queries = 0;
  if (!length_of.empty()) {
    auto w = weyl::parse_element(length_of, rank);
    int l = weyl::length(w);
    result["length"] = {{"element", w.to_json()}, {"value", l}};
    text << l << "\n";
    ++queries;
  }
  if (!word_of.empty()) {
    auto w = weyl::parse_element(word_of, rank);
    auto rw = weyl::reduced_word(w);
    result["reduced_word"] = {{"element", w.to_json()}, {"letters", rw.letters}, {"remainder", rw.remainder.to_json()}};
    std::string s;
    for (int i : rw.letters) s += (s.empty() ? "s" : " s") + std::to_string(i);
    text << (s.empty() ? "(empty)" : s) << " | " << rw.remainder.to_string() << "\n";
    ++queries;
  }
  if (!bruhat.empty()) {
    auto u = weyl::parse_element(bruhat.at(0), rank);
    auto w = weyl::parse_element(bruhat.at(1), rank);
    bool leq = weyl::bruhat_leq(u, w);
    result["bruhat_leq"] = {{"u", u.to_json()}, {"w", w.to_json()}, {"value", leq}};
    text << (leq ? "true" : "false") << "\n";
    ++queries;
  }
  if (!orbit.empty()) {
    auto mu = parse_int_list(orbit);
    if (static_cast<int>(mu.size()) != 2 * rank) throw UsageError("--orbit needs 2r entries");
    auto orb = weyl::finite_orbit(mu);
    result["orbit"] = orb;
    for (const auto& v : orb) text << join(v) << "\n";
    ++queries;
  }
  if (queries == 0) throw UsageError("weyl needs one of --length-of, --reduced-word, --bruhat, --orbit");
  if (c.format == "json") out << envelope("weyl", {{"rank", rank}}, result).dump(2) << "\n";
  else out << text.str();
  return kExitOk;
}

int cmd_alcoves(const Common& c, int rank, const std::string& list, std::ostream& out) {
  auto adm = alcove::enumerate_admissible(rank);
  auto perm = alcove::enumerate_permissible(rank);
  auto ext = alcove::extreme_alcoves(rank);
  std::set<alcove::Alcove> image;
  bool ok = true;
  for (const auto& w : adm) {
    try {
      image.insert(alcove::alcove_of(w));
    } catch (const std::domain_error&) {
      ok = false;
    }
  }
  ok = ok && image == std::set<alcove::Alcove>(perm.begin(), perm.end());
  Json result;
  result["admissible"] = adm.size();
  result["permissible"] = perm.size();
  result["extreme"] = ext.size();
  result["equal"] = ok;
  std::ostringstream text;
  text << "admissible " << adm.size() << "\npermissible " << perm.size() << "\nextreme " << ext.size()
       << "\nequal " << (ok ? "yes" : "no") << "\n";
  Json items = Json::array();
  if (list == "admissible") {
    for (const auto& w : adm) {
      items.emplace_back(w.to_json());
      text << w.to_string() << "\n";
    }
  } else if (list == "permissible" || list == "extreme") {
    for (const auto& a : list == "extreme" ? ext : perm) {
      items.emplace_back(a.to_json());
      text << a.to_string() << "\n";
    }
  }
  if (list != "none") result["items"] = std::move(items);
  if (c.format == "json") out << envelope("alcoves", {{"rank", rank}, {"list", list}}, result).dump(2) << "\n";
  else out << text.str();
  return ok ? kExitOk : kExitFailure;
}

int cmd_ideal(const Common& c, const IdealSelect& s, std::ostream& out) {
  auto P = select_ideal(s);
  // Repeated generators (up to a scalar) are printed once, with all notes.
  std::vector<std::pair<poly::Polynomial, std::vector<std::string>>> distinct;
  for (std::size_t k = 0; k < P.generators.size(); ++k) {
    auto m = P.generators[k].monic();
    auto it = std::find_if(distinct.begin(), distinct.end(),
                           [&](const auto& e) { return e.first.monic() == m; });
    if (it == distinct.end()) distinct.push_back({P.generators[k], {P.notes[k]}});
    else it->second.push_back(P.notes[k]);
  }
  if (c.format == "json") {
    Json gens = Json::array();
    for (const auto& [g, notes] : distinct)
      gens.push_back({{"text", g.to_text()}, {"terms", g.to_json()}, {"notes", notes}});
    Json result;
    result["name"] = P.name;
    result["variables"] = P.ring->names();
    result["generators"] = std::move(gens);
    result["entries"] = P.generators.size();
    out << envelope("ideal", ideal_config(s), result).dump(2) << "\n";
  } else {
    out << "# " << P.name << "\n# variables:";
    for (const auto& v : P.ring->names()) out << ' ' << v;
    out << "\n";
    for (const auto& [g, notes] : distinct) {
      out << "# ";
      for (std::size_t k = 0; k < notes.size(); ++k) out << (k ? ", " : "") << notes[k];
      out << "\n" << g.to_text() << "\n";
    }
  }
  return kExitOk;
}

int cmd_hilbert(const Common& c, const IdealSelect& s, unsigned max_degree, bool brute, std::ostream& out) {
  auto P = select_ideal(s);
  auto G = poly::buchberger(P.ring, P.generators);
  Json values = Json::array();
  std::ostringstream text;
  text << "# " << P.name << "\n";
  for (unsigned d = 0; d <= max_degree; ++d) {
    std::size_t h = poly::hilbert_function(G, d);
    Json row{{"d", d}, {"hilbert", h}};
    text << d << "\t" << h;
    if (brute) {
      std::size_t b = poly::brute_force_degree_piece(P.ring, P.generators, d);
      row["brute_force"] = b;
      text << "\t" << b;
    }
    text << "\n";
    values.push_back(std::move(row));
  }
  int dim = poly::krull_dimension(G);
  text << "dimension " << dim << "\n";
  if (c.format == "json") {
    Json result{{"name", P.name}, {"values", values}, {"dimension", dim}, {"basis_size", G.basis().size()}};
    Json cfg = ideal_config(s);
    cfg["max_degree"] = max_degree;
    out << envelope("hilbert", cfg, result).dump(2) << "\n";
  } else {
    out << text.str();
  }
  return kExitOk;
}

int cmd_tableaux(const Common& c, int rank, int size, unsigned max_degree, int list_degree, std::ostream& out) {
  Json result;
  std::ostringstream text;
  if (size > 0) {
    Json minors = Json::array();
    for (const auto& P : tableau::enumerate_doubly_admissible(rank, size)) {
      minors.push_back(P.to_json());
      text << P.to_string() << "\n";
    }
    result["size"] = size;
    result["minors"] = std::move(minors);
  }
  tableau::MinorPoset poset(rank);
  if (list_degree >= 0) {
    Json items = Json::array();
    for (const auto& chain : poset.tableaux(static_cast<unsigned>(list_degree))) {
      std::string s;
      for (std::size_t a : chain) s += poset.minors()[a].to_string();
      text << (s.empty() ? "()" : s) << "\n";
      items.push_back(s);
    }
    result["degree"] = list_degree;
    result["tableaux"] = std::move(items);
  }
  if (size <= 0 && list_degree < 0) {
    std::vector<std::uint64_t> counts;
    for (unsigned d = 0; d <= max_degree; ++d) {
      counts.push_back(poset.count(d));
      text << d << "\t" << counts.back() << "\n";
    }
    result["minors"] = poset.minors().size();
    result["counts"] = counts;
  }
  if (c.format == "json") out << envelope("tableaux", {{"rank", rank}, {"max_degree", max_degree}}, result).dump(2) << "\n";
  else out << text.str();
  return kExitOk;
}

int cmd_chart(const Common& c, int rank, const std::string& x0, int index, unsigned max_degree, std::uint32_t prime,
              std::ostream& out) {
  std::vector<alcove::Alcove> targets;
  auto all = alcove::extreme_alcoves(rank);
  if (x0.empty()) {
    targets = all;
  } else {
    auto x = parse_int_list(x0);
    for (const auto& a : all)
      if (a.kr_vector(0) == x) targets.push_back(a);
    if (targets.empty()) throw UsageError("x0 = (" + x0 + ") is not an extreme alcove");
  }
  bool ok = true;
  Json reports = Json::array();
  std::ostringstream text;
  for (const auto& a : targets) {
    auto rep = local::extreme_chart(rank, a, prime);
    ok = ok && rep.passed();
    reports.push_back(rep.to_json());
    text << "x0=(" << join(rep.x0) << ") I={" << join(rep.I) << "} J={" << join(rep.J)
         << "} free_orbits=" << rep.free_orbits << " pairing=" << (rep.pairing_lemma ? "yes" : "no")
         << " identities=" << (rep.index_identities ? "yes" : "no")
         << " substitution=" << (rep.substitution_zero ? "yes" : "no") << "\n";
  }
  Json result;
  result["extreme"] = std::move(reports);
  if (index >= 0) {
    auto fr = local::fibre_report(rank, index, max_degree, prime);
    ok = ok && fr.dimensions_agree();
    result["fibre"] = fr.to_json();
    text << "fibre i=" << index << " dim_special=" << fr.dim_special << " dim_generic=" << fr.dim_generic
         << " affine_factor=" << fr.layout.affine_factor() << " block_dim=" << fr.block_dim_special << "/"
         << fr.block_dim_generic << "\n";
  }
  if (c.format == "json") out << envelope("chart", {{"rank", rank}, {"prime", prime}}, result).dump(2) << "\n";
  else out << text.str();
  return ok ? kExitOk : kExitFailure;
}

int cmd_verify(const Common& c, const suite::VerifyConfig& cfg, const std::string& corrupt, std::ostream& out) {
  auto results = suite::run_jobs(suite::verify_plan(cfg), c.jobs, corrupt);
  bool ok = true;
  for (const auto& r : results) ok = ok && r.pass;
  if (c.format == "json") {
    Json j;
    j["schema"] = 1;
    j["command"] = "verify";
    j["config"] = {{"rank", cfg.rank}, {"max_degree", cfg.max_degree}, {"primes", cfg.primes},
                   {"trials", cfg.trials},  {"seed", cfg.seed},             {"radius", cfg.radius}};
    Json checks = Json::array();
    for (const auto& r : results) checks.push_back(r.to_json(c.timings));
    j["checks"] = std::move(checks);
    j["verdict"] = ok ? "pass" : "fail";
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      out << (r.pass ? "PASS  " : "FAIL  ") << r.name << "  [" << r.anchor << "]";
      if (c.timings) out << "  " << static_cast<long long>(r.ms) << " ms";
      out << "\n";
      if (!r.pass) out << "      witness: " << r.witness.dump() << "\n";
    }
    out << "verdict: " << (ok ? "pass" : "fail") << "\n";
  }
  return ok ? kExitOk : kExitFailure;
}

} // namespace

int run(const std::vector<std::string>& args_in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verification toolkit for symplectic local models at small rank", "lmflat"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--config", common.config, "key=value file providing defaults; flags win");
  app.add_option("--format", common.format, "text | json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--output", common.output, "Write to this file instead of standard output");
  app.add_flag("--timings", common.timings, "Include wall times");
  app.add_option("--jobs", common.jobs, "Concurrent checks for verify")->check(CLI::PositiveNumber);

  int rank = 2;
  auto* weyl_cmd = app.add_subcommand("weyl", "Length, reduced words, Bruhat order, finite orbits");
  std::string length_of, word_of, orbit;
  std::vector<std::string> bruhat;
  weyl_cmd->add_option("--rank", rank, "Rank r")->check(CLI::PositiveNumber);
  weyl_cmd->add_option("--length-of", length_of, "Element, e.g. t:1,1,0,0 or s0*s1*tau");
  weyl_cmd->add_option("--reduced-word", word_of, "Element");
  weyl_cmd->add_option("--bruhat", bruhat, "Two elements U W: is U <= W?")->expected(2);
  weyl_cmd->add_option("--orbit", orbit, "Finite Weyl orbit of a vector, e.g. 1,1,0,0");

  auto* alc_cmd = app.add_subcommand("alcoves", "Admissible, permissible and extreme alcoves");
  std::string list = "none";
  alc_cmd->add_option("--rank", rank, "Rank r")->check(CLI::PositiveNumber);
  alc_cmd->add_option("--list", list, "none | admissible | permissible | extreme")
      ->check(CLI::IsMember({"none", "admissible", "permissible", "extreme"}));

  IdealSelect ideal_sel;
  auto* ideal_cmd = app.add_subcommand("ideal", "Print a ring-R or chart presentation");
  add_ideal_options(ideal_cmd, ideal_sel);
  ideal_cmd->add_flag("--implied", ideal_sel.implied, "The implied chart equations instead");

  IdealSelect hilb_sel;
  unsigned max_degree = 3;
  bool brute = false;
  auto* hilb_cmd = app.add_subcommand("hilbert", "Hilbert function and dimension of an ideal");
  add_ideal_options(hilb_cmd, hilb_sel);
  hilb_cmd->add_option("--max-degree", max_degree, "Largest degree");
  hilb_cmd->add_flag("--brute-force", brute, "Also compute each graded piece by linear algebra");

  int size = 0, list_degree = -1;
  auto* tab_cmd = app.add_subcommand("tableaux", "Doubly admissible minors and tableau counts");
  tab_cmd->add_option("--rank", rank, "Rank r (matrix size 2r)")->check(CLI::PositiveNumber);
  tab_cmd->add_option("--size", size, "List the doubly admissible minors of this size");
  tab_cmd->add_option("--max-degree", max_degree, "Count tableaux up to this degree");
  tab_cmd->add_option("--list-degree", list_degree, "List the tableaux of this degree");

  std::string x0;
  int index = -1;
  std::uint32_t prime = local::kDefaultPrime;
  auto* chart_cmd = app.add_subcommand("chart", "Extreme-chart reports and chart fibre dimensions");
  chart_cmd->add_option("--rank", rank, "Rank r")->check(CLI::PositiveNumber);
  chart_cmd->add_option("--x0", x0, "Kottwitz-Rapoport vector x_0 of an extreme alcove, e.g. 1,0,1,0");
  chart_cmd->add_option("--index", index, "Also report fibre dimensions of chart i");
  chart_cmd->add_option("--max-degree", max_degree, "Degree bound for the special-fibre Hilbert values");
  chart_cmd->add_option("--prime", prime, "Characteristic");

  suite::VerifyConfig vcfg;
  std::string corrupt;
  auto* verify_cmd = app.add_subcommand("verify", "Run the verification suite at one rank");
  verify_cmd->add_option("--rank", vcfg.rank, "Rank r")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-degree", vcfg.max_degree, "Degree bound");
  verify_cmd->add_option("--primes", vcfg.primes, "Comma-separated primes")->delimiter(',');
  verify_cmd->add_option("--trials", vcfg.trials, "Random points per chart");
  verify_cmd->add_option("--seed", vcfg.seed, "Random seed");
  verify_cmd->add_option("--radius", vcfg.radius, "Ball radius for the Weyl group checks");
  verify_cmd->add_option("--corrupt", corrupt, "Corrupt checks whose name starts with this")->group("");

  std::vector<std::string> args = args_in;
  try {
    apply_config(app, args);
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << usage_of(app);
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << usage_of(app);
    return kExitUsage;
  }

  std::ofstream file;
  if (!common.output.empty()) {
    file.open(common.output);
    if (!file) {
      err << "error: cannot open '" << common.output << "' for writing\n";
      return kExitUsage;
    }
  }
  std::ostream& sink = common.output.empty() ? out : file;

  try {
    if (*weyl_cmd) return cmd_weyl(common, rank, length_of, word_of, bruhat, orbit, sink);
    if (*alc_cmd) return cmd_alcoves(common, rank, list, sink);
    if (*ideal_cmd) return cmd_ideal(common, ideal_sel, sink);
    if (*hilb_cmd) return cmd_hilbert(common, hilb_sel, max_degree, brute, sink);
    if (*tab_cmd) return cmd_tableaux(common, rank, size, max_degree, list_degree, sink);
    if (*chart_cmd) return cmd_chart(common, rank, x0, index, max_degree, prime, sink);
    if (*verify_cmd) {
      for (std::uint32_t p : vcfg.primes) poly::PrimeField{p};
      if (vcfg.primes.empty()) throw UsageError("--primes needs at least one prime");
      return cmd_verify(common, vcfg, corrupt, sink);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << usage_of(app);
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, out, err);
}

} // namespace lmflat::cli
