#include "hookcsp/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "hookcsp/bijection.hpp"
#include "hookcsp/csp.hpp"
#include "hookcsp/enumeration.hpp"
#include "hookcsp/error.hpp"
#include "hookcsp/json_io.hpp"
#include "hookcsp/promotion.hpp"
#include "hookcsp/statistics.hpp"

namespace hookcsp::cli {

namespace {

struct HookArgs {
  int m = 0;
  int n = 0;
  int b = 0;
  std::string mu;
};

void add_hook_options(CLI::App* cmd, HookArgs& a, bool required = true) {
  auto* m = cmd->add_option("--m", a.m, "arm length m (first row)");
  auto* n = cmd->add_option("--n", a.n, "body width n");
  auto* b = cmd->add_option("--b", a.b, "body depth b");
  auto* mu = cmd->add_option("--mu", a.mu, "content, comma separated, b+2 parts");
  if (required) {
    m->required();
    n->required();
    b->required();
    mu->required();
  }
}

Tableau read_tableau(const std::string& inline_json, const std::string& path, std::istream& in) {
  Json j;
  try {
    if (!inline_json.empty()) {
      j = Json::parse(inline_json);
    } else if (!path.empty()) {
      std::ifstream f(path);
      if (!f) throw DomainError("cannot open " + path);
      j = Json::parse(f);
    } else {
      j = Json::parse(in);
    }
  } catch (const Json::parse_error& e) {
    throw DomainError(std::string("malformed tableau JSON: ") + e.what());
  }
  return tableau_from_json(j);
}

struct SweepSpec {
  int min_cells = 1;
  int max_cells = 14;
  int m_max = 0;  // 0: unbounded
  int n_max = 0;
  int b_max = 0;
  bool allow_zero_parts = false;
  std::string output;
  unsigned jobs = 1;
};

struct SweepTask {
  HookArmShape shape;
  Composition content;
};

std::vector<SweepTask> sweep_tasks(const SweepSpec& s) {
  std::vector<SweepTask> tasks;
  for (int cells = std::max(s.min_cells, 2); cells <= s.max_cells; ++cells)
    for (int b = 1; b < cells && (s.b_max == 0 || b <= s.b_max); ++b)
      for (int n = 1; n * (b + 1) <= cells && (s.n_max == 0 || n <= s.n_max); ++n) {
        const int m = cells - n * b;
        if (s.m_max != 0 && m > s.m_max) continue;
        for (Composition& mu : compositions(cells, b + 2, !s.allow_zero_parts))
          tasks.push_back({HookArmShape(m, n, b), std::move(mu)});
      }
  return tasks;
}

// One NDJSON line, or nothing for an empty family.
struct SweepResult {
  std::optional<std::string> line;
  bool feasible = false;
  bool verified = false;
};

SweepResult run_sweep_task(const SweepTask& task) {
  SweepResult res;
  if (beta_profile(task.shape, task.content).beta < 0) return res;
  res.feasible = true;
  try {
    const CspReport report = verify_csp(task.shape, task.content);
    res.verified = report.verdict;
    res.line = to_json(report).dump();
  } catch (const std::exception& e) {
    res.line = Json{{"m", task.shape.m()},
                    {"n", task.shape.n()},
                    {"b", task.shape.b()},
                    {"mu", task.content.parts()},
                    {"error", e.what()}}
                   .dump();
  }
  return res;
}

int run_sweep(const SweepSpec& spec, std::ostream& out, std::ostream& err) {
  if (spec.max_cells < spec.min_cells) throw DomainError("sweep cell range is empty");
  const auto tasks = sweep_tasks(spec);

  std::ofstream file;
  if (!spec.output.empty()) {
    file.open(spec.output);
    if (!file) throw DomainError("cannot open " + spec.output);
  }
  std::ostream& sink = spec.output.empty() ? out : file;

  std::size_t feasible = 0;
  std::size_t verified = 0;
  constexpr std::size_t kChunk = 512;
  const unsigned jobs = std::max(1u, spec.jobs);
  for (std::size_t begin = 0; begin < tasks.size(); begin += kChunk) {
    const std::size_t end = std::min(tasks.size(), begin + kChunk);
    std::vector<SweepResult> results(end - begin);
    std::atomic<std::size_t> next{begin};
    auto worker = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < end;) results[i - begin] = run_sweep_task(tasks[i]);
    };
    {
      std::vector<std::jthread> pool;
      for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
      worker();
    }
    // Lines are written in task order regardless of which worker produced them.
    for (const SweepResult& r : results) {
      if (r.feasible) ++feasible;
      if (r.verified) ++verified;
      if (r.line) sink << *r.line << '\n';
    }
    sink.flush();
  }
  const std::size_t failed = feasible - verified;
  sink << Json{{"summary",
                {{"families", tasks.size()},
                 {"infeasible", tasks.size() - feasible},
                 {"verified", verified},
                 {"failed", failed}}}}
              .dump()
       << '\n';
  err << "sweep: " << tasks.size() << " families, " << feasible << " nonempty, " << verified << " verified, "
      << failed << " failed\n";
  return failed == 0 ? kExitOk : kExitMismatch;
}

// Worked examples: each entry is (name, passed).
std::vector<std::pair<std::string, bool>> check_worked_examples() {
  std::vector<std::pair<std::string, bool>> checks;
  const Tableau sample531{{{1, 1, 2, 3, 5}, {2, 3, 4}, {3}}, 5};
  checks.emplace_back("tableau (5,3,1) is semistandard with content (2,2,3,1,1)",
                      validate_ssyt(sample531) && content(sample531) == Composition{2, 2, 3, 1, 1});

  const Tableau promote_input{{{1, 1, 2, 3}, {2, 3, 4, 5}, {5, 5}}, 5};
  const Tableau promoted{{{1, 1, 1, 4}, {2, 2, 3, 5}, {3, 4}}, 5};
  checks.emplace_back("promotion of [[1,1,2,3],[2,3,4,5],[5,5]]", promote(promote_input) == promoted);

  const Tableau cocharge_input{{{1, 1, 1, 1, 2, 2, 3, 4}, {2, 2, 3}, {3, 4, 4}}, 4};
  const Word w = reading_word(cocharge_input);
  const auto dec = standard_subwords(w);
  const std::vector<Word> subs{{3, 2, 1, 4}, {4, 2, 1, 3}, {4, 3, 1, 2}, {1, 2}};
  std::vector<int> ccs;
  for (const Word& s : dec.subwords) ccs.push_back(cocharge_permutation(s));
  checks.emplace_back("reading word 34422311112234", w == Word{3, 4, 4, 2, 2, 3, 1, 1, 1, 1, 2, 2, 3, 4});
  checks.emplace_back("standard subwords 3214/4213/4312/12", dec.subwords == subs);
  checks.emplace_back("subword cocharges 5/4/3/0, total 12",
                      ccs == std::vector<int>{5, 4, 3, 0} && cocharge_tableau(cocharge_input) == 12);

  const HookArmShape shape(12, 5, 4);
  const Composition mu{6, 4, 4, 7, 5, 6};
  const Tableau arm_sample{{{1, 1, 1, 1, 1, 1, 2, 4, 4, 4, 4, 6},
                     {2, 2, 2, 3, 3},
                     {3, 3, 4, 4, 4},
                     {5, 5, 5, 5, 5},
                     {6, 6, 6, 6, 6}},
                    6};
  const FreeEntryProfile profile = beta_profile(shape, mu);
  checks.emplace_back("gamma=(1,0,0,2,0,1), beta=3",
                      profile.gamma == std::vector<int>{1, 0, 0, 2, 0, 1} && profile.beta == 3);
  const Multiset free(2, 6, {4, 4, 2});
  checks.emplace_back("phi(T) = {4,4,2}", phi(arm_sample) == free);
  checks.emplace_back("phi_inverse({4,4,2}) = T", phi_inverse(shape, mu, free) == arm_sample);
  return checks;
}

unsigned default_jobs() {
  if (const char* env = std::getenv(kJobsEnv)) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

}  // namespace

int run(std::span<const std::string> argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Promotion, cocharge and cyclic sieving on SSYT of shape (m, n^b)", "hookcsp"};
  app.require_subcommand(1);

  std::string tableau_json, tableau_file;
  auto add_tableau_input = [&](CLI::App* cmd) {
    cmd->add_option("--tableau", tableau_json, R"(tableau JSON {"alphabet":k,"rows":[[...]]}; default: stdin)");
    cmd->add_option("--file", tableau_file, "read the tableau JSON from a file");
  };

  // enumerate
  auto* enumerate_cmd = app.add_subcommand("enumerate", "list SSYT(shape, mu), one JSON tableau per line");
  std::string shape_text;
  HookArgs hook;
  std::string method = "auto";
  enumerate_cmd->add_option("--shape", shape_text, "shape, comma separated (generic enumeration)");
  add_hook_options(enumerate_cmd, hook, false);
  enumerate_cmd->add_option("--method", method, "generic | hook | auto")
      ->check(CLI::IsMember({"generic", "hook", "auto"}));

  // promote
  auto* promote_cmd = app.add_subcommand("promote", "apply jeu-de-taquin promotion");
  std::size_t power = 1;
  add_tableau_input(promote_cmd);
  promote_cmd->add_option("--power", power, "number of promotions");

  // orbit
  auto* orbit_cmd = app.add_subcommand("orbit", "cycle of a tableau under promotion^step");
  std::size_t step = 1;
  std::size_t bound = kDefaultOrbitBound;
  add_tableau_input(orbit_cmd);
  orbit_cmd->add_option("--step", step, "promotion power generating the action")->check(CLI::PositiveNumber);
  orbit_cmd->add_option("--bound", bound, "abort when the orbit grows past this length");

  // cocharge
  auto* cocharge_cmd = app.add_subcommand("cocharge", "cocharge and charge of a tableau or word");
  std::string word_text;
  add_tableau_input(cocharge_cmd);
  cocharge_cmd->add_option("--word", word_text, "word, comma separated, with partition content");

  // kostka
  auto* kostka_cmd = app.add_subcommand("kostka", "Kostka-Foulkes polynomial of SSYT(shape, mu)");
  bool modified = false;
  std::string format = "json";
  std::string kostka_mu;
  kostka_cmd->add_option("--shape", shape_text, "shape, comma separated")->required();
  kostka_cmd->add_option("--mu", kostka_mu, "content, comma separated")->required();
  kostka_cmd->add_flag("--modified", modified, "cocharge generating function instead of charge");
  kostka_cmd->add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));

  // phi / phi-inverse
  auto* phi_cmd = app.add_subcommand("phi", "free-entry multiset of a (m, n^b) tableau");
  add_tableau_input(phi_cmd);
  auto* phi_inv_cmd = app.add_subcommand("phi-inverse", "tableau with the given free entries");
  std::string free_text;
  add_hook_options(phi_inv_cmd, hook);
  phi_inv_cmd->add_option("--free", free_text, "free entries in [2, b+2], comma separated (empty for beta=0)");

  // csp-verify
  auto* csp_cmd = app.add_subcommand("csp-verify", "verify cyclic sieving for one family");
  std::string csp_format = "both";
  add_hook_options(csp_cmd, hook);
  csp_cmd->add_option("--format", csp_format, "json | text | both")->check(CLI::IsMember({"json", "text", "both"}));

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "verify cyclic sieving on every family up to a cell cap");
  SweepSpec spec;
  spec.jobs = default_jobs();
  sweep_cmd->add_option("--max-cells", spec.max_cells, "largest m + n*b");
  sweep_cmd->add_option("--min-cells", spec.min_cells, "smallest m + n*b");
  sweep_cmd->add_option("--m-max", spec.m_max, "cap on m (0: none)");
  sweep_cmd->add_option("--n-max", spec.n_max, "cap on n (0: none)");
  sweep_cmd->add_option("--b-max", spec.b_max, "cap on b (0: none)");
  sweep_cmd->add_flag("--allow-zero-parts", spec.allow_zero_parts, "include contents with zero parts");
  sweep_cmd->add_option("--output", spec.output, "write NDJSON here instead of stdout");
  sweep_cmd->add_option("--jobs", spec.jobs, std::string("worker threads (default $") + kJobsEnv + " or 1)")
      ->check(CLI::PositiveNumber);

  auto* seed_cmd = app.add_subcommand("seed-examples", "check the worked examples");

  try {
    std::vector<std::string> args(argv.size() > 1 ? argv.begin() + 1 : argv.end(), argv.end());
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*enumerate_cmd) {
      std::vector<Tableau> list;
      const bool have_hook = hook.m > 0 && hook.n > 0 && hook.b > 0;
      if (hook.mu.empty()) throw DomainError("enumerate needs --mu");
      const Composition mu(parse_int_list(hook.mu));
      if (have_hook && method != "generic") {
        list = enumerate_hook_arm(HookArmShape(hook.m, hook.n, hook.b), mu);
      } else {
        Partition shape;
        if (!shape_text.empty())
          shape = Partition(parse_int_list(shape_text));
        else if (have_hook)
          shape = HookArmShape(hook.m, hook.n, hook.b).partition();
        else
          throw DomainError("enumerate needs --shape or --m/--n/--b");
        if (method == "hook") {
          auto h = HookArmShape::from_partition(shape);
          if (!h) throw DomainError("--method hook needs a shape (m, n^b)");
          list = enumerate_hook_arm(*h, mu);
        } else {
          list = enumerate_generic({shape, mu});
        }
      }
      for (const Tableau& t : list) out << to_json(t).dump() << '\n';
      return kExitOk;
    }
    if (*promote_cmd) {
      out << to_json(promote_power(read_tableau(tableau_json, tableau_file, in), power)).dump() << '\n';
      return kExitOk;
    }
    if (*orbit_cmd) {
      const PromotionOrbit o = orbit(read_tableau(tableau_json, tableau_file, in), step, bound);
      Json members = Json::array();
      for (const Tableau& t : o.members) members.push_back(to_json(t));
      out << Json{{"step", o.step}, {"order", o.order()}, {"members", std::move(members)}}.dump() << '\n';
      return kExitOk;
    }
    if (*cocharge_cmd) {
      const Word w = word_text.empty() ? reading_word(read_tableau(tableau_json, tableau_file, in))
                                       : Word(parse_int_list(word_text));
      const auto dec = standard_subwords(w);
      std::vector<int> ccs;
      for (const Word& s : dec.subwords) ccs.push_back(cocharge_permutation(s));
      out << Json{{"word", w},
                  {"subwords", dec.subwords},
                  {"subword_cocharges", ccs},
                  {"cocharge", cocharge_word(w)},
                  {"charge", charge_word(w)}}
                 .dump()
          << '\n';
      return kExitOk;
    }
    if (*kostka_cmd) {
      const SsytFamily family{Partition(parse_int_list(shape_text)), Composition(parse_int_list(kostka_mu))};
      const IntPolynomial p = modified ? modified_kostka_foulkes(family) : kostka_foulkes(family);
      out << (format == "json" ? to_json(p).dump() : p.to_string()) << '\n';
      return kExitOk;
    }
    if (*phi_cmd) {
      out << to_json(phi(read_tableau(tableau_json, tableau_file, in))).dump() << '\n';
      return kExitOk;
    }
    if (*phi_inv_cmd) {
      const HookArmShape shape(hook.m, hook.n, hook.b);
      const Multiset free(2, shape.b() + 2, free_text.empty() ? std::vector<int>{} : parse_int_list(free_text));
      out << to_json(phi_inverse(shape, Composition(parse_int_list(hook.mu)), free)).dump() << '\n';
      return kExitOk;
    }
    if (*csp_cmd) {
      const CspReport report = verify_csp(HookArmShape(hook.m, hook.n, hook.b), Composition(parse_int_list(hook.mu)));
      if (csp_format != "text") out << to_json(report).dump() << '\n';
      if (csp_format != "json") out << format_csp_table(report);
      return report.verdict ? kExitOk : kExitMismatch;
    }
    if (*sweep_cmd) return run_sweep(spec, out, err);
    if (*seed_cmd) {
      bool ok = true;
      for (const auto& [name, passed] : check_worked_examples()) {
        out << (passed ? "ok   " : "FAIL ") << name << '\n';
        ok = ok && passed;
      }
      return ok ? kExitOk : kExitMismatch;
    }
  } catch (const InconsistencyError& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitUsage;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return run(args, std::cin, std::cout, std::cerr);
}

}  // namespace hookcsp::cli
