// qschow: compute and verify Chow rings of quasi-split groups mod p.
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qschow/suites.hpp"

using namespace qschow;

namespace {

struct GroupFlags {
  std::string type;
  int rank = 0;
  int twist = 0;  // 0: take it from the type prefix
  std::string pi1 = "sc";
  unsigned prime = 2;
};

void add_group_flags(CLI::App* c, GroupFlags& g) {
  c->add_option("--type", g.type, "Dynkin type, optionally with twist prefix (A, 2A, 3D, 6D, E6, ...)")->required();
  c->add_option("--rank", g.rank, "rank (may be given in --type)");
  c->add_option("--twist", g.twist, "order of the splitting field (1, 2, 3, 6)");
  c->add_option("--pi1", g.pi1, "fundamental group: sc, ad, mu<l>, so, hs, mu2x2, ...");
  c->add_option("--prime", g.prime, "characteristic p");
}

GroupDatum parse_group(const GroupFlags& f) {
  std::string t = f.type;
  int twist = 1;
  if (!t.empty() && (t[0] == '2' || t[0] == '3' || t[0] == '6')) {
    twist = t[0] - '0';
    t = t.substr(1);
  }
  if (f.twist) {
    if (twist != 1 && twist != f.twist) throw std::invalid_argument("--twist disagrees with the type prefix");
    twist = f.twist;
  }
  int rank = f.rank;
  parse_type(t, &rank);
  if (f.rank && rank != f.rank) throw std::invalid_argument("--rank disagrees with the rank in --type");
  if (rank <= 0) throw std::invalid_argument("missing --rank");
  return make_group(t.substr(0, 1), rank, twist, f.pi1, f.prime);
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

void print_report(const Report& r, const std::string& fmt, std::ostream& os) {
  if (fmt == "json") {
    os << r.to_json().dump(2) << "\n";
    return;
  }
  if (fmt == "csv") {
    os << "job,group,prime,d,dim,expected,pass\n";
    for (std::size_t d = 0; d < r.computed.size(); ++d)
      os << r.job << "," << r.group.delta() << " " << r.group.pi1 << "," << r.group.p << "," << d << ","
         << r.computed[d] << "," << (d < r.expected.size() ? r.expected[d] : 0) << ","
         << (d < r.expected.size() && r.computed[d] == r.expected[d] ? "PASS" : "FAIL") << "\n";
    return;
  }
  os << r.job << " " << r.group.delta() << " pi1=" << r.group.pi1 << " p=" << r.group.p << " cap=" << r.cap << "\n";
  os << "  route:    " << r.route << "\n";
  os << "  expected: " << r.expected_row << "\n";
  os << "  hilbert  " << join(r.computed) << "\n";
  os << "  table    " << join(r.expected) << "\n";
  for (const auto& w : r.witnesses) os << "  witness  " << w.name << ": " << (w.nonzero ? "yes" : "no") << "\n";
  if (r.extra.contains("cokernel")) {
    const auto& c = r.extra["cokernel"];
    os << "  cokernel " << c["row"].get<std::string>() << ": " << (c["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
  }
  os << (r.pass() ? "PASS" : "FAIL") << "\n";
}

void print_suite(const SuiteResult& s, const std::string& fmt, std::ostream& os) {
  if (fmt == "json") {
    os << s.to_json().dump(2) << "\n";
    return;
  }
  for (const auto& r : s.reports)
    os << (r.pass() ? "PASS " : "FAIL ") << r.job << " " << r.group.delta() << " " << r.group.pi1 << " p=" << r.group.p
       << " " << join(r.computed) << (r.hilbert_pass() ? "" : " expected " + join(r.expected)) << "\n";
  for (const auto& [n, ok] : s.checks) os << (ok ? "PASS " : "FAIL ") << n << "\n";
  os << s.suite << ": " << (s.size() - s.failures()) << "/" << s.size() << " passed\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chow rings mod p of quasi-split reductive groups"};
  app.require_subcommand(1);

  PipelineOptions opt;
  std::string format = "text";
  bool no_timing = false;
  if (const char* env = std::getenv("QSCHOW_CACHE_DIR")) opt.cache_dir = env;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--cache-dir", opt.cache_dir, "Weyl table cache directory (env QSCHOW_CACHE_DIR)");
  app.add_option("--budget", opt.budget, "refuse Weyl enumerations larger than this many elements");
  app.add_option("--workers", opt.workers, "worker count (jobs run sequentially)")->check(CLI::PositiveNumber);
  app.add_flag("--no-timing", no_timing, "report wall_time_ms as 0 for byte-identical output");

  GroupFlags gf;
  int cap = 4;
  auto* flag = app.add_subcommand("compute-flag-ring", "Hilbert vector of the flag variety");
  auto* con = app.add_subcommand("compute-conormed", "conormed quotient against its table row");
  auto* grp = app.add_subcommand("compute-group", "Chow ring of the group against its table row");
  for (auto* c : {flag, con, grp}) {
    add_group_flags(c, gf);
    c->add_option("--cap", cap, "degree cap")->check(CLI::NonNegativeNumber);
  }

  SuiteOptions so;
  std::string suite;
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("--suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  ver->add_option("--max-rank", so.max_rank, "largest rank included");
  ver->add_option("--cap", so.cap, "degree cap (default: top degree)");
  ver->add_option("--seed", so.seed, "seed of the property suites");
  ver->add_option("--samples", so.samples, "random triples per type");

  std::string name;
  auto* named = app.add_subcommand("named-check", "run a registered identity");
  named->add_option("--name", name, "check name")->required();

  int sweep_rank = 8;
  std::vector<unsigned> primes{2, 3, 5, 7};
  auto* sweep = app.add_subcommand("sweep", "resolve every listed group against the tables");
  sweep->add_option("--max-rank", sweep_rank, "largest rank");
  sweep->add_option("--primes", primes, "primes")->delimiter(',');

  CLI11_PARSE(app, argc, argv);
  opt.timing = !no_timing;
  so.pipeline = opt;

  try {
    if (flag->parsed() || con->parsed() || grp->parsed()) {
      GroupDatum g = parse_group(gf);
      Report r = flag->parsed() ? compute_flag_ring(g, cap, opt)
                 : con->parsed() ? compute_conormed(g, cap, opt)
                                 : compute_group(g, cap, opt);
      print_report(r, format, std::cout);
      return r.pass() ? 0 : 1;
    }
    if (ver->parsed()) {
      SuiteResult s = run_suite(suite, so);
      print_suite(s, format, std::cout);
      return s.pass() ? 0 : 1;
    }
    if (named->parsed()) {
      Report r = named_check(name, opt);
      print_report(r, format, std::cout);
      return r.pass() ? 0 : 1;
    }
    if (sweep->parsed()) {
      auto rows = totality_sweep(sweep_rank, primes);
      if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : rows)
          j.push_back({{"group", r.group.to_json()}, {"chow_row", r.chow_row}, {"conormed_row", r.conormed_row},
                       {"cokernel_row", r.cokernel_row}, {"chow_total_dim", r.chow_total_dim}});
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& r : rows)
          std::cout << r.group.delta() << " " << r.group.pi1 << " p=" << r.group.p << ": " << r.chow_row
                    << " (total dim " << r.chow_total_dim << ")\n";
        std::cout << rows.size() << " groups resolved\n";
      }
      return 0;
    }
  } catch (const GuardError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid job: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "invalid job: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
