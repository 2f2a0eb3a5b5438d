// Command-line driver: exact dimensions and links, verification sweeps,
// the uniform-approximation experiment and a determinant-vs-enumeration bench.

#include "gtkit/verify.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

using namespace gtkit;

namespace {

struct Common {
  std::size_t level = 1;
  std::string q = "1/2";
  std::optional<std::size_t> max_n;
  long part_bound = 2;
  std::optional<std::uint64_t> budget;
  double tolerance = 1e-10;
  bool csv = false;
  std::string out;
  unsigned seed = 1;
};

std::vector<std::size_t> parse_list(const std::string& s) {
  std::vector<std::size_t> v;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t used = 0;
    long n = -1;
    try {
      n = std::stol(tok, &used);
    } catch (const std::exception&) {
    }
    if (tok.empty() || used != tok.size() || n <= 0) throw ParseError("bad positive integer '" + tok + "'", pos);
    v.push_back(std::size_t(n));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return v;
}

void add_row(RunReport& r, const LinkRow& row) {
  for (const auto& [kappa, v] : row.entries) r.add(sig_label(kappa), v);
  CheckBuilder c("row sums to 1 and is nonnegative");
  c.expect(row.total() == 1 && row.nonnegative(), [&] { return "sum=" + to_string(row.total()); });
  r.checks.push_back(c.done());
}

int emit(const RunReport& r, const Common& c) {
  std::string text = c.csv ? to_csv(r) : to_json(r).dump() + "\n";
  if (c.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(c.out, std::ios::app);
    if (!f) throw std::runtime_error("cannot open " + c.out);
    f << text;
  }
  return r.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gelfand-Tsetlin dimensions, links and boundary experiments"};
  app.require_subcommand(1);
  Common c;
  auto common = [&](CLI::App* s) {
    s->add_option("--level", c.level, "target level K");
    s->add_option("--q", c.q, "q as p/r");
    s->add_option("--max-n", c.max_n, "largest N in sweeps");
    s->add_option("--part-bound", c.part_bound, "signature parts range over [-b, b]");
    s->add_option("--budget", c.budget, "enumeration node budget");
    s->add_option("--tolerance", c.tolerance, "numeric tolerance");
    s->add_flag("--csv", c.csv, "flatten output to CSV");
    s->add_option("--out", c.out, "append output to FILE");
    s->add_option("--seed", c.seed, "seed for sampled checks");
  };

  std::string sig, kappa_text, suite, family = "linear-row:1/2", ns_text = "8,16,32";
  bool numeric = false;

  auto* dim = app.add_subcommand("dim", "Dim_N(nu)");
  dim->add_option("signature", sig)->required();
  common(dim);
  auto* rdim = app.add_subcommand("rdim", "Dim_{K,N}(kappa, nu) and its ratio to Dim_N(nu)");
  rdim->add_option("kappa", kappa_text)->required();
  rdim->add_option("nu", sig)->required();
  common(rdim);
  auto* link = app.add_subcommand("link", "row Lambda^N_K(nu, .)");
  link->add_option("nu", sig)->required();
  common(link);
  auto* qlink = app.add_subcommand("qlink", "row of the q-link");
  qlink->add_option("nu", sig)->required();
  common(qlink);
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite)->required();
  common(verify);
  auto* uat = app.add_subcommand("uat", "finite vs boundary link gap along a family");
  uat->add_option("--kappa", kappa_text)->required();
  uat->add_option("--family", family, "zero | linear-row:a");
  uat->add_option("--n", ns_text, "comma-separated N values");
  uat->add_flag("--numeric", numeric, "numeric quadrature for the boundary link");
  common(uat);
  auto* bench = app.add_subcommand("bench", "determinant vs enumeration timing");
  std::string bench_ns = "6,10,14,20";
  bench->add_option("--n", bench_ns, "comma-separated N values");
  common(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    const std::uint64_t budget = c.budget.value_or(default_budget());
    RunReport r;
    if (*dim) {
      r.command = "dim";
      Signature nu = Signature::parse(sig);
      r.inputs = {{"signature", nu.to_string()}};
      PhaseTimer t(r, "product");
      r.add("dim", Rat(dim_product(nu)));
    } else if (*rdim) {
      r.command = "rdim";
      Signature kappa = Signature::parse(kappa_text), nu = Signature::parse(sig);
      r.inputs = {{"kappa", kappa.to_string()}, {"nu", nu.to_string()}};
      PhaseTimer t(r, "determinant");
      Rat ratio = rel_dim_ratio(DetContext(kappa.size(), nu), kappa);
      r.add("ratio", ratio);
      r.add("rel_dim", ratio * Rat(dim_product(nu)));
    } else if (*link) {
      r.command = "link";
      Signature nu = Signature::parse(sig);
      r.inputs = {{"nu", nu.to_string()}, {"level", c.level}};
      PhaseTimer t(r, "determinant");
      add_row(r, link_row(nu, c.level));
    } else if (*qlink) {
      r.command = "qlink";
      Signature nu = Signature::parse(sig);
      QParam q(parse_rat(c.q));
      r.inputs = {{"nu", nu.to_string()}, {"level", c.level}, {"q", to_string(q.value())}};
      PhaseTimer t(r, "determinant");
      add_row(r, q_link_row(nu, c.level, q));
    } else if (*verify) {
      r.command = "verify";
      VerifyOptions o;
      o.max_n = c.max_n;
      o.part_bound = c.part_bound;
      o.seed = c.seed;
      o.budget = budget;
      o.tolerance = c.tolerance;
      if (verify->count("--q")) o.qs = {parse_rat(c.q)};
      Json qs = Json::array();
      for (const auto& q : o.qs) qs.push_back(to_string(q));
      r.inputs = {{"suite", suite}, {"part_bound", o.part_bound}, {"q", qs}, {"seed", o.seed}};
      if (o.max_n) r.inputs["max_n"] = *o.max_n;
      PhaseTimer t(r, suite);
      r.checks = run_suite(suite, o);
      for (const auto& ch : r.checks) r.add(ch.name + " cases", Rat(long(ch.cases)));
    } else if (*uat) {
      r.command = "uat";
      Signature kappa = Signature::parse(kappa_text);
      auto ns = parse_list(ns_text);
      r.inputs = {{"kappa", kappa.to_string()}, {"family", family}, {"n", ns}, {"numeric", numeric}};
      if (numeric) r.inputs["tolerance"] = c.tolerance;
      PhaseTimer t(r, "gaps");
      for (const auto& row : uat_experiment(kappa, family, ns, numeric, c.tolerance))
        r.add("gap N=" + std::to_string(row.N), to_result(row.gap));
    } else if (*bench) {
      r.command = "bench";
      auto ns = parse_list(bench_ns);
      r.inputs = {{"n", ns}, {"level", c.level}, {"budget", budget}};
      CheckBuilder sum("determinant row sum = 1");
      CheckBuilder agree("enumeration agrees where it ran");
      for (std::size_t N : ns) {
        BenchRow b = bench_one(N, c.level, budget);
        const std::string tag = " N=" + std::to_string(N);
        r.add("nu" + tag, sig_label(b.nu));
        r.add("support" + tag, Rat(long(b.support)));
        r.add("row_sum" + tag, b.row_sum);
        r.timing.emplace_back("determinant" + tag, b.det_seconds);
        if (b.enum_seconds) {
          r.timing.emplace_back("enumeration" + tag, *b.enum_seconds);
        } else {
          r.add("enumeration" + tag, std::string("skipped: budget exceeded"));
        }
        sum.expect(b.row_sum == 1, [&] { return tag.substr(1); });
        agree.expect(b.enum_agrees, [&] { return tag.substr(1); });
      }
      r.checks = {sum.done(), agree.done()};
    }
    return emit(r, c);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
