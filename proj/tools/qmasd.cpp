#include <CLI11.hpp>

#include <cstdint>
#include <functional>
#include <iostream>
#include <string>

#include "qmasd/error.hpp"
#include "qmasd/report.hpp"

namespace {

struct Options {
  std::uint64_t prime = 0;
  std::uint64_t pmin = 5;
  std::uint64_t pmax = 29;
  std::size_t prec = 100;
  std::int64_t nmax = 40;
  std::string engine = "congruence";
  std::string format = "json";
  std::string policy = "lefschetz-v1";
  std::string name;
};

CLI::App* add_command(CLI::App& app, const std::string& name, const std::string& help, Options& o,
                      std::function<qmasd::ReportDocument()>& run, std::function<qmasd::ReportDocument()> body) {
  CLI::App* sub = app.add_subcommand(name, help);
  sub->add_option("--format", o.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  sub->callback([&run, body] { run = body; });
  return sub;
}

void add_engine(CLI::App* sub, Options& o) {
  sub->add_option("--engine", o.engine, "count, congruence or both")
      ->check(CLI::IsMember({"count", "congruence", "both"}));
  sub->add_option("--policy", o.policy, "singular-fiber policy id or JSON file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frobenius characteristic polynomials and congruences for weight 3 forms of level 6"};
  app.require_subcommand(1);
  Options o;
  std::function<qmasd::ReportDocument()> run;

  auto* table = add_command(app, "table", "Characteristic polynomials and factorizations for a prime range", o, run,
                            [&o] {
                              return qmasd::cmd_table(o.pmin, o.pmax, qmasd::parse_engine(o.engine),
                                                      qmasd::resolve_policy(o.policy));
                            });
  table->add_option("--pmin", o.pmin, "smallest prime")->capture_default_str();
  table->add_option("--pmax", o.pmax, "largest prime")->capture_default_str();
  add_engine(table, o);

  auto* asd = add_command(app, "asd", "Three- and five-term congruences at one prime", o, run,
                          [&o] { return qmasd::cmd_asd(o.prime, o.nmax); });
  asd->add_option("--prime", o.prime, "prime p >= 5")->required();
  asd->add_option("--nmax", o.nmax, "largest index n checked")->capture_default_str();

  add_command(app, "norms", "Compare |a_p(f)|^2 with |A|^2 on the table primes", o, run,
              [] { return qmasd::cmd_norms(); });

  auto* qexp = add_command(app, "qexp", "Nonzero coefficients of a named q-expansion", o, run,
                           [&o] { return qmasd::cmd_qexp(o.name, o.prec); });
  qexp->add_option("name", o.name, "F, B, F1..F5, f5, f7, f13, f23 or f")->required();
  qexp->add_option("--prec", o.prec, "number of grid steps")->capture_default_str();

  auto* split = add_command(app, "splitting", "Which of -2, -3, 6 are squares mod p", o, run,
                            [&o] { return qmasd::cmd_splitting(o.prime); });
  split->add_option("--prime", o.prime, "prime p >= 5")->required();

  auto* iso = add_command(app, "isogeny-verify", "Symbolic checks of the 2-isogeny identities", o, run,
                          [] { return qmasd::cmd_isogeny(); });
  iso->preparse_callback([&o](std::size_t) { o.format = "tsv"; });

  auto* charpoly = add_command(app, "charpoly", "Characteristic polynomial at one prime", o, run, [&o] {
    return qmasd::cmd_charpoly(o.prime, qmasd::parse_engine(o.engine), qmasd::resolve_policy(o.policy));
  });
  charpoly->add_option("--prime", o.prime, "prime p >= 5")->required();
  add_engine(charpoly, o);

  auto* factor = add_command(app, "factor", "Quadratic factorization at one prime", o, run, [&o] {
    return qmasd::cmd_factor(o.prime, qmasd::parse_engine(o.engine), qmasd::resolve_policy(o.policy));
  });
  factor->add_option("--prime", o.prime, "prime p >= 5")->required();
  add_engine(factor, o);

  CLI11_PARSE(app, argc, argv);

  try {
    const qmasd::ReportDocument doc = run();
    std::cout << doc.render(qmasd::parse_format(o.format));
    return doc.pass ? 0 : 1;
  } catch (const qmasd::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
