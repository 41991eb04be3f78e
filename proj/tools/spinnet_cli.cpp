#include "spinnet/central_functions.hpp"
#include "spinnet/checks.hpp"
#include "spinnet/errors.hpp"
#include "spinnet/network_map.hpp"
#include "spinnet/poly_parse.hpp"
#include "spinnet/products.hpp"
#include "spinnet/recoupling.hpp"
#include "spinnet/render.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>

using namespace spinnet;
using nlohmann::json;

namespace {

enum ExitCode { ok = 0, verification_failed = 1, usage = 2, resource = 3 };

struct Global {
  std::string format = "json";
  std::optional<int> max_delta;
  std::uint64_t seed = 1;
  int cap_strands = 16;
  int input_delta_cap = 12;
};

json envelope(const std::string& command) { return {{"schema_version", json_schema_version}, {"command", command}}; }

std::string latex_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '_') out += '\\';
    out += ch;
  }
  return out;
}

void require_delta(const AdmissibleTriple& t, int cap) {
  if (t.delta() > cap)
    throw ResourceError("triple " + label(t) + " has degree " + std::to_string(t.delta()) + ", above the cap of " +
                        std::to_string(cap) + " (raise --max-delta)");
}

// One triple per symmetry orbit: the one with beta >= alpha >= gamma.
bool is_orbit_representative(const AdmissibleTriple& t) { return t.beta() >= t.alpha() && t.alpha() >= t.gamma(); }

int cmd_table(const Global& g, bool all_members) {
  const int max_delta = g.max_delta.value_or(4);
  if (max_delta < 0) throw DomainError("--max-delta must be nonnegative");
  std::vector<AdmissibleTriple> rows;
  for (const auto& t : triples_up_to(max_delta))
    if (all_members || is_orbit_representative(t)) rows.push_back(t);
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& l, const auto& r) { return l.delta() != r.delta() ? l.delta() < r.delta() : l < r; });

  if (g.format == "json") {
    json out = envelope("table");
    out["max_delta"] = max_delta;
    out["rows"] = json::array();
    for (const auto& t : rows) {
      out["rows"].push_back({{"triple", {t.a(), t.b(), t.c()}},
                             {"strands", {t.alpha(), t.beta(), t.gamma()}},
                             {"delta", t.delta()},
                             {"polynomial", to_json(central_function(t))}});
    }
    std::cout << out.dump(2) << "\n";
  } else if (g.format == "csv") {
    std::cout << "delta,a,b,c,alpha,beta,gamma,polynomial\n";
    for (const auto& t : rows) {
      std::cout << t.delta() << "," << t.a() << "," << t.b() << "," << t.c() << "," << t.alpha() << "," << t.beta()
                << "," << t.gamma() << "," << csv_field(to_string(central_function(t))) << "\n";
    }
  } else {
    std::cout << "\\begin{tabular}{|c|c|c||l|}\n\\hline\n"
              << "$\\delta$ & $\\chi_{abc}$ & $\\chi^{\\alpha\\beta\\gamma}$ & $\\mathfrak{p}_{a,b,c}(y,x,z)$\\\\\n\\hline\n";
    for (const auto& t : rows) {
      std::cout << t.delta() << " & $\\chi_{" << label(t) << "}$ & $\\chi^{" << t.alpha() << t.beta() << t.gamma()
                << "}$ & $" << latex(central_function(t)) << "$\\\\\n";
    }
    std::cout << "\\hline\n\\end{tabular}\n";
  }
  return ok;
}

int cmd_eval(const Global& g, const std::vector<std::string>& args) {
  if (args.size() != 4 && args.size() != 6) throw DomainError("eval expects TRIPLE X Y Z or A B C X Y Z");
  AdmissibleTriple t = args.size() == 4 ? parse_triple(args[0]) : parse_triple(args[0] + "," + args[1] + "," + args[2]);
  require_delta(t, g.max_delta.value_or(g.input_delta_cap));
  const std::size_t o = args.size() - 3;
  Rational x = parse_rational(args[o]), y = parse_rational(args[o + 1]), z = parse_rational(args[o + 2]);
  Rational v = poly_eval(central_function(t), x, y, z);
  if (g.format == "json") {
    json out = envelope("eval");
    out["triple"] = {t.a(), t.b(), t.c()};
    out["point"] = {{"x", to_string(x)}, {"y", to_string(y)}, {"z", to_string(z)}};
    out["value"] = to_string(v);
    std::cout << out.dump(2) << "\n";
  } else if (g.format == "csv") {
    std::cout << "a,b,c,x,y,z,value\n"
              << t.a() << "," << t.b() << "," << t.c() << "," << x << "," << y << "," << z << "," << v << "\n";
  } else {
    std::cout << "\\chi_{" << label(t) << "}(" << latex(x) << "," << latex(y) << "," << latex(z) << ") = " << latex(v) << "\n";
  }
  return ok;
}

void print_expansion(const Global& g, json out, const CentralExpansion& e) {
  if (g.format == "json") {
    out["expansion"] = to_json(e);
    std::cout << out.dump(2) << "\n";
  } else if (g.format == "csv") {
    std::cout << "a,b,c,coefficient\n";
    for (const auto& [t, c] : e.display_order()) std::cout << t.a() << "," << t.b() << "," << t.c() << "," << c << "\n";
  } else {
    std::cout << latex(e) << "\n";
  }
}

int cmd_product(const Global& g, const std::string& lhs, const std::string& rhs, const std::string& method) {
  AdmissibleTriple t1 = parse_triple(lhs), t2 = parse_triple(rhs);
  const int cap = g.max_delta.value_or(g.input_delta_cap);
  require_delta(t1, cap);
  require_delta(t2, cap);
  CentralExpansion e = method == "polynomial" ? product_via_polynomials(t1, t2) : product_central(t1, t2);
  json out = envelope("product");
  out["factors"] = {{t1.a(), t1.b(), t1.c()}, {t2.a(), t2.b(), t2.c()}};
  out["method"] = method;
  print_expansion(g, out, e);
  return ok;
}

int cmd_convert(const Global& g, const std::string& text) {
  Poly3 p = parse_poly(text);
  if (p.total_degree() > 2 * g.max_delta.value_or(g.input_delta_cap))
    throw ResourceError("polynomial degree " + std::to_string(p.total_degree()) + " is above the cap (raise --max-delta)");
  json out = envelope("convert");
  out["polynomial"] = to_json(p);
  print_expansion(g, out, poly_to_central(p));
  return ok;
}

int cmd_sixj(const Global& g, const std::vector<int>& key, const std::vector<int>& special, bool prime, bool alternating) {
  json out = envelope("sixj");
  Rational v;
  std::string text;
  if (!special.empty()) {
    if (special.size() != 5) throw DomainError("--special expects a,b,c,c_shift,a_shift");
    auto conv = alternating ? SignConvention::alternating : SignConvention::uniform;
    v = sixj_special(special[0], special[1], special[2], special[3], special[4], conv);
    SixJKey k{1, special[0], special[1], special[2] + special[3], special[2], special[0] + special[4]};
    out["key"] = {k.a, k.b, k.c, k.d, k.e, k.f};
    out["signs"] = alternating ? "alternating" : "uniform";
    text = to_string(k);
  } else {
    if (key.size() != 6) throw DomainError("sixj expects six labels A B C D E F");
    SixJKey k{key[0], key[1], key[2], key[3], key[4], key[5]};
    v = prime ? sixj_prime(k) : sixj_general(k);
    out["key"] = key;
    out["prime"] = prime;
    text = to_string(k) + (prime ? "'" : "");
  }
  out["value"] = to_string(v);
  if (g.format == "json") {
    std::cout << out.dump(2) << "\n";
  } else if (g.format == "csv") {
    std::cout << "symbol,value\n" << csv_field(text) << "," << v << "\n";
  } else {
    std::cout << text << " = " << latex(v) << "\n";
  }
  return ok;
}

int cmd_verify(const Global& g, const std::string& suite, int samples) {
  CheckOptions opt;
  opt.max_delta = g.max_delta.value_or(3);
  opt.seed = g.seed;
  opt.samples = samples;
  std::vector<Check> checks = run_suite(suite, opt);
  const bool pass = all_pass(checks);
  if (g.format == "json") {
    json out = envelope("verify");
    out["suite"] = suite;
    out["max_delta"] = opt.max_delta;
    out["seed"] = opt.seed;
    out["checks"] = json::array();
    for (const auto& c : checks) out["checks"].push_back(to_json(c));
    out["status"] = pass ? "pass" : "fail";
    std::cout << out.dump(2) << "\n";
  } else if (g.format == "csv") {
    std::cout << "check,status,cases,details\n";
    for (const auto& c : checks)
      std::cout << csv_field(c.name) << "," << (c.pass ? "pass" : "fail") << "," << c.cases << "," << csv_field(c.details) << "\n";
  } else {
    std::cout << "\\begin{tabular}{|l|c|r|}\n\\hline\ncheck & status & cases\\\\\n\\hline\n";
    for (const auto& c : checks) std::cout << "\\texttt{" << latex_escape(c.name) << "} & " << (c.pass ? "pass" : "fail") << " & " << c.cases << "\\\\\n";
    std::cout << "\\hline\n\\end{tabular}\n";
  }
  return pass ? ok : verification_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Central functions on SL(2) x SL(2): tables, products, 6j-symbols and self-checks"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "latex"}));
  app.add_option("--max-delta", g.max_delta, "Table or verification depth; input degree cap elsewhere")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", g.seed, "Seed for random matrices and parameters");
  app.add_option("--cap-strands", g.cap_strands, "Largest dense network (inputs + outputs)")->check(CLI::Range(2, 30));

  auto* table = app.add_subcommand("table", "Central functions up to a degree");
  bool all_members = false;
  table->add_flag("--all-members", all_members, "List every permutation, not only orbit representatives");

  auto* eval = app.add_subcommand("eval", "Evaluate chi_abc at trace coordinates (x, y, z)");
  std::vector<std::string> eval_args;
  eval->add_option("args", eval_args, "TRIPLE X Y Z, or A B C X Y Z")->required();

  auto* product = app.add_subcommand("product", "Product of two central functions");
  std::string lhs, rhs, method = "central";
  product->add_option("lhs", lhs, "First triple, e.g. 101 or 1,0,1")->required();
  product->add_option("rhs", rhs, "Second triple")->required();
  product->add_option("--method", method, "Structure constants or polynomial route")
      ->check(CLI::IsMember({"central", "polynomial"}));

  auto* sixj = app.add_subcommand("sixj", "6j-symbol {A B C; D E F}");
  std::vector<int> key, special;
  bool prime = false, alternating = false;
  sixj->add_option("labels", key, "A B C D E F");
  sixj->add_option("--special", special, "a,b,c,c_shift,a_shift for {1 a b; c+cs c a+as}")->delimiter(',')->expected(5);
  sixj->add_flag("--prime", prime, "H-tree variant");
  sixj->add_flag("--alternating-signs", alternating, "Closed forms with the parity sign (-1)^i");

  auto* convert = app.add_subcommand("convert", "Polynomial in x, y, z to central functions");
  std::string poly;
  convert->add_option("polynomial", poly, "e.g. \"x^2*y - 1/2 z\"")->required();

  auto* verify = app.add_subcommand("verify", "Run identity checks and report");
  std::string suite = "all";
  int samples = 20;
  verify->add_option("suite", suite, "Suite name")->check(CLI::IsMember(suite_names()));
  verify->add_option("--samples", samples, "Random matrix pairs per triple")->check(CLI::PositiveNumber);

  for (auto* sub : {table, eval, product, sixj, convert, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  }

  try {
    set_strand_cap(g.cap_strands);
    if (*table) return cmd_table(g, all_members);
    if (*eval) return cmd_eval(g, eval_args);
    if (*product) return cmd_product(g, lhs, rhs, method);
    if (*sixj) return cmd_sixj(g, key, special, prime, alternating);
    if (*convert) return cmd_convert(g, poly);
    if (*verify) return cmd_verify(g, suite, samples);
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return resource;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  }
  return usage;
}
