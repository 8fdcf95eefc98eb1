// xnpr: intersection matrices, exponent bounds and Klein-form certificates
// for X(Np^r) from the command line.

#include "xnpr/invariants.hpp"
#include "xnpr/io.hpp"
#include "xnpr/klein.hpp"
#include "xnpr/verify.hpp"
#include "xnpr/xcurve.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace xnpr;
using io::Json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadArgs = 2;

struct Options {
  std::int64_t p = 0;
  unsigned r = 1;
  std::int64_t N = 0;
  std::int64_t k = 1;
  std::int64_t n = 0;
  std::string which = "M";
  std::string format = "text";
  std::string family;
  bool familyGiven = false;
  std::int64_t trunc = 50;
  bool cuspForms = false;
  std::string suite = "all";
  std::int64_t support = 3;
  std::int64_t coeff = 2;
  std::int64_t g = 0;
  std::int64_t a = 1;
};

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_matrix(const Options& o) {
  validate_pr(o.p, o.r);
  Mat m;
  if (o.which == "M") m = build_M(o.p, o.r);
  else if (o.which == "T") m = build_T(o.p, o.r);
  else m = tinv_closed_matrix(o.p, o.r);
  const bool inverse = o.which == "Tinv";
  if (o.format == "json") {
    Json j{{"which", o.which}, {"p", o.p}, {"r", o.r}};
    j["scale"] = inverse ? "entries are degS * (T^-1)_ij" : "entries are divided by degS";
    j["labels"] = Json::array();
    for (const auto& l : o.which == "M" ? component_labels(o.p, o.r) : truncated_labels(o.p, o.r)) j["labels"].push_back(to_string(l));
    j["matrix"] = io::to_json(m);
    print_json(j);
  } else if (o.format == "csv") {
    if (inverse) std::cout << "# entries are degS * (T^-1)_ij\n";
    std::cout << io::to_csv(m);
  } else {
    std::cout << (inverse ? "# entries are degS * (T^-1)_ij\n" : "# entries are divided by degS\n") << io::to_text(m);
  }
  return kExitOk;
}

int cmd_exponent(const Options& o) {
  if (o.format == "csv") throw std::invalid_argument("csv output is only available for matrices");
  const ExponentReport rep = exponent_exact(o.p, o.r, o.N, o.k);
  if (o.format == "json") {
    print_json(io::to_json(rep));
    return kExitOk;
  }
  auto row = [](const std::string& key, const std::string& value) {
    std::cout << std::left << std::setw(18) << key << value << '\n';
  };
  row("p, r, N, k", std::to_string(o.p) + ", " + std::to_string(o.r) + ", " + std::to_string(o.N) + ", " + std::to_string(o.k));
  row("upper", rep.upper.str());
  row("lower", rep.lower ? rep.lower->str() : "unavailable");
  row("exact", rep.exact ? rep.exact->str() : "unknown");
  if (!rep.note.empty()) row("note", rep.note);
  if (o.cuspForms) {
    row("cusp-form upper", to_string(rep.cuspFormUpper));
    row("edixhoven bound", to_string(rep.edixhovenBound));
  }
  std::cout << "per component:\n";
  for (const auto& [label, bound] : rep.perComponent) std::cout << "  " << std::left << std::setw(8) << to_string(label) << to_string(bound) << '\n';
  return kExitOk;
}

KleinFamily family_from(const Options& o) {
  std::int64_t n = o.n;
  if (n == 0) {
    if (o.p == 0) throw std::invalid_argument("give --n or --p/--r");
    n = ipow64(o.p, o.r);
  }
  if (o.familyGiven) return KleinFamily::parse(n, o.family);
  const auto pp = prime_power(n);
  if (!pp) throw std::invalid_argument("no standard family for a non prime power level");
  return standard_family(pp->first, pp->second);
}

int cmd_klein(const std::string& action, const Options& o) {
  if (action == "search") {
    const auto found = search_families(o.n, o.support, o.coeff);
    if (o.format == "json") {
      Json arr = Json::array();
      for (const auto& f : found) {
        Json j = io::to_json(f);
        j["valuationAtZero"] = valuation_at_zero(f);
        arr.push_back(std::move(j));
      }
      print_json(arr);
    } else {
      for (const auto& f : found) std::cout << std::setw(6) << valuation_at_zero(f) << "  " << f.str() << '\n';
    }
    return kExitOk;
  }
  const KleinFamily f = family_from(o);
  if (action == "check") {
    const bool cong = check_congruence(f), hol = is_holomorphic(f);
    if (o.format == "json") {
      Json j = io::to_json(f);
      j["congruence"] = cong;
      j["holomorphic"] = hol;
      print_json(j);
    } else {
      std::cout << "family      " << f.str() << " (n=" << f.n << ")\nweight      " << f.weight() << "\ncongruence  "
                << (cong ? "yes" : "no") << "\nholomorphic " << (hol ? "yes" : "no") << '\n';
    }
    return kExitOk;
  }
  if (action == "order") {
    std::vector<CuspClass> classes;
    if (o.g != 0) classes.push_back({o.g, o.a});
    else classes = cusp_classes(f.n);
    Json arr = Json::array();
    for (const auto& c : classes) {
      const Rational ord = cusp_order(f, c);
      if (o.format == "json") arr.push_back(Json{{"g", c.g}, {"a", c.a}, {"order", to_string(ord)}});
      else std::cout << "g=" << std::left << std::setw(4) << c.g << " a=" << std::setw(4) << c.a << to_string(ord) << '\n';
    }
    if (o.format == "json") print_json(arr);
    return kExitOk;
  }
  if (action == "qexp") {
    const QSeries q = qexp_infinity(f, o.trunc);
    if (o.format == "json") {
      print_json(io::to_json(q));
    } else {
      for (std::size_t i = 0; i < q.coeffs.size(); ++i) {
        if (q.coeffs[i] != 0) std::cout << "q^" << to_string(q.exponent(i)) << "  " << to_string(q.coeffs[i]) << '\n';
      }
    }
    return kExitOk;
  }
  if (action == "valuation") {
    const std::int64_t closed = valuation_at_zero(f);
    const std::int64_t viaNorm = valuation_at_zero_cyclotomic(f);
    if (o.format == "json") {
      Json j = io::to_json(f);
      j["valuationAtZero"] = closed;
      j["valuationViaNorm"] = viaNorm;
      j["leadingCoefficient"] = io::to_json(leading_coefficient_at_zero(f));
      print_json(j);
    } else {
      std::cout << "nu_0 (closed form) " << closed << "\nnu_0 (via norm)    " << viaNorm << '\n';
    }
    return closed == viaNorm ? kExitOk : kExitVerifyFailed;
  }
  throw std::invalid_argument("unknown klein action: " + action);
}

int cmd_verify(const Options& o) {
  const auto results = verify::run_suite(o.suite);
  bool ok = true;
  Json arr = Json::array();
  for (const auto& r : results) {
    ok = ok && r.passed;
    if (o.format == "json") {
      arr.push_back(Json{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    } else {
      std::ostringstream secs;
      secs << std::fixed << std::setprecision(3) << r.seconds << "s";
      std::cout << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(20) << r.id << std::setw(46) << r.name
                << std::setw(9) << secs.str() << r.detail << '\n';
    }
  }
  if (o.format == "json") print_json(arr);
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact intersection matrices, exponent bounds and Klein-form certificates for X(Np^r)"};
  app.require_subcommand(1);
  Options o;

  auto* matrix = app.add_subcommand("matrix", "print M, T or the closed-form T^-1");
  matrix->add_option("--p", o.p, "prime p")->required();
  matrix->add_option("--r", o.r, "exponent r >= 1")->required();
  matrix->add_option("--which", o.which, "M, T or Tinv")->check(CLI::IsMember({"M", "T", "Tinv"}));
  matrix->add_option("--format", o.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));

  auto* exponent = app.add_subcommand("exponent", "exponent bounds and the exact exponent");
  exponent->add_option("--p", o.p, "prime p")->required();
  exponent->add_option("--r", o.r, "exponent r >= 1")->required();
  exponent->add_option("--N", o.N, "level N >= 3, prime to p")->required();
  exponent->add_option("--k", o.k, "weight 2k");
  exponent->add_flag("--cusp-forms", o.cuspForms, "also print the cusp-form and Edixhoven bounds");
  exponent->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json", "csv"}));

  auto* klein = app.add_subcommand("klein", "products of Klein forms");
  klein->require_subcommand(1);
  std::string action;
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"check", "congruence and holomorphy"},
           {"order", "orders at the cusp classes"},
           {"qexp", "q-expansion at infinity"},
           {"valuation", "pi-adic valuation at the cusp 0"},
           {"search", "search weight-2 families"}}) {
    auto* sub = klein->add_subcommand(name, help);
    sub->callback([&action, name = name] { action = name; });
    sub->add_option("--n", o.n, "level n");
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    if (name == "search") {
      sub->add_option("--support", o.support, "maximum support size");
      sub->add_option("--coeff", o.coeff, "maximum |m(t)|");
      continue;
    }
    sub->add_option("--p", o.p, "prime p (level p^r)");
    sub->add_option("--r", o.r, "exponent r");
    sub->add_option("--family", o.family, "exponents as t:m,t:m,...; default is the standard family");
    if (name == "qexp") sub->add_option("--trunc", o.trunc, "number of coefficients");
    if (name == "order") {
      sub->add_option("--g", o.g, "gcd(c, n) of a single cusp class");
      sub->add_option("--a", o.a, "a mod g of a single cusp class");
    }
  }

  auto* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--suite", o.suite, "arith, linalg, xcurve, invariants, klein or all")
      ->check(CLI::IsMember(verify::suite_names()));
  verify->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadArgs;
  }

  try {
    for (auto* sub : klein->get_subcommands()) {
      const auto* opt = sub->get_option_no_throw("--family");
      if (sub->parsed() && opt != nullptr && opt->count() > 0) o.familyGiven = true;
    }
    if (matrix->parsed()) return cmd_matrix(o);
    if (exponent->parsed()) return cmd_exponent(o);
    if (klein->parsed()) return cmd_klein(action, o);
    if (verify->parsed()) return cmd_verify(o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadArgs;
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadArgs;
  }
  return kExitBadArgs;
}
