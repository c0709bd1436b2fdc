#include "idealorder/cli/cli.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "idealorder/error.hpp"
#include "idealorder/field/reduced_poly.hpp"
#include "idealorder/ideals/ideal_order.hpp"
#include "idealorder/primes/prime_order.hpp"

namespace idealorder::cli {

namespace {

using arith::Integer;
using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json to_json(const Integer& x) { return x.fits_slong_p() ? json(x.get_si()) : json(x.get_str()); }

json coords_json(const std::vector<arith::Rational>& c) {
  json out = json::array();
  for (const auto& q : c) out.push_back(arith::to_string(q));
  return out;
}

Integer positive_integer(const std::string& text, const char* what) {
  auto n = arith::parse_integer(text);
  if (!n || *n < 1) throw UsageError(std::string(what) + " must be a positive integer, got '" + text + "'");
  return *n;
}

Integer prime_argument(const std::string& text) {
  Integer p = positive_integer(text, "--p");
  if (!arith::is_prime(p)) throw UsageError("--p must be prime, got " + text);
  return p;
}

field::FieldData load_field(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return field::load_fixture_file(arg);
  if (arg.find_first_of("xX") == std::string::npos)
    throw UsageError("'" + arg + "' is neither a fixture file nor a polynomial");
  try {
    return field::FieldData{field::NumberField::from_power_basis(arith::parse_poly(arg)), {}};
  } catch (const InvalidInput& e) {
    throw UsageError(e.what());
  }
}

std::vector<Integer> primes_up_to(const Integer& bound) {
  std::vector<Integer> out;
  for (Integer p = 2; p <= bound; ++p)
    if (arith::is_prime(p)) out.push_back(p);
  return out;
}

// Warms the catalog on several threads. Failures are left for the caller's
// sequential pass to raise in a deterministic order.
void prefetch(const primes::PrimeCatalog& catalog, const std::vector<Integer>& ps, unsigned jobs) {
  if (jobs <= 1 || ps.size() <= 1) return;
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  for (unsigned t = 0; t < std::min<std::size_t>(jobs, ps.size()); ++t)
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < ps.size(); i = next++) {
        try {
          catalog.primes_above(ps[i]);
        } catch (...) {
        }
      }
    });
  for (auto& w : workers) w.join();
}

arith::Factorization factor_norm(const Integer& n) { return n == 1 ? arith::Factorization{} : arith::factor_integer(n); }

std::vector<Integer> support(const arith::Factorization& n) {
  std::vector<Integer> out;
  for (const auto& pp : n) out.push_back(pp.prime);
  return out;
}

ideals::Ideal parse_ideal(const primes::PrimeCatalog& catalog, const std::string& text) {
  try {
    return ideals::parse_factorization(catalog, text);
  } catch (const InvalidInput& e) {
    throw UsageError(e.what());
  }
}

struct Options {
  std::string format = "text";
  unsigned jobs = 1;
  std::string field;
  std::string p;
  std::string max_norm;
  std::string norm;
  std::string factorization;
  std::string label;
  std::string file;
};

int cmd_primes(const Options& o, std::ostream& out) {
  if (o.p.empty() == o.max_norm.empty()) throw UsageError("primes needs exactly one of --p and --max-norm");
  std::vector<Integer> ps;
  Integer bound = 0;
  if (!o.p.empty()) ps.push_back(prime_argument(o.p));
  else ps = primes_up_to(bound = positive_integer(o.max_norm, "--max-norm"));
  primes::PrimeCatalog catalog(load_field(o.field));
  prefetch(catalog, ps, o.jobs);

  std::vector<const primes::LabeledPrime*> rows;
  for (const auto& p : ps)
    for (const auto& lp : catalog.primes_above(p).primes)
      if (bound == 0 || lp.label.norm <= bound) rows.push_back(&lp);
  std::stable_sort(rows.begin(), rows.end(), [](const auto* a, const auto* b) {
    return a->label.norm != b->label.norm ? a->label.norm < b->label.norm : a->label.index < b->label.index;
  });

  if (o.format == "json") {
    json list = json::array();
    for (const auto* lp : rows) {
      json row{{"label", lp->label.to_string()}, {"p", to_json(lp->prime.p)}, {"e", lp->prime.e},
               {"f", lp->prime.f}, {"beta", coords_json(lp->prime.beta.coords)}};
      if (!lp->prime.name.empty()) row["name"] = lp->prime.name;
      list.push_back(std::move(row));
    }
    out << json{{"primes", list}}.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto* lp : rows)
    out << lp->label.to_string() << " p=" << lp->prime.p.get_str() << " e=" << lp->prime.e << " f=" << lp->prime.f
        << " beta=" << field::format_coords(lp->prime.beta.coords) << "\n";
  return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  Integer n = positive_integer(o.norm, "--norm");
  primes::PrimeCatalog catalog(load_field(o.field));
  auto fact = factor_norm(n);
  prefetch(catalog, support(fact), o.jobs);
  auto all = ideals::enumerate_norm(catalog, fact);
  if (o.format == "json") {
    json list = json::array();
    for (std::size_t i = 0; i < all.size(); ++i)
      list.push_back({{"label", ideals::IdealLabel{n, i + 1}.to_string()},
                      {"factorization", ideals::format_factorization(catalog, all[i])}});
    out << json{{"norm", to_json(n)}, {"count", all.size()}, {"ideals", list}}.dump(2) << "\n";
    return kExitOk;
  }
  for (std::size_t i = 0; i < all.size(); ++i)
    out << ideals::IdealLabel{n, i + 1}.to_string() << " = " << ideals::format_factorization(catalog, all[i]) << "\n";
  return kExitOk;
}

int cmd_label(const Options& o, std::ostream& out) {
  primes::PrimeCatalog catalog(load_field(o.field));
  auto a = parse_ideal(catalog, o.factorization);
  auto label = ideals::rank(catalog, a);
  if (o.format == "json")
    out << json{{"label", label.to_string()}, {"factorization", ideals::format_factorization(catalog, a)}}.dump(2)
        << "\n";
  else
    out << label.to_string() << "\n";
  return kExitOk;
}

int cmd_unlabel(const Options& o, std::ostream& out) {
  ideals::IdealLabel label;
  try {
    label = ideals::IdealLabel::parse(o.label);
  } catch (const InvalidInput& e) {
    throw UsageError(e.what());
  }
  primes::PrimeCatalog catalog(load_field(o.field));
  prefetch(catalog, support(factor_norm(label.norm)), o.jobs);
  auto text = ideals::format_factorization(catalog, ideals::unrank(catalog, label));
  if (o.format == "json")
    out << json{{"label", label.to_string()}, {"factorization", text}}.dump(2) << "\n";
  else
    out << text << "\n";
  return kExitOk;
}

int cmd_sort(const Options& o, std::istream& in, std::ostream& out) {
  primes::PrimeCatalog catalog(load_field(o.field));
  std::vector<ideals::Ideal> items;
  for (std::string line; std::getline(in, line);) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    items.push_back(parse_ideal(catalog, line.substr(first, last - first + 1)));
  }
  std::stable_sort(items.begin(), items.end(), [&](const ideals::Ideal& a, const ideals::Ideal& b) {
    return ideals::cmp_ideals(catalog, a, b) < 0;
  });
  if (o.format == "json") {
    json list = json::array();
    for (const auto& a : items)
      list.push_back({{"label", ideals::rank(catalog, a).to_string()},
                      {"factorization", ideals::format_factorization(catalog, a)}});
    out << json{{"ideals", list}}.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& a : items) out << ideals::format_factorization(catalog, a) << "\n";
  return kExitOk;
}

int cmd_validate(const Options& o, std::ostream& out) {
  field::ValidationReport report;
  try {
    report = field::validate_fixture(field::read_json_file(o.file));
  } catch (const std::exception& e) {
    report.checks.push_back({"schema", false, e.what()});
  }
  if (o.format == "json") {
    json checks = json::array();
    for (const auto& c : report.checks) checks.push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    out << json{{"label", report.label}, {"ok", report.ok()}, {"checks", checks}}.dump(2) << "\n";
  } else {
    for (const auto& c : report.checks) {
      out << (c.passed ? "PASS " : "FAIL ") << c.name;
      if (!c.passed && !c.detail.empty()) out << ": " << c.detail;
      out << "\n";
    }
  }
  return report.ok() ? kExitOk : kExitDomain;
}

// One polynomial per line; blank lines and lines starting with '#' are skipped.
std::vector<arith::IntPoly> read_poly_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::vector<arith::IntPoly> out;
  for (std::string line; std::getline(in, line);) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      out.push_back(arith::parse_poly(line));
    } catch (const InvalidInput& e) {
      throw UsageError(path + ": " + e.what());
    }
  }
  if (out.empty()) throw UsageError(path + " lists no polynomials");
  return out;
}

int cmd_reduce_compare(const Options& o, std::ostream& out) {
  auto order = field::reduced_poly_order(read_poly_list(o.file));
  if (o.format == "json") {
    json list = json::array();
    for (const auto& p : order) list.push_back(p.to_string());
    out << json{{"selected", order.front().to_string()}, {"order", list}}.dump(2) << "\n";
    return kExitOk;
  }
  out << "selected: " << order.front().to_string() << "\n";
  for (std::size_t i = 0; i < order.size(); ++i) out << i + 1 << ": " << order[i].to_string() << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Canonical ordering and labelling of ideals in number fields", "idealorder"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", o.jobs, "Worker threads for per-prime work")->check(CLI::Range(1u, 256u));

  auto field_arg = [&](CLI::App* sub) {
    sub->add_option("field", o.field, "Fixture file or inline monic polynomial")->required();
  };
  auto* primes_cmd = app.add_subcommand("primes", "List primes above p, or all primes up to a norm");
  field_arg(primes_cmd);
  primes_cmd->add_option("--p", o.p, "Rational prime");
  primes_cmd->add_option("--max-norm", o.max_norm, "Largest norm to list");
  auto* enum_cmd = app.add_subcommand("enumerate", "Ideals of a given norm in order");
  field_arg(enum_cmd);
  enum_cmd->add_option("--norm", o.norm, "Norm")->required();
  auto* label_cmd = app.add_subcommand("label", "Label of an ideal given by its factorization");
  field_arg(label_cmd);
  label_cmd->add_option("--factorization", o.factorization, "e.g. 4.1^2*27.2")->required();
  auto* unlabel_cmd = app.add_subcommand("unlabel", "Factorization of the ideal with a label");
  field_arg(unlabel_cmd);
  unlabel_cmd->add_option("--label", o.label, "N.i")->required();
  auto* sort_cmd = app.add_subcommand("sort", "Sort factorization strings read from standard input");
  field_arg(sort_cmd);
  auto* validate_cmd = app.add_subcommand("validate", "Check a fixture file");
  validate_cmd->add_option("fixture", o.file, "Fixture file")->required();
  auto* reduce_cmd = app.add_subcommand("reduce-compare", "Order candidate defining polynomials");
  reduce_cmd->add_option("file", o.file, "One polynomial per line")->required();

  std::vector<std::string> argv_store{"idealorder"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (primes_cmd->parsed()) return cmd_primes(o, out);
    if (enum_cmd->parsed()) return cmd_enumerate(o, out);
    if (label_cmd->parsed()) return cmd_label(o, out);
    if (unlabel_cmd->parsed()) return cmd_unlabel(o, out);
    if (sort_cmd->parsed()) return cmd_sort(o, in, out);
    if (validate_cmd->parsed()) return cmd_validate(o, out);
    if (reduce_cmd->parsed()) return cmd_reduce_compare(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FixtureRequired& e) {
    err << "fixture required: " << e.what() << "\n";
    return kExitDomain;
  } catch (const ValidationError& e) {
    err << "validation failed (" << e.check() << "): " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace idealorder::cli
