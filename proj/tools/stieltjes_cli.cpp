#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stieltjes/identities.hpp"
#include "stieltjes/rational.hpp"
#include "stieltjes/stieltjes.hpp"

namespace {

using nlohmann::json;
using namespace stieltjes;

enum class Format { Plain, Json, Csv };

constexpr const char* kCsvHeader =
    "kind,name,n,p,q,x,s,method,digits,value,err_estimate,residual,tolerance,pass";

struct Record {
  std::string kind;  // VALUE | TABLE_ROW | IDENTITY
  std::optional<std::string> name;
  std::optional<long> n, p, q;
  std::optional<std::string> x, s;
  std::optional<std::string> method;
  unsigned digits = 0;
  std::optional<std::string> value, err_estimate;
  std::optional<std::string> residual, tolerance;
  std::optional<bool> pass;
};

std::string csv_cell(const std::optional<std::string>& v) { return v ? *v : ""; }
std::string csv_cell(const std::optional<long>& v) { return v ? std::to_string(*v) : ""; }

void emit(const Record& r, Format format) {
  if (format == Format::Json) {
    json j;
    j["kind"] = r.kind;
    j["name"] = r.name ? json(*r.name) : json(nullptr);
    j["n"] = r.n ? json(*r.n) : json(nullptr);
    j["p"] = r.p ? json(*r.p) : json(nullptr);
    j["q"] = r.q ? json(*r.q) : json(nullptr);
    j["x"] = r.x ? json(*r.x) : json(nullptr);
    j["s"] = r.s ? json(*r.s) : json(nullptr);
    j["method"] = r.method ? json(*r.method) : json(nullptr);
    j["digits"] = r.digits;
    j["value"] = r.value ? json(*r.value) : json(nullptr);
    j["err_estimate"] = r.err_estimate ? json(*r.err_estimate) : json(nullptr);
    j["residual"] = r.residual ? json(*r.residual) : json(nullptr);
    j["tolerance"] = r.tolerance ? json(*r.tolerance) : json(nullptr);
    j["pass"] = r.pass ? json(*r.pass) : json(nullptr);
    std::cout << j.dump() << "\n";
    return;
  }
  if (format == Format::Csv) {
    std::cout << r.kind << ',' << csv_cell(r.name) << ',' << csv_cell(r.n) << ','
              << csv_cell(r.p) << ',' << csv_cell(r.q) << ',' << csv_cell(r.x) << ','
              << csv_cell(r.s) << ',' << csv_cell(r.method) << ',' << r.digits << ','
              << csv_cell(r.value) << ',' << csv_cell(r.err_estimate) << ','
              << csv_cell(r.residual) << ',' << csv_cell(r.tolerance) << ','
              << (r.pass ? (*r.pass ? "true" : "false") : "") << "\n";
    return;
  }
  std::cout << r.kind;
  if (r.name) std::cout << " name=" << *r.name;
  if (r.n) std::cout << " n=" << *r.n;
  if (r.p) std::cout << " p=" << *r.p;
  if (r.q) std::cout << " q=" << *r.q;
  if (r.x) std::cout << " x=" << *r.x;
  if (r.s) std::cout << " s=" << *r.s;
  if (r.method) std::cout << " method=" << *r.method;
  std::cout << " digits=" << r.digits;
  if (r.value) std::cout << " value=" << *r.value;
  if (r.err_estimate) std::cout << " err=" << *r.err_estimate;
  if (r.residual) std::cout << " residual=" << *r.residual;
  if (r.tolerance) std::cout << " tolerance=" << *r.tolerance;
  if (r.pass) std::cout << (*r.pass ? " PASS" : " FAIL");
  std::cout << "\n";
}

std::string fmt(const BigFloat& v, unsigned digits) {
  return v.str(digits, std::ios_base::scientific);
}

std::string fmt_err(const BigFloat& v) { return v.str(3, std::ios_base::scientific); }

Format parse_format(const std::string& name) {
  if (name == "plain") return Format::Plain;
  if (name == "json") return Format::Json;
  return Format::Csv;
}

unsigned default_digits() {
  if (const char* env = std::getenv("STIELTJES_DEFAULT_DIGITS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1)
      throw CLI::ValidationError("STIELTJES_DEFAULT_DIGITS must be a positive integer");
    return static_cast<unsigned>(v);
  }
  return 30;
}

struct ComputeArgs {
  long n = 0;
  std::optional<long> p, q;
  std::optional<std::string> x;
  unsigned digits = 30;
  std::string method = "auto";
  std::string format = "plain";
  unsigned j_max = 400;
};

StieltjesResult compute_one(const ComputeArgs& args, const std::string& method,
                            const PrecisionContext& ctx) {
  const unsigned m = static_cast<unsigned>(args.n);
  if (args.p) {
    RationalArg arg(static_cast<unsigned>(*args.p), static_cast<unsigned>(*args.q));
    if (method == "bell") return stieltjes_rational_bell(m, arg, ctx);
    if (method == "cck") return stieltjes_rational_cck(m, arg, ctx);
    if (method == "hasse")
      return stieltjes_hasse(StieltjesIndex(m), arg.value(ctx.working_digits()), ctx, args.j_max);
    return stieltjes_cauchy(StieltjesIndex(m), arg.value(ctx.working_digits()), ctx);
  }
  ScopedPrecision guard(ctx.working_digits());
  BigFloat x(*args.x);
  if (method == "hasse") return stieltjes_hasse(StieltjesIndex(m), x, ctx, args.j_max);
  return stieltjes_cauchy(StieltjesIndex(m), x, ctx);
}

int run_compute(const ComputeArgs& args) {
  const Format format = parse_format(args.format);
  PrecisionContext ctx(args.digits);

  std::string method = args.method;
  if (method == "auto") method = args.p ? "bell" : "cauchy";
  if (!args.p && (method == "bell" || method == "cck"))
    throw CLI::ValidationError("--method " + method + " requires --p/--q");

  std::vector<std::string> methods;
  if (method == "all")
    methods = args.p ? std::vector<std::string>{"bell", "cck", "cauchy"}
                     : std::vector<std::string>{"cauchy", "hasse"};
  else
    methods = {method};

  std::vector<StieltjesResult> results;
  for (const std::string& name : methods) results.push_back(compute_one(args, name, ctx));

  if (format == Format::Csv) std::cout << kCsvHeader << "\n";
  for (size_t i = 0; i < results.size(); ++i) {
    Record rec;
    rec.kind = "VALUE";
    rec.n = args.n;
    rec.p = args.p;
    rec.q = args.q;
    rec.x = args.x;
    rec.method = methods[i];
    rec.digits = args.digits;
    rec.value = fmt(results[i].value, args.digits);
    rec.err_estimate = fmt_err(results[i].err_estimate);
    emit(rec, format);
  }
  if (results.size() > 1) {
    ScopedPrecision guard(ctx.working_digits());
    BigFloat deviation(0);
    for (size_t i = 0; i < results.size(); ++i)
      for (size_t j = i + 1; j < results.size(); ++j)
        deviation = std::max(deviation, abs(results[i].value - results[j].value));
    Record rec;
    rec.kind = "VALUE";
    rec.n = args.n;
    rec.p = args.p;
    rec.q = args.q;
    rec.x = args.x;
    rec.method = "deviation";
    rec.digits = args.digits;
    rec.value = fmt(deviation, 3);
    emit(rec, format);
  }
  return 0;
}

struct TableArgs {
  long n_max = 0;
  long q = 1;
  unsigned digits = 30;
  std::string format = "plain";
};

int run_table(const TableArgs& args) {
  const Format format = parse_format(args.format);
  PrecisionContext ctx(args.digits);

  std::vector<long> ps;
  for (long p = 1; p < args.q; ++p)
    if (std::gcd(p, args.q) == 1) ps.push_back(p);
  ps.push_back(args.q);  // x = 1 row via the zeta'(0)-family formula

  if (format == Format::Csv) std::cout << kCsvHeader << "\n";
  for (long m = 0; m <= args.n_max; ++m) {
    for (long p : ps) {
      StieltjesResult r =
          (p == args.q)
              ? stieltjes_at_one(static_cast<unsigned>(m), ctx)
              : stieltjes_rational_bell(static_cast<unsigned>(m),
                                        RationalArg(static_cast<unsigned>(p),
                                                    static_cast<unsigned>(args.q)),
                                        ctx);
      Record rec;
      rec.kind = "TABLE_ROW";
      rec.n = m;
      rec.p = p;
      rec.q = args.q;
      rec.method = method_name(r.method);
      rec.digits = args.digits;
      rec.value = fmt(r.value, args.digits);
      rec.err_estimate = fmt_err(r.err_estimate);
      emit(rec, format);
    }
  }
  return 0;
}

struct VerifyArgs {
  std::string suite = "all";
  unsigned q_max = 5;
  unsigned digits = 30;
  std::string format = "plain";
};

int run_verify(const VerifyArgs& args) {
  const Format format = parse_format(args.format);
  PrecisionContext ctx(args.digits);
  SuiteOptions options;
  options.q_max = args.q_max;

  std::vector<IdentityReport> reports = run_suite(args.suite, ctx, options);
  if (format == Format::Csv) std::cout << kCsvHeader << "\n";
  size_t failed = 0;
  for (const IdentityReport& report : reports) {
    if (!report.pass) ++failed;
    Record rec;
    rec.kind = "IDENTITY";
    rec.name = report.name;
    rec.x = report.params.empty() ? std::nullopt : std::optional<std::string>(report.params);
    rec.digits = args.digits;
    rec.value = fmt(report.lhs, args.digits);
    rec.residual = fmt_err(report.residual);
    rec.tolerance = fmt_err(report.tolerance);
    rec.pass = report.pass;
    emit(rec, format);
  }
  if (format == Format::Plain)
    std::cout << reports.size() << " checks, " << failed << " failed\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Stieltjes constants at rational arguments"};
  app.require_subcommand(1);

  ComputeArgs compute;
  TableArgs table;
  VerifyArgs verify;

  try {
    compute.digits = default_digits();
    table.digits = default_digits();
    verify.digits = default_digits();
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  CLI::App* c = app.add_subcommand("compute", "Compute gamma_n at one argument");
  c->add_option("--n", compute.n, "Stieltjes index m")->required()->check(CLI::NonNegativeNumber);
  auto* popt = c->add_option("--p", compute.p, "numerator");
  auto* qopt = c->add_option("--q", compute.q, "denominator");
  auto* xopt = c->add_option("--x", compute.x, "decimal argument x > 0");
  popt->needs(qopt);
  qopt->needs(popt);
  xopt->excludes(popt)->excludes(qopt);
  c->add_option("--digits", compute.digits, "target decimal digits");
  c->add_option("--method", compute.method, "bell|cck|hasse|cauchy|all")
      ->check(CLI::IsMember({"auto", "bell", "cck", "hasse", "cauchy", "all"}));
  c->add_option("--format", compute.format, "plain|json|csv")
      ->check(CLI::IsMember({"plain", "json", "csv"}));
  c->add_option("--j-max", compute.j_max, "outer truncation for the series method");

  CLI::App* t = app.add_subcommand("table", "Tabulate gamma_m(p/q) for one denominator");
  t->add_option("--n-max", table.n_max, "largest Stieltjes index")
      ->required()
      ->check(CLI::NonNegativeNumber);
  t->add_option("--q", table.q, "denominator")->required()->check(CLI::PositiveNumber);
  t->add_option("--digits", table.digits, "target decimal digits");
  t->add_option("--format", table.format, "plain|json|csv")
      ->check(CLI::IsMember({"plain", "json", "csv"}));

  CLI::App* v = app.add_subcommand("verify", "Run the identity verification suite");
  v->add_option("--suite", verify.suite, "identity name or prefix pattern (default all)");
  v->add_option("--q-max", verify.q_max, "largest denominator in parameter grids")
      ->check(CLI::PositiveNumber);
  v->add_option("--digits", verify.digits, "target decimal digits");
  v->add_option("--format", verify.format, "plain|json|csv")
      ->check(CLI::IsMember({"plain", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (c->parsed()) {
      if (!compute.p && !compute.x) {
        std::cerr << "compute: needs --p/--q or --x\n";
        return 2;
      }
      if (compute.p && (*compute.p < 1 || *compute.q < 1 || *compute.p > *compute.q)) {
        std::cerr << "compute: requires 1 <= p <= q\n";
        return 2;
      }
      return run_compute(compute);
    }
    if (t->parsed()) return run_table(table);
    return run_verify(verify);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::string what = e.what();
    std::cerr << what << "\n";
    return what.starts_with("unknown identity") ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 3;
  }
}
