//------------------------------------------------------------------------------
//
//   Copyright 2026 The hgbern Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

// hgbern command-line front end. Links only the C interface.

#include "hgbern/hgbern.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace {

constexpr int kExitOk           = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage        = 2;
constexpr int kExitPrecondition = 3;

struct CliFailure : std::runtime_error
{
  CliFailure(int code, std::string const &message)
    : std::runtime_error(message)
    , code(code)
  {}
  int code;
};

int exit_code_for(hgb_status status)
{
  switch (status)
  {
  case HGB_OK:
    return kExitOk;
  case HGB_ERR_INVALID_ARGUMENT:
  case HGB_ERR_IO:
    return kExitUsage;
  case HGB_ERR_PRECONDITION:
    return kExitPrecondition;
  case HGB_ERR_CACHE:
  case HGB_ERR_INTERNAL:
    return kExitVerification;
  }
  return kExitVerification;
}

void check(hgb_status status)
{
  if (status != HGB_OK)
  {
    throw CliFailure(exit_code_for(status), hgb_last_error());
  }
}

struct OwnedString
{
  char *ptr = nullptr;
  ~OwnedString()
  {
    hgb_string_free(ptr);
  }
  std::string str() const
  {
    return ptr != nullptr ? ptr : "";
  }
};

using ContextPtr = std::unique_ptr<hgb_context, decltype(&hgb_context_destroy)>;
using VerdictPtr = std::unique_ptr<hgb_verdict, decltype(&hgb_verdict_destroy)>;

struct Range
{
  unsigned lo = 0;
  unsigned hi = 0;
};

// "a" or "a..b"
Range parse_range(std::string const &text, char const *what)
{
  auto parse_one = [&](std::string const &part) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
    {
      throw CliFailure(kExitUsage, std::string("bad ") + what + " range '" + text + "'");
    }
    return static_cast<unsigned>(std::stoul(part));
  };
  Range out;
  auto const dots = text.find("..");
  if (dots == std::string::npos)
  {
    out.lo = out.hi = parse_one(text);
  }
  else
  {
    out.lo = parse_one(text.substr(0, dots));
    out.hi = parse_one(text.substr(dots + 2));
  }
  if (out.lo > out.hi)
  {
    throw CliFailure(kExitUsage, std::string("empty ") + what + " range '" + text + "'");
  }
  return out;
}

std::vector<std::string> split(std::string const &text, char sep)
{
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string part; std::getline(in, part, sep);)
  {
    if (!part.empty())
    {
      out.push_back(part);
    }
  }
  return out;
}

// --cache wins, then HGBERN_CACHE; neither means in-memory only.
std::optional<std::filesystem::path> resolve_cache(std::string const &flag)
{
  if (!flag.empty())
  {
    return std::filesystem::path(flag);
  }
  if (char const *env = std::getenv("HGBERN_CACHE"); env != nullptr && *env != '\0')
  {
    return std::filesystem::path(env);
  }
  return std::nullopt;
}

class Session
{
public:
  explicit Session(std::optional<std::filesystem::path> cache)
    : ctx_(make_context())
    , cache_(std::move(cache))
  {
    if (cache_ && std::filesystem::exists(*cache_))
    {
      check(hgb_cache_load(ctx_.get(), cache_->c_str(), 3));
    }
  }

  hgb_context *get()
  {
    return ctx_.get();
  }

  void persist()
  {
    if (cache_)
    {
      check(hgb_cache_save(ctx_.get(), cache_->c_str()));
    }
  }

private:
  static ContextPtr make_context()
  {
    hgb_context *raw = nullptr;
    check(hgb_context_create(&raw));
    return {raw, &hgb_context_destroy};
  }

  ContextPtr ctx_;
  std::optional<std::filesystem::path> cache_;
};

std::string compute_value(hgb_context *ctx, std::string const &route, std::string const &N, unsigned r, unsigned n)
{
  OwnedString value;
  check(hgb_compute(ctx, route.c_str(), N.c_str(), r, n, &value.ptr));
  return value.str();
}

std::string decimal(std::string const &value, unsigned digits)
{
  OwnedString out;
  check(hgb_to_decimal(value.c_str(), digits, &out.ptr));
  return out.str();
}

//------------------------------------------------------------------------------
// compute / table

struct ComputeArgs
{
  std::string N = "1";
  unsigned r    = 1;
  unsigned n    = 0;
  std::string route = "recurrence";
  std::optional<unsigned> decimal_digits;
  bool show_route = false;
};

int run_compute(ComputeArgs const &args, Session &session)
{
  std::string const value = compute_value(session.get(), args.route, args.N, args.r, args.n);
  std::cout << value;
  if (args.show_route)
  {
    std::cout << " (route: " << args.route << ")";
  }
  std::cout << '\n';
  if (args.decimal_digits)
  {
    std::cout << decimal(value, *args.decimal_digits) << '\n';
  }
  session.persist();
  return kExitOk;
}

struct TableArgs
{
  std::string N = "1";
  std::string r = "1";
  std::string n = "0..10";
  std::string format = "csv";
  std::string route  = "recurrence";
  std::string output;
  std::optional<unsigned> decimal_digits;
};

int run_table(TableArgs const &args, Session &session)
{
  Range const Ns = parse_range(args.N, "N");
  Range const rs = parse_range(args.r, "r");
  Range const ns = parse_range(args.n, "n");
  if (Ns.lo < 1 || rs.lo < 1)
  {
    throw CliFailure(kExitUsage, "N and r must be >= 1");
  }

  std::ostringstream out;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  if (args.format == "csv")
  {
    out << "N,r,n,value" << (args.decimal_digits ? ",decimal" : "") << '\n';
  }
  for (unsigned N = Ns.lo; N <= Ns.hi; ++N)
  {
    for (unsigned r = rs.lo; r <= rs.hi; ++r)
    {
      for (unsigned n = ns.lo; n <= ns.hi; ++n)
      {
        std::string const value = compute_value(session.get(), args.route, std::to_string(N), r, n);
        std::optional<std::string> dec;
        if (args.decimal_digits)
        {
          dec = decimal(value, *args.decimal_digits);
        }
        if (args.format == "csv")
        {
          out << N << ',' << r << ',' << n << ',' << value;
          if (dec)
          {
            out << ',' << *dec;
          }
          out << '\n';
        }
        else
        {
          nlohmann::ordered_json row = {{"N", N}, {"r", r}, {"n", n}, {"value", value}};
          if (dec)
          {
            row["decimal"] = *dec;
          }
          rows.push_back(std::move(row));
        }
      }
    }
  }
  if (args.format == "json")
  {
    out << rows.dump(2) << '\n';
  }

  if (args.output.empty())
  {
    std::cout << out.str();
  }
  else
  {
    std::ofstream file(args.output, std::ios::binary | std::ios::trunc);
    if (!file)
    {
      throw CliFailure(kExitUsage, "cannot write " + args.output);
    }
    file << out.str();
  }
  session.persist();
  return kExitOk;
}

//------------------------------------------------------------------------------
// verify

struct VerifyArgs
{
  std::string N = "1..5";
  std::string r = "1..3";
  std::string n = "0..14";
  std::string routes;
  unsigned threads = 0;
  std::string inject_fault;
};

int run_verify(VerifyArgs const &args, Session &session)
{
  Range const Ns = parse_range(args.N, "N");
  Range const rs = parse_range(args.r, "r");
  Range const ns = parse_range(args.n, "n");

  std::vector<std::string> routes = split(args.routes, ',');
  if (routes.empty())
  {
    for (size_t i = 0; i < hgb_route_count(); ++i)
    {
      routes.emplace_back(hgb_route_name(i));
    }
  }
  std::vector<char const *> route_ptrs;
  for (auto const &route : routes)
  {
    route_ptrs.push_back(route.c_str());
  }

  bool const faulted = !args.inject_fault.empty();
  if (faulted)
  {
    auto const parts = split(args.inject_fault, ',');
    if (parts.size() != 3)
    {
      throw CliFailure(kExitUsage, "--inject-fault expects N,r,n");
    }
    Range const r = parse_range(parts[1], "r");
    Range const n = parse_range(parts[2], "n");
    check(hgb_inject_fault(session.get(), parts[0].c_str(), r.lo, n.lo));
  }

  hgb_sweep_config config{};
  config.N_lo        = Ns.lo;
  config.N_hi        = Ns.hi;
  config.r_lo        = rs.lo;
  config.r_hi        = rs.hi;
  config.n_lo        = ns.lo;
  config.n_hi        = ns.hi;
  config.routes      = route_ptrs.data();
  config.route_count = route_ptrs.size();
  config.threads     = args.threads != 0 ? args.threads : std::max(1U, std::thread::hardware_concurrency());

  hgb_sweep_report report{};
  check(hgb_verify(session.get(), &config, &report));
  std::unique_ptr<hgb_sweep_report, decltype(&hgb_sweep_report_clear)> guard(&report, &hgb_sweep_report_clear);

  std::cout << "sweep N " << Ns.lo << ".." << Ns.hi << ", r " << rs.lo << ".." << rs.hi << ", n " << ns.lo << ".."
            << ns.hi << "; routes";
  for (auto const &route : routes)
  {
    std::cout << ' ' << route;
  }
  std::cout << '\n';
  std::cout << "points " << report.points << ", comparisons " << report.comparisons << '\n';
  if (report.ok)
  {
    std::cout << "all routes agree\n";
    if (!faulted)
    {
      session.persist();
    }
    return kExitOk;
  }
  std::string key = report.key;
  auto const fields = split(key, ' ');
  std::cout << "first disagreement at N=" << fields.at(0) << " r=" << fields.at(1) << " n=" << fields.at(2) << '\n'
            << "  " << report.reference_route << ": " << report.reference_value << '\n'
            << "  " << report.other_route << ": " << report.other_value << '\n';
  return kExitVerification;
}

//------------------------------------------------------------------------------
// congruence

struct CongruenceArgs
{
  std::string p = "5";
  std::string N;
  std::optional<unsigned long> ordp_target;
  unsigned m  = 0;
  unsigned n  = 0;
  unsigned nu = 0;
  bool verbose = false;
};

std::string resolve_N(CongruenceArgs const &args)
{
  if (!args.N.empty() && args.ordp_target)
  {
    throw CliFailure(kExitUsage, "give either -N or --ordp-target, not both");
  }
  if (args.ordp_target)
  {
    OwnedString out;
    check(hgb_n_from_ordp(args.p.c_str(), *args.ordp_target, &out.ptr));
    return out.str();
  }
  if (args.N.empty())
  {
    throw CliFailure(kExitUsage, "one of -N or --ordp-target is required");
  }
  return args.N;
}

int report_verdict(CongruenceArgs const &args, hgb_verdict *raw, std::optional<std::string> const &N)
{
  VerdictPtr verdict(raw, &hgb_verdict_destroy);
  hgb_verdict const *v = verdict.get();

  if (N)
  {
    std::cout << "N = " << *N << '\n';
  }
  if (args.verbose)
  {
    std::cout << "lhs = " << hgb_verdict_lhs(v) << '\n' << "rhs = " << hgb_verdict_rhs(v) << '\n';
  }
  if (char const *t = hgb_verdict_n_minus_one_ord(v))
  {
    std::cout << "ord_" << args.p << "(N-1) = " << t;
    if (long const required = hgb_verdict_required_ord(v); required >= 0)
    {
      std::cout << ", required >= " << required;
    }
    std::cout << '\n';
  }
  std::cout << "ord_" << args.p << "(lhs - rhs) = " << hgb_verdict_difference_ord(v) << '\n';

  bool const holds         = hgb_verdict_holds(v) != 0;
  char const *modulus      = hgb_verdict_modulus(v);
  char const *lhs_residue  = hgb_verdict_lhs_residue(v);
  char const *rhs_residue  = hgb_verdict_rhs_residue(v);
  std::cout << (holds ? "holds" : "fails");
  if (modulus == nullptr)
  {
    std::cout << " (exact equality)";
  }
  else if (lhs_residue != nullptr && rhs_residue != nullptr)
  {
    if (std::string(lhs_residue) == rhs_residue)
    {
      std::cout << "; residue " << lhs_residue << " (mod " << modulus << ")";
    }
    else
    {
      std::cout << "; residues " << lhs_residue << " and " << rhs_residue << " (mod " << modulus << ")";
    }
  }
  else
  {
    std::cout << " (mod " << modulus << ")";
  }
  std::cout << '\n';

  if (hgb_verdict_hypotheses_met(v) == 0)
  {
    for (size_t i = 0; i < hgb_verdict_violation_count(v); ++i)
    {
      std::cerr << hgb_verdict_violation(v, i) << '\n';
    }
    return kExitUsage;
  }
  return holds ? kExitOk : kExitVerification;
}

int run_congruence(std::string const &kind, CongruenceArgs const &args, Session &session)
{
  hgb_verdict *raw = nullptr;
  if (kind == "classical")
  {
    check(hgb_congruence_classical(session.get(), args.p.c_str(), args.m, args.n, args.nu, &raw));
    return report_verdict(args, raw, std::nullopt);
  }
  std::string const N = resolve_N(args);
  if (kind == "hb-factorial")
  {
    check(hgb_congruence_hb_factorial(session.get(), args.p.c_str(), N.c_str(), args.n, &raw));
  }
  else if (kind == "hb-kummer")
  {
    check(hgb_congruence_hb_kummer(session.get(), args.p.c_str(), N.c_str(), args.n, args.nu, &raw));
  }
  else
  {
    check(hgb_congruence_hb_pair(session.get(), args.p.c_str(), N.c_str(), args.m, args.n, args.nu, &raw));
  }
  return report_verdict(args, raw, N);
}

//------------------------------------------------------------------------------
// convergents / cache-audit

struct ConvergentArgs
{
  unsigned N  = 1;
  unsigned n  = 0;
  bool closed = false;
  bool check  = false;
};

int run_convergents(ConvergentArgs const &args, Session &session)
{
  OwnedString P;
  OwnedString Q;
  check(hgb_convergents(args.N, args.n, args.closed ? 1 : 0, &P.ptr, &Q.ptr));
  std::cout << "P = " << P.str() << ", Q = " << Q.str() << '\n';
  if (!args.check)
  {
    return kExitOk;
  }
  int zero = 0;
  OwnedString defect;
  check(hgb_convergent_defect(session.get(), args.N, args.n, &zero, &defect.ptr));
  if (zero != 0)
  {
    std::cout << "defect ≡ 0 mod x^" << args.n + 1 << '\n';
    return kExitOk;
  }
  std::cout << "defect ≢ 0 mod x^" << args.n + 1 << ": " << defect.str() << '\n';
  return kExitVerification;
}

struct AuditArgs
{
  unsigned samples   = 0;
  std::uint64_t seed = 0;
};

int run_cache_audit(AuditArgs const &args, std::optional<std::filesystem::path> const &cache)
{
  if (!cache)
  {
    throw CliFailure(kExitUsage, "cache-audit needs --cache PATH or HGBERN_CACHE");
  }
  if (!std::filesystem::exists(*cache))
  {
    throw CliFailure(kExitUsage, "no cache file at " + cache->string());
  }
  hgb_context *raw = nullptr;
  check(hgb_context_create(&raw));
  ContextPtr ctx(raw, &hgb_context_destroy);
  check(hgb_cache_load(ctx.get(), cache->c_str(), 0));

  size_t entries = 0;
  check(hgb_cache_size(ctx.get(), &entries));
  size_t checked = 0;
  int ok         = 0;
  OwnedString mismatch;
  check(hgb_cache_audit(ctx.get(), args.samples, args.seed, &checked, &ok, &mismatch.ptr));
  std::cout << "entries " << entries << ", audited " << checked << '\n';
  if (ok != 0)
  {
    std::cout << "audit ok\n";
    return kExitOk;
  }
  std::cout << "audit mismatch at " << mismatch.str() << '\n';
  return kExitVerification;
}

}  // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Exact hypergeometric Bernoulli numbers: compute, tabulate, cross-verify."};
  app.require_subcommand(1);
  app.fallthrough();
  std::string cache_flag;
  app.add_option("--cache", cache_flag, "Cache file (records 'N r n num/den')");

  ComputeArgs compute;
  auto *compute_cmd = app.add_subcommand("compute", "Print B_{N,n}^{(r)} as num/den");
  compute_cmd->add_option("-N", compute.N, "N >= 1 (decimal, any size for the recurrence route)");
  compute_cmd->add_option("-r", compute.r, "Order r >= 1");
  compute_cmd->add_option("-n", compute.n, "Index n >= 0")->required();
  compute_cmd->add_option("--route", compute.route, "Computation route");
  compute_cmd->add_option("--decimal", compute.decimal_digits, "Also print this many decimal digits");
  compute_cmd->add_flag("--show-route", compute.show_route, "Append the route used");

  TableArgs table;
  auto *table_cmd = app.add_subcommand("table", "Tabulate values over ranges");
  table_cmd->add_option("-N", table.N, "N or N_lo..N_hi");
  table_cmd->add_option("-r", table.r, "r or r_lo..r_hi");
  table_cmd->add_option("-n", table.n, "n or n_lo..n_hi");
  table_cmd->add_option("--format", table.format)->check(CLI::IsMember({"csv", "json"}));
  table_cmd->add_option("--route", table.route, "Computation route");
  table_cmd->add_option("-o,--output", table.output, "Write to a file instead of stdout");
  table_cmd->add_option("--decimal", table.decimal_digits, "Add a decimal column");

  VerifyArgs verify;
  auto *verify_cmd = app.add_subcommand("verify", "Cross-check routes over a grid");
  verify_cmd->add_option("-N", verify.N, "N range");
  verify_cmd->add_option("-r", verify.r, "r range");
  verify_cmd->add_option("-n", verify.n, "n range");
  verify_cmd->add_option("--routes", verify.routes, "Comma-separated routes (default: all)");
  verify_cmd->add_option("-j,--threads", verify.threads, "Worker threads (default: hardware)");
  verify_cmd->add_option("--inject-fault", verify.inject_fault, "Test mode: corrupt the memo entry N,r,n");

  std::string congruence_kind;
  CongruenceArgs congruence;
  auto *congruence_cmd = app.add_subcommand("congruence", "Check Kummer-type congruences");
  congruence_cmd->require_subcommand(1);
  for (char const *kind : {"classical", "hb-factorial", "hb-kummer", "hb-pair"})
  {
    auto *sub = congruence_cmd->add_subcommand(kind);
    sub->add_option("-p", congruence.p, "Prime")->required();
    sub->add_option("-n", congruence.n, "Index n")->required();
    sub->add_flag("-v,--verbose", congruence.verbose, "Print both sides");
    std::string const name = kind;
    if (name == "classical" || name == "hb-pair")
    {
      sub->add_option("-m", congruence.m, "Index m")->required();
    }
    if (name != "hb-factorial")
    {
      sub->add_option("--nu", congruence.nu, "Exponent nu; the modulus is p^(nu+1)");
    }
    if (name != "classical")
    {
      sub->add_option("-N", congruence.N, "N >= 1");
      sub->add_option("--ordp-target", congruence.ordp_target, "Use N = 1 + p^t");
    }
    sub->callback([&congruence_kind, name] { congruence_kind = name; });
  }

  ConvergentArgs convergents;
  auto *convergents_cmd = app.add_subcommand("convergents", "Print continued-fraction convergents P_n, Q_n");
  convergents_cmd->add_option("-N", convergents.N, "N >= 1");
  convergents_cmd->add_option("-n", convergents.n, "Index n >= 0")->required();
  convergents_cmd->add_flag("--closed", convergents.closed, "Use the closed form instead of the recurrence");
  convergents_cmd->add_flag("--check", convergents.check, "Check the approximation defect");

  AuditArgs audit;
  auto *audit_cmd = app.add_subcommand("cache-audit", "Recompute cached entries and compare");
  audit_cmd->add_option("--samples", audit.samples, "Entries to audit (0 = all)");
  audit_cmd->add_option("--seed", audit.seed, "Sampling seed");

  try
  {
    app.parse(argc, argv);
  }
  catch (CLI::CallForHelp const &e)
  {
    return app.exit(e);
  }
  catch (CLI::CallForAllHelp const &e)
  {
    return app.exit(e);
  }
  catch (CLI::ParseError const &e)
  {
    app.exit(e);
    return kExitUsage;
  }

  try
  {
    auto const cache = resolve_cache(cache_flag);
    if (audit_cmd->parsed())
    {
      return run_cache_audit(audit, cache);
    }
    Session session(cache);
    if (compute_cmd->parsed())
    {
      return run_compute(compute, session);
    }
    if (table_cmd->parsed())
    {
      return run_table(table, session);
    }
    if (verify_cmd->parsed())
    {
      return run_verify(verify, session);
    }
    if (congruence_cmd->parsed())
    {
      return run_congruence(congruence_kind, congruence, session);
    }
    if (convergents_cmd->parsed())
    {
      return run_convergents(convergents, session);
    }
  }
  catch (CliFailure const &e)
  {
    std::cerr << "error: " << e.what() << '\n';
    return e.code;
  }
  catch (std::exception const &e)
  {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerification;
  }
  return kExitUsage;
}
