#include "jetscheme/cli/dispatch.hpp"

#include <CLI11.hpp>

#include <functional>
#include <ostream>

#include "commands.hpp"
#include "jetscheme/error.hpp"

namespace jetscheme::cli {

namespace {

void add_matrix_source(CLI::App* sub, MatrixArgs& source) {
  sub->add_option("--file", source.file, "Matrix file (text or JSON form)");
  sub->add_option("--matrix", source.text, "Inline matrix; ';' separates lines of the text form");
}

void print(const Output& output, bool as_text, std::ostream& out) {
  if (output.raw) {
    out << *output.raw;
    return;
  }
  if (!as_text) {
    out << output.record.dump() << '\n';
    return;
  }
  for (const auto& [key, value] : output.record.items()) {
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jet-scheme invariants of determinantal loci", "jetscheme"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::function<Output()> action;

  SnfArgs snf;
  auto* snf_cmd = app.add_subcommand("snf", "Normal form D = U A V with its type");
  add_matrix_source(snf_cmd, snf.source);
  snf_cmd->callback([&] { action = [&] { return run_snf(snf, in); }; });

  SnfArgs type;
  auto* type_cmd = app.add_subcommand("type", "Partition type of a jet matrix");
  add_matrix_source(type_cmd, type.source);
  type_cmd->callback([&] { action = [&] { return run_type(type, in); }; });

  MemberArgs member;
  auto* member_cmd = app.add_subcommand("member", "Jet membership in the determinantal model of W^r_d");
  add_matrix_source(member_cmd, member.source);
  member_cmd->add_option("--g", member.g, "Genus");
  member_cmd->add_option("--d", member.d, "Degree");
  member_cmd->add_option("--r", member.r, "Rank r of W^r_d");
  member_cmd->add_option("--e", member.e, "Auxiliary divisor degree (default 2g-d-1)");
  member_cmd->callback([&] { action = [&] { return run_member(member, in); }; });

  H0Args h0;
  auto* h0_cmd = app.add_subcommand("h0", "Kernel dimension of the module map against the type formula");
  add_matrix_source(h0_cmd, h0.source);
  h0_cmd->add_option("--level", h0.level, "Truncation level j (default m)");
  h0_cmd->callback([&] { action = [&] { return run_h0(h0, in); }; });

  LctArgs lct;
  auto* lct_cmd = app.add_subcommand("lct", "Log canonical threshold");
  lct_cmd->add_option("--g", lct.g, "Genus");
  lct_cmd->add_option("--d", lct.d, "Degree");
  lct_cmd->add_option("--r", lct.r, "Rank r of W^r_d");
  lct_cmd->add_option("--l", lct.l, "h^0 of the line bundle");
  lct_cmd->add_option("--ambient", lct.ambient, "Ambient dimension for the jet-dimension formula");
  lct_cmd->add_option("--dims", lct.dims, "Jet-locus dimensions at m = 0, 1, ...")->delimiter(',');
  lct_cmd->callback([&] { action = [&] { return run_lct(lct); }; });

  BoundsArgs bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "Dimension bounds for jet strata");
  bounds_cmd->add_option("--kind", bounds.kind, "Bound to evaluate")
      ->required()
      ->check(CLI::IsMember({"theta-stratum", "wrd-stratum", "theta-sing", "martens", "theta-sing-dims"}));
  bounds_cmd->add_option("--g", bounds.g, "Genus");
  bounds_cmd->add_option("--d", bounds.d, "Degree");
  bounds_cmd->add_option("--r", bounds.r, "Rank");
  bounds_cmd->add_option("--l", bounds.l, "h^0 of the line bundle");
  bounds_cmd->add_option("--m", bounds.m, "Jet level");
  bounds_cmd->add_option("--horizon", bounds.horizon, "Number of levels");
  bounds_cmd->add_option("--partition", bounds.partition, "Partition literal such as (1,2)@3");
  bounds_cmd->add_option("--kappa", bounds.kappa, "Signature kappa_1,...")->delimiter(',');
  bounds_cmd->add_option("--defects", bounds.defects, "Petri defects d_1,...")->delimiter(',');
  bounds_cmd->add_flag("--hyperelliptic", bounds.hyperelliptic, "Hyperelliptic curve");
  bounds_cmd->callback([&] { action = [&] { return run_bounds(bounds); }; });

  CensusArgs census;
  auto* census_cmd = app.add_subcommand("census", "Enumerate a matrix jet space over F_p");
  census_cmd->add_option("--p", census.p, "Prime");
  census_cmd->add_option("--primes", census.primes, "Primes for exponent fits")->delimiter(',');
  census_cmd->add_option("--rows", census.rows, "Rows")->required();
  census_cmd->add_option("--cols", census.cols, "Columns")->required();
  census_cmd->add_option("--order", census.order, "Jet order m")->required();
  census_cmd->add_option("--minor", census.minors, "Minor size s (repeatable; default all)")->delimiter(',');
  census_cmd->add_option("--mode", census.mode, "exhaustive or random")
      ->check(CLI::IsMember({"exhaustive", "random"}));
  census_cmd->add_option("--count", census.count, "Samples in random mode");
  census_cmd->add_option("--seed", census.seed, "Seed of the sample stream");
  census_cmd->add_option("--shards", census.shards, "Worker threads")->check(CLI::Range(1u, 256u));
  census_cmd->add_option("--budget", census.budget, std::string("Matrix budget (overrides ") + kBudgetEnv + ")");
  census_cmd->add_flag("--csv", census.csv, "Emit per-type counts as CSV");
  census_cmd->callback([&] { action = [&] { return run_census(census); }; });

  MultArgs mult;
  auto* mult_cmd = app.add_subcommand("mult", "Multiplicity of det from jet fibers at a corank-c center");
  mult_cmd->add_option("--n", mult.n, "Matrix size")->required()->check(CLI::Range(1, 16));
  mult_cmd->add_option("--corank", mult.corank, "Corank c of the center (default n)");
  mult_cmd->add_option("--p", mult.p, "Prime");
  mult_cmd->add_option("--horizon", mult.horizon, "Largest level tried (default n+1)");
  mult_cmd->add_option("--budget", mult.budget, "Arc budget per level");
  mult_cmd->callback([&] { action = [&] { return run_mult(mult); }; });

  IdentityArgs identity;
  auto* identity_cmd = app.add_subcommand("identity", "Check the square-sum partition identity exhaustively");
  identity_cmd->add_option("--l-max", identity.l_max, "Largest length")->check(CLI::Range(1, 12));
  identity_cmd->add_option("--part-max", identity.part_max, "Largest part")->check(CLI::Range(1, 12));
  identity_cmd->callback([&] { action = [&] { return run_identity(identity); }; });

  ClassifyArgs classify;
  auto* classify_cmd = app.add_subcommand("classify", "Read singularity evidence from jet dimensions");
  classify_cmd->add_option("--n", classify.n, "Ambient dimension (divisor) or dimension (lci)");
  classify_cmd->add_option("--dims", classify.dims, "Fiber dimensions over the singular locus, m = 1, ...")
      ->delimiter(',');
  classify_cmd->add_flag("--non-divisor", classify.non_divisor, "Treat as a non-divisor lci");
  classify_cmd->add_option("--theta-g", classify.theta_g, "Use the theta-divisor sequence of genus g");
  classify_cmd->add_flag("--hyperelliptic", classify.hyperelliptic, "Hyperelliptic curve");
  classify_cmd->add_option("--horizon", classify.horizon, "Levels of the theta sequence")->check(CLI::Range(1, 1000));
  classify_cmd->callback([&] { action = [&] { return run_classify(classify); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // --help and friends report success.
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) return app.exit(e, out, err);
    err << "jetscheme: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    print(action(), format == "text", out);
    return kExitOk;
  } catch (const UsageError& e) {
    err << "jetscheme: usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "jetscheme: parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "jetscheme: " << to_string(e.kind()) << " error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "jetscheme: internal error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace jetscheme::cli
