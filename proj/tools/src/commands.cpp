#include "commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <sstream>
#include <variant>

#include "jetscheme/census/census.hpp"
#include "jetscheme/cli/dispatch.hpp"
#include "jetscheme/io/matrix_io.hpp"
#include "jetscheme/linalg/smith.hpp"
#include "jetscheme/loci/brill_noether.hpp"
#include "jetscheme/loci/lct.hpp"

namespace jetscheme::cli {

namespace {

json make_record(const std::string& command, json inputs, const std::string& method, json value) {
  return {{"command", command}, {"inputs", std::move(inputs)}, {"method", method}, {"value", std::move(value)}};
}

struct LoadedMatrix {
  AnyJetMatrix matrix;
  std::string source;
};

LoadedMatrix load_matrix(const MatrixArgs& args, std::istream& in) {
  if (args.file && args.text) throw UsageError("--file and --matrix are mutually exclusive");
  if (args.file) {
    std::ifstream file(*args.file);
    if (!file) throw UsageError("cannot open matrix file '" + *args.file + "'");
    const std::string body{std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
    return {parse_matrix(body), "file"};
  }
  if (args.text) {
    std::string body = *args.text;
    const auto first = body.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || body[first] != '{') std::replace(body.begin(), body.end(), ';', '\n');
    return {parse_matrix(body), "inline"};
  }
  const std::string body{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return {parse_matrix(body), "stdin"};
}

json matrix_inputs(const LoadedMatrix& loaded) {
  return {{"source", loaded.source}, {"matrix", matrix_to_json(loaded.matrix)}};
}

json parts_json(const Partition& lambda) { return lambda.parts(); }

template <class T>
const T& need(const std::optional<T>& value, const std::string& what) {
  if (!value) throw UsageError(what + " is required");
  return *value;
}

CensusMode parse_mode(const std::string& mode) {
  if (mode == "exhaustive") return CensusMode::exhaustive;
  if (mode == "random") return CensusMode::random;
  throw UsageError("--mode must be exhaustive or random");
}

json exponent_row_json(const ExponentRow& row) {
  json counts = json::object();
  for (const auto& [p, n] : row.counts) counts[std::to_string(p)] = n;
  json per_prime = json::object();
  for (const auto& [p, e] : row.per_prime) per_prime[std::to_string(p)] = e;
  return {{"stratum", row.stratum},
          {"counts", std::move(counts)},
          {"per_prime", std::move(per_prime)},
          {"exponent", row.exponent ? json(*row.exponent) : json(nullptr)},
          {"consistent", row.consistent}};
}

}  // namespace

std::uint64_t resolve_budget(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  const char* env = std::getenv(kBudgetEnv);
  if (env == nullptr || *env == '\0') return kDefaultCensusBudget;
  const std::string text(env);
  if (!std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }) || text.size() > 19) {
    throw UsageError(std::string(kBudgetEnv) + " must be a decimal integer, got '" + text + "'");
  }
  return std::stoull(text);
}

Output run_snf(const SnfArgs& args, std::istream& in) {
  const auto loaded = load_matrix(args.source, in);
  return std::visit(
      [&](const auto& A) {
        const auto snf = smith_normal_form(A);
        json value = {{"D", matrix_to_json(snf.D)},
                      {"U", matrix_to_json(snf.U)},
                      {"V", matrix_to_json(snf.V)},
                      {"diagonal_orders", snf.diagonal_orders},
                      {"unit_count", snf.unit_count},
                      {"type", snf.type.to_literal()},
                      {"type_parts", parts_json(snf.type)}};
        json oracle = {{"reconstructs", snf.U * A * snf.V == snf.D},
                       {"U_unit", snf.U.is_unit()},
                       {"V_unit", snf.V.is_unit()}};
        json record = make_record("snf", matrix_inputs(loaded), "pivoted-elimination", std::move(value));
        record["oracle_value"] = std::move(oracle);
        return Output{std::move(record), std::nullopt};
      },
      loaded.matrix);
}

Output run_type(const SnfArgs& args, std::istream& in) {
  const auto loaded = load_matrix(args.source, in);
  return std::visit(
      [&](const auto& A) {
        const auto snf = smith_normal_form(A);
        json record = make_record("type", matrix_inputs(loaded), "pivoted-elimination", snf.type.to_literal());
        record["oracle_value"] = type_by_minor_orders(A).to_literal();
        record["type_parts"] = parts_json(snf.type);
        record["unit_count"] = snf.unit_count;
        return Output{std::move(record), std::nullopt};
      },
      loaded.matrix);
}

Output run_member(const MemberArgs& args, std::istream& in) {
  const auto model =
      DeterminantalModel::make(need(args.g, "--g"), need(args.d, "--d"), need(args.r, "--r"), args.e);
  const auto loaded = load_matrix(args.source, in);
  const auto membership = std::visit([&](const auto& A) { return wrd_member(A, model); }, loaded.matrix);
  json inputs = matrix_inputs(loaded);
  inputs["g"] = model.g;
  inputs["d"] = model.d;
  inputs["r"] = model.r;
  inputs["e"] = model.e;
  inputs["model"] = {{"rows", model.a}, {"cols", model.b}, {"minor_size", model.s}};
  json record = make_record("member", std::move(inputs), "partition-criterion", membership.member);
  record["oracle_value"] = membership.oracle;
  record["type"] = membership.type.to_literal();
  return {std::move(record), std::nullopt};
}

Output run_h0(const H0Args& args, std::istream& in) {
  const auto loaded = load_matrix(args.source, in);
  return std::visit(
      [&](const auto& A) {
        const int m = A.order();
        const int level = args.level.value_or(m);
        if (level < 0 || level > m) {
          throw Error(ErrorKind::range, "level " + std::to_string(level) + " outside [0, " + std::to_string(m) + "]");
        }
        const Partition lambda = type_of(A);
        const auto kernel = module_kernel_dim(A.truncate(level));
        const int by_type = h0_from_type(lambda, level);
        json inputs = matrix_inputs(loaded);
        inputs["level"] = level;
        json record = make_record("h0", std::move(inputs), "linearized-kernel", kernel);
        record["oracle_value"] = by_type;
        record["type"] = lambda.to_literal();
        // The kernel law only holds when the module is at least as tall as it is wide.
        record["law_applies"] = A.cols() <= A.rows();
        return Output{std::move(record), std::nullopt};
      },
      loaded.matrix);
}

Output run_lct(const LctArgs& args) {
  if (!args.dims.empty() || args.ambient) {
    if (args.g || args.d || args.r || args.l) throw UsageError("--dims/--ambient exclude --g/--d/--r/--l");
    const int ambient = need(args.ambient, "--ambient");
    const auto estimate = mustata_lct(ambient, args.dims);
    json record = make_record("lct", {{"ambient", ambient}, {"dims", args.dims}}, "jet-dimension-formula",
                              estimate.value.to_string());
    record["lct"] = estimate.value.to_string();
    record["horizon"] = estimate.horizon;
    record["argmax_m"] = estimate.argmax_m;
    return {std::move(record), std::nullopt};
  }
  const BNParams p{need(args.g, "--g"), need(args.d, "--d"), need(args.r, "--r"), need(args.l, "--l")};
  const Rational closed = lct_closed_form(p);
  const Rational oracle = lct_lp_oracle(p);
  json record = make_record("lct", {{"g", p.g}, {"d", p.d}, {"r", p.r}, {"l", p.l}}, "closed-form", closed.to_string());
  record["oracle_value"] = oracle.to_string();
  record["lct"] = closed.to_string();
  return {std::move(record), std::nullopt};
}

Output run_bounds(const BoundsArgs& args) {
  json inputs = {{"kind", args.kind}};
  if (args.kind == "theta-stratum") {
    const int g = need(args.g, "--g");
    const int m = need(args.m, "--m");
    const Partition lambda = Partition::parse(need(args.partition, "--partition"));
    inputs.update({{"g", g}, {"m", m}, {"partition", lambda.to_literal()}});
    return {make_record("bounds", std::move(inputs), "stratum-formula", stratum_dim_bound_theta(lambda, g, m)),
            std::nullopt};
  }
  if (args.kind == "wrd-stratum") {
    BoundsQuery q;
    q.params = BNParams{need(args.g, "--g"), need(args.d, "--d"), need(args.r, "--r"), need(args.l, "--l")};
    q.m = need(args.m, "--m");
    const Partition lambda = Partition::parse(need(args.partition, "--partition"));
    inputs.update({{"g", q.params.g}, {"d", q.params.d}, {"r", q.params.r}, {"l", q.params.l}, {"m", q.m},
                   {"partition", lambda.to_literal()}});
    if (!args.defects.empty()) {
      q.defects = args.defects;
      inputs["defects"] = args.defects;
    }
    if (!args.kappa.empty()) {
      q.kappa = Signature(args.kappa);
      inputs["kappa"] = args.kappa;
    }
    return {make_record("bounds", std::move(inputs), "flag-stratum-formula", wrd_stratum_dim_bound(q, lambda)),
            std::nullopt};
  }
  if (args.kind == "theta-sing") {
    const int g = need(args.g, "--g");
    const int m = need(args.m, "--m");
    const auto b = theta_sing_fiber_bound(g, m);
    inputs.update({{"g", g}, {"m", m}});
    json value = {{"bound", b.bound},
                  {"ceiling", static_cast<std::int64_t>(m + 1) * (g - 1)},
                  {"tight_possible", b.tight_possible},
                  {"argmax_l", b.argmax_l},
                  {"argmax_partition", b.argmax_lambda.to_literal()}};
    return {make_record("bounds", std::move(inputs), "partition-maximization", std::move(value)), std::nullopt};
  }
  if (args.kind == "martens") {
    const int g = need(args.g, "--g");
    const int d = need(args.d, "--d");
    const int r = need(args.r, "--r");
    inputs.update({{"g", g}, {"d", d}, {"r", r}, {"hyperelliptic", args.hyperelliptic}});
    return {make_record("bounds", std::move(inputs), "martens", martens_bound(g, d, r, args.hyperelliptic)),
            std::nullopt};
  }
  if (args.kind == "theta-sing-dims") {
    const int g = need(args.g, "--g");
    const int horizon = need(args.horizon, "--horizon");
    inputs.update({{"g", g}, {"hyperelliptic", args.hyperelliptic}});
    json record = make_record("bounds", std::move(inputs), "first-level-propagation",
                              theta_sing_dims(g, horizon, args.hyperelliptic));
    record["horizon"] = horizon;
    return {std::move(record), std::nullopt};
  }
  throw UsageError("--kind must be one of theta-stratum, wrd-stratum, theta-sing, martens, theta-sing-dims");
}

Output run_census(const CensusArgs& args) {
  CensusSpec spec;
  spec.p = args.p;
  spec.a = args.rows;
  spec.b = args.cols;
  spec.m = args.order;
  spec.minor_sizes = args.minors;
  spec.mode = parse_mode(args.mode);
  spec.budget = resolve_budget(args.budget);
  if (spec.mode == CensusMode::random) {
    if (args.count == 0) throw UsageError("random mode needs --count");
    spec.count = args.count;
    spec.seed = args.seed;
  }
  if (args.shards == 0) throw UsageError("--shards must be positive");

  if (!args.primes.empty()) {
    if (spec.mode != CensusMode::exhaustive) throw UsageError("--primes needs exhaustive mode");
    if (args.csv) throw UsageError("--csv does not apply to exponent fits");
    std::vector<CensusReport> reports;
    json per_prime = json::object();
    for (std::uint32_t p : args.primes) {
      CensusSpec at = spec;
      at.p = p;
      reports.push_back(jetscheme::run_census(at, args.shards));
      per_prime[std::to_string(p)] = report_to_json(reports.back());
    }
    json rows = json::array();
    for (const auto& row : codim_exponents(reports)) rows.push_back(exponent_row_json(row));
    json inputs = report_to_json(reports.front())["spec"];
    inputs.erase("p");
    inputs["primes"] = args.primes;
    json record = make_record("census", std::move(inputs), "exponent-fit",
                              {{"reports", std::move(per_prime)}, {"exponents", std::move(rows)}});
    return {std::move(record), std::nullopt};
  }

  const CensusReport report = jetscheme::run_census(spec, args.shards);
  json body = report_to_json(report);
  json inputs = body["spec"];
  body.erase("spec");
  json record = make_record("census", std::move(inputs), args.mode, std::move(body));
  if (args.csv) return {std::move(record), report_to_csv(report)};
  return {std::move(record), std::nullopt};
}

Output run_mult(const MultArgs& args) {
  const std::size_t corank = args.corank.value_or(args.n);
  const int horizon = args.horizon.value_or(static_cast<int>(args.n) + 1);
  const std::uint64_t budget = resolve_budget(args.budget);
  json levels = json::array();
  std::vector<std::string> methods;
  const int multiplicity = multiplicity_from_jets(
      [&](int m) {
        const auto check = determinant_fiber_full(args.p, args.n, corank, m, budget);
        const std::string method(to_string(check.method));
        levels.push_back({{"m", m}, {"full", check.full}, {"method", method}, {"arcs_checked", check.arcs_checked}});
        if (std::find(methods.begin(), methods.end(), method) == methods.end()) methods.push_back(method);
        return check.full;
      },
      horizon);
  std::string method;
  for (const auto& name : methods) method += (method.empty() ? "" : "+") + name;
  json record = make_record("mult", {{"n", args.n}, {"corank", corank}, {"p", args.p}, {"budget", budget}}, method,
                            multiplicity);
  // Expected value: the multiplicity of det at a corank-c point is c.
  record["oracle_value"] = corank;
  record["horizon"] = horizon;
  record["levels"] = std::move(levels);
  return {std::move(record), std::nullopt};
}

Output run_identity(const IdentityArgs& args) {
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  json first_failure = nullptr;
  for (int l = 1; l <= args.l_max; ++l) {
    PartitionStream stream(l, args.part_max);
    while (auto lambda = stream.next()) {
      const auto sums = square_identity(*lambda);
      ++checked;
      if (sums.lhs != sums.rhs) {
        if (failures == 0) first_failure = {{"partition", lambda->to_literal()}, {"lhs", sums.lhs}, {"rhs", sums.rhs}};
        ++failures;
      }
    }
  }
  json record = make_record("identity", {{"l_max", args.l_max}, {"part_max", args.part_max}}, "exhaustive",
                            {{"checked", checked}, {"failures", failures}});
  record["checked"] = checked;
  record["failures"] = failures;
  if (failures != 0) record["first_failure"] = std::move(first_failure);
  return {std::move(record), std::nullopt};
}

Output run_classify(const ClassifyArgs& args) {
  if (args.theta_g) {
    if (args.n || !args.dims.empty()) throw UsageError("--theta-g excludes --n and --dims");
    const int g = *args.theta_g;
    const auto dims = theta_sing_dims(g, args.horizon, args.hyperelliptic);
    json record = make_record("classify", {{"theta_g", g}, {"hyperelliptic", args.hyperelliptic}, {"dims", dims}},
                              "theta-jet-dimensions", to_string(classify_singularities(g, dims)));
    record["horizon"] = args.horizon;
    return {std::move(record), std::nullopt};
  }
  const int n = need(args.n, "--n");
  if (args.dims.empty()) throw UsageError("--dims is required");
  const bool divisor = !args.non_divisor;
  json record = make_record("classify", {{"n", n}, {"dims", args.dims}, {"divisor", divisor}}, "jet-dimensions",
                            to_string(classify_singularities(n, args.dims, divisor)));
  record["horizon"] = static_cast<int>(args.dims.size());
  return {std::move(record), std::nullopt};
}

}  // namespace jetscheme::cli
