#pragma once

// Subcommand implementations behind the CLI11 front end. Each returns the JSON record for one
// invocation; a few also carry a raw text body (census --csv).

#include <nlohmann/json.hpp>

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace jetscheme::cli {

using nlohmann::json;

// Bad flag combinations and unreadable inputs; mapped to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultSeed = 1;

struct Output {
  json record;
  std::optional<std::string> raw;  // printed verbatim instead of the record when set
};

struct MatrixArgs {
  std::optional<std::string> file;
  std::optional<std::string> text;  // inline; ';' separates lines of the text form
};

struct SnfArgs {
  MatrixArgs source;
};

struct MemberArgs {
  MatrixArgs source;
  std::optional<int> g, d, r, e;
};

struct H0Args {
  MatrixArgs source;
  std::optional<int> level;
};

struct LctArgs {
  std::optional<int> g, d, r, l;
  std::optional<int> ambient;
  std::vector<std::int64_t> dims;
};

struct BoundsArgs {
  std::string kind;
  std::optional<int> g, d, r, l, m, horizon;
  std::optional<std::string> partition;
  std::vector<int> kappa;
  std::vector<int> defects;
  bool hyperelliptic = false;
};

struct CensusArgs {
  std::uint32_t p = 2;
  std::vector<std::uint32_t> primes;  // exponent fits when non-empty
  std::size_t rows = 1;
  std::size_t cols = 1;
  int order = 0;
  std::vector<std::size_t> minors;
  std::string mode = "exhaustive";
  std::uint64_t count = 0;
  std::uint64_t seed = kDefaultSeed;
  unsigned shards = 1;
  std::optional<std::uint64_t> budget;
  bool csv = false;
};

struct MultArgs {
  std::size_t n = 1;
  std::optional<std::size_t> corank;
  std::uint32_t p = 2;
  std::optional<int> horizon;
  std::optional<std::uint64_t> budget;
};

struct IdentityArgs {
  int l_max = 6;
  int part_max = 8;
};

struct ClassifyArgs {
  std::optional<int> n;
  std::vector<std::int64_t> dims;
  bool non_divisor = false;
  std::optional<int> theta_g;
  bool hyperelliptic = false;
  int horizon = 8;
};

Output run_snf(const SnfArgs& args, std::istream& in);
Output run_type(const SnfArgs& args, std::istream& in);
Output run_member(const MemberArgs& args, std::istream& in);
Output run_h0(const H0Args& args, std::istream& in);
Output run_lct(const LctArgs& args);
Output run_bounds(const BoundsArgs& args);
Output run_census(const CensusArgs& args);
Output run_mult(const MultArgs& args);
Output run_identity(const IdentityArgs& args);
Output run_classify(const ClassifyArgs& args);

// --budget, else the environment override, else the library default.
std::uint64_t resolve_budget(const std::optional<std::uint64_t>& flag);

}  // namespace jetscheme::cli
