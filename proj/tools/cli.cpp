#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <functional>
#include <json.hpp>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "persym/census.hpp"
#include "persym/errors.hpp"
#include "persym/expsum.hpp"
#include "persym/formulas.hpp"
#include "persym/hankel.hpp"
#include "persym/laurent.hpp"

namespace persym::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Params {
  std::size_t s = 0, k = 0, m = 0, n = 0, rows = 0, l = 1;
  unsigned q = 1;
  std::vector<std::string> given;  // option names present on the command line

  bool has(const std::string& name) const { return std::ranges::find(given, name) != given.end(); }
  void need(std::initializer_list<const char*> names) const {
    for (const char* n : names)
      if (!has(n)) throw UsageError(std::string("missing required option --") + n);
  }
};

Json big(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
  if (v < 0 && v >= std::numeric_limits<std::int64_t>::min()) return v.convert_to<std::int64_t>();
  return to_string(v);
}

Json table_json(const RankTable& t) {
  Json j = Json::object();
  for (const auto& [i, c] : t) j[std::to_string(i)] = big(c);
  return j;
}

Json table_json(const ProfileTable& t) {
  Json j = Json::object();
  for (const auto& [p, c] : t) j[p.to_key()] = big(c);
  return j;
}

std::string table_csv(const RankTable& t, const std::string& prefix = {}) {
  std::string s;
  for (const auto& [i, c] : t) s += prefix + std::to_string(i) + "," + to_string(c) + "\n";
  return s;
}

UnitSeries series_from(std::uint64_t x, std::size_t offset, std::size_t precision) {
  const std::uint64_t mask = precision >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << precision) - 1;
  return UnitSeries::from_word((x >> offset) & mask, precision);
}

// ---- verify ---------------------------------------------------------------

struct Report {
  Json params = Json::object();
  Json computed = Json::object();
  Json expected = Json::object();
};

void add(Report& r, const std::string& key, const BigInt& computed, const BigInt& expected) {
  r.computed[key] = big(computed);
  r.expected[key] = big(expected);
}

void add(Report& r, const std::string& key, const DyadicRational& computed, const DyadicRational& expected) {
  r.computed[key] = computed.to_string();
  r.expected[key] = expected.to_string();
}

Report verify_gamma(const Params& p, const CensusOptions& opts) {
  p.need({"s", "k"});
  Report r;
  r.params = {{"s", p.s}, {"k", p.k}};
  r.computed = table_json(enum_gamma(p.s, p.k, opts));
  RankTable expected;
  for (std::size_t i = 0; i <= std::min(p.s, p.k); ++i) expected.add(i, persym_rank_count(p.s, p.k, i));
  r.expected = table_json(expected);
  return r;
}

Report verify_quadruple(const Params& p, const CensusOptions& opts) {
  p.need({"s", "k"});
  Report r;
  r.params = {{"l", p.l}, {"s", p.s}, {"k", p.k}};
  r.computed = table_json(enum_quadruple(p.l, p.s, p.k, opts));
  ProfileTable expected;
  const std::size_t top = std::min(p.s, p.k);
  for (std::size_t a = 0; a <= top; ++a)
    for (std::size_t b = 0; b <= top; ++b)
      for (std::size_t c = 0; c <= top; ++c)
        for (std::size_t d = 0; d <= top; ++d) {
          RankProfile q{a, b, c, d};
          expected.add(q, rank_profile_count(p.s, p.k, q));
        }
  r.expected = table_json(expected);
  return r;
}

// g over every coset of P/P_{k+s-1}, from the literal sum.
std::vector<BigInt> g_values(std::size_t s, std::size_t k, const CensusOptions& opts) {
  const std::size_t depth = k + s - 1;
  if (depth > opts.budget_bits) throw BudgetExceeded("g coset grid needs 2^" + std::to_string(depth) + " points");
  std::vector<BigInt> out;
  out.reserve(std::size_t{1} << depth);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << depth); ++x) out.push_back(g_direct(s, k, series_from(x, 0, depth)));
  return out;
}

DyadicRational even_power_prediction(std::size_t s, std::size_t k, unsigned q,
                                     const std::function<BigInt(std::size_t)>& diagonal) {
  DyadicRational sum = 0;
  for (std::size_t j = 0; j < s; ++j)
    sum += DyadicRational(diagonal(j)) * DyadicRational::pow2(-2 * static_cast<std::int64_t>(q * j));
  return DyadicRational::pow2(static_cast<std::int64_t>((s + k - 2) * (2 * q - 1))) * sum;
}

Report verify_g(const Params& p, const CensusOptions& opts) {
  p.need({"s", "k"});
  if (p.s < 2 || p.k < 2) throw UsageError("g needs s >= 2 and k >= 2");
  Report r;
  r.params = {{"s", p.s}, {"k", p.k}};
  const std::size_t depth = p.k + p.s - 1;
  const auto g = g_values(p.s, p.k, opts);
  std::uint64_t agree = 0;
  for (std::uint64_t x = 0; x < g.size(); ++x)
    if (g[x] == g_closed(p.s, p.k, series_from(x, 0, depth))) ++agree;
  add(r, "cosets_agreeing", BigInt(agree), BigInt(g.size()));
  for (unsigned q = 1; q <= 2; ++q) {
    BigInt sum = 0;
    for (const auto& v : g) sum += boost::multiprecision::pow(v, 2 * q);
    auto predicted = even_power_prediction(p.s, p.k, q, [&](std::size_t j) {
      return rank_profile_count(std::min(p.s, p.k), std::max(p.s, p.k), {j, j, j, j});
    });
    add(r, "integral_g^" + std::to_string(2 * q), DyadicRational(sum, -static_cast<std::int64_t>(depth)), predicted);
  }
  return r;
}

Report verify_stacked1(const Params& p, const CensusOptions& opts) {
  p.need({"m", "k"});
  Report r;
  r.params = {{"m", p.m}, {"k", p.k}};
  const auto census = enum_stacked_gamma(1, p.m, p.k, opts);
  const std::size_t top = std::min(p.k, 2 + p.m);
  for (std::size_t i = 0; i <= top; ++i) add(r, "recurrence/" + std::to_string(i), census.at(i), stacked1_rank_recurrence(p.m, p.k, i));
  for (std::size_t i = 0; i <= top; ++i)
    for (const auto& c : stacked1_printed_cases(p.m, p.k, i)) add(r, c.branch + "/" + std::to_string(i), census.at(i), c.value);
  return r;
}

Report verify_stacked(const Params& p, const CensusOptions& opts) {
  p.need({"n", "m", "k"});
  Report r;
  r.params = {{"n", p.n}, {"m", p.m}, {"k", p.k}};
  r.computed = table_json(enum_stacked_gamma(p.n, p.m, p.k, opts));
  RankTable expected;
  for (std::size_t i = 0; i <= std::min(p.k, p.n + p.m + 1); ++i) expected.add(i, stacked_rank_count(p.n, p.m, p.k, i));
  r.expected = table_json(expected);
  return r;
}

Report verify_coefficients(const Params& p, const CensusOptions& opts) {
  p.need({"n", "m", "k"});
  Report r;
  r.params = {{"n", p.n}, {"m", p.m}, {"k", p.k}};
  const auto terms = stacked_coefficient_table(p.n);
  const auto census = enum_stacked_gamma(p.n, p.m, p.k, opts);
  for (std::size_t i = 0; i <= std::min(p.k, p.n + p.m + 1); ++i) {
    DyadicRational v = 0;
    for (const auto& t : terms)
      if (t.j <= i) v += stacked_term_multiplier(t, i, p.k) * DyadicRational(persym_rank_count(1 + p.m, p.k, i - t.j));
    add(r, std::to_string(i), census.at(i), v.to_integer());
  }
  for (const auto& t : terms) add(r, "a/" + std::to_string(t.j), t.a_coeff, t.coefficient);
  return r;
}

Report verify_repcount(const Params& p, const CensusOptions& opts) {
  p.need({"q", "n", "k", "m"});
  Report r;
  r.params = {{"q", p.q}, {"n", p.n}, {"k", p.k}, {"m", p.m}};
  RankTable stacked;
  for (std::size_t i = 0; i <= std::min(p.k, p.n + p.m + 1); ++i) stacked.add(i, stacked_rank_count(p.n, p.m, p.k, i));
  add(r, "R", repcount_bruteforce(p.q, p.n, p.k, p.m, opts), repcount_multi_formula(p.q, p.n, p.k, p.m, stacked));
  return r;
}

Report verify_landsberg(const Params& p, const CensusOptions& opts) {
  p.need({"rows", "k"});
  Report r;
  r.params = {{"rows", p.rows}, {"k", p.k}};
  r.computed = table_json(enum_matrices(p.rows, p.k, opts));
  RankTable expected;
  for (std::size_t i = 0; i <= std::min(p.rows, p.k); ++i) expected.add(i, landsberg_count(p.rows, p.k, i));
  r.expected = table_json(expected);
  return r;
}

Report verify_partition(const Params& p, const CensusOptions& opts) {
  p.need({"s", "k"});
  if (p.s < 2 || p.k < 2) throw UsageError("partition checks need s >= 2 and k >= 2");
  const std::size_t s = p.s, k = p.k;
  Report r;
  r.params = {{"s", s}, {"k", k}};
  const auto quad = enum_quadruple(1, s, k, opts);
  auto cnt = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) { return quad.at({a, b, c, d}); };
  const std::size_t depth = k + s - 1;
  const auto g = g_values(s, k, opts);

  for (unsigned q = 0; q <= 2; ++q) {
    BigInt sum = 0;
    for (const auto& v : g) sum += boost::multiprecision::pow(v, 2 * q + 1);
    add(r, "odd_power_sum/" + std::to_string(2 * q + 1), sum, BigInt(0));
  }
  for (std::size_t j = 0; j < s; ++j) {
    const auto js = std::to_string(j);
    add(r, "diagonal_step/" + js, cnt(j, j, j, j), cnt(j, j, j, j + 1));
  }
  for (std::size_t j = 0; j + 2 <= s; ++j) {
    const auto js = std::to_string(j);
    add(r, "corner_rise/" + js, cnt(j, j + 1, j + 1, j + 1), BigInt(0));
    add(r, "column_rise/" + js, cnt(j, j + 1, j, j + 1), BigInt(0));
    add(r, "row_rise/" + js, cnt(j, j, j + 1, j + 1), BigInt(0));
  }
  const auto wide = enum_gamma(s, k - 1, opts);
  const auto tall = enum_gamma(s - 1, k, opts);
  for (std::size_t i = 0; i + 2 <= s; ++i) {
    const auto is = std::to_string(i);
    add(r, "shift/" + is, wide.at(i), tall.at(i));
    const BigInt split = 2 * cnt(i, i, i, i) + (i >= 1 ? cnt(i - 1, i, i, i + 1) : BigInt(0));
    add(r, "split/" + is, 2 * wide.at(i), split);
  }
  for (unsigned q = 1; q <= 2; ++q) {
    BigInt sum = 0;
    for (const auto& v : g) sum += boost::multiprecision::pow(v, 2 * q);
    add(r, "even_power_integral/" + std::to_string(2 * q), DyadicRational(sum, -static_cast<std::int64_t>(depth)),
        even_power_prediction(s, k, q, [&](std::size_t j) { return cnt(j, j, j, j); }));
  }
  return r;
}

Report verify_sigma(const Params& p, const CensusOptions& opts) {
  p.need({"m", "k"});
  Report r;
  r.params = {{"m", p.m}, {"k", p.k}};
  const auto sigma = enum_sigma(p.m, p.k, opts);
  const auto gamma = enum_gamma(1 + p.m, p.k, opts);
  const auto stacked = enum_stacked_gamma(1, p.m, p.k, opts);
  for (std::size_t i = 0; i <= std::min(p.k, p.m + 2); ++i) {
    const auto is = std::to_string(i);
    add(r, "equal/" + is, sigma.equal.at(i), pow2(i) * gamma.at(i));
    const BigInt inc = i == 0 ? BigInt(0) : (pow2(p.k) - pow2(i - 1)) * gamma.at(i - 1);
    add(r, "increment/" + is, sigma.increment.at(i), inc);
    add(r, "total/" + is, sigma.equal.at(i) + sigma.increment.at(i), stacked.at(i));
  }
  return r;
}

const std::map<std::string, std::function<Report(const Params&, const CensusOptions&)>>& verifiers() {
  static const std::map<std::string, std::function<Report(const Params&, const CensusOptions&)>> table = {
      {"thm3.1", verify_gamma},         {"thm3.3", verify_quadruple},   {"thm3.5", verify_g},
      {"thm3.8", verify_stacked1},      {"thm3.9", verify_stacked},     {"cor3.10", verify_coefficients},
      {"thm3.11", verify_repcount},     {"landsberg", verify_landsberg}, {"lemmas5.x", verify_partition},
      {"sigma6.x", verify_sigma},
  };
  return table;
}

// ---- repcount -------------------------------------------------------------

BigInt integral_repcount(unsigned q, std::size_t n, std::size_t k, std::size_t m, const CensusOptions& opts) {
  const std::size_t depth = k + m + n * k;
  if (depth > opts.budget_bits || depth > 40)
    throw BudgetExceeded("coset integral needs 2^" + std::to_string(depth) + " points, budget is 2^" +
                         std::to_string(opts.budget_bits));
  std::map<std::uint64_t, BigInt> values;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << depth); ++x) {
    const auto t = series_from(x, 0, k + m);
    std::vector<UnitSeries> etas;
    for (std::size_t j = 0; j < n; ++j) etas.push_back(series_from(x, k + m + j * k, k));
    values.emplace_hint(values.end(), x, boost::multiprecision::pow(fmulti_closed(m, k, t, etas), q));
  }
  return integrate_coset(values, static_cast<unsigned>(depth)).to_integer();
}

BigInt formula_repcount(unsigned q, std::size_t n, std::size_t k, std::size_t m, bool from_census,
                        const CensusOptions& opts) {
  if (n == 0) {
    RankTable gamma;
    if (from_census) gamma = enum_gamma(1 + m, k, opts);
    else
      for (std::size_t i = 0; i <= std::min(k, 1 + m); ++i) gamma.add(i, persym_rank_count(1 + m, k, i));
    return repcount_formula(q, 1 + m, k, gamma);
  }
  RankTable stacked;
  if (from_census) stacked = enum_stacked_gamma(n, m, k, opts);
  else
    for (std::size_t i = 0; i <= std::min(k, n + m + 1); ++i) stacked.add(i, stacked_rank_count(n, m, k, i));
  return repcount_multi_formula(q, n, k, m, stacked);
}

constexpr const char* kCheckpointHelp =
    "Checkpoint file (census commands): a text file whose first line is\n"
    "  # persym-census <kind> <params> bits=<N> chunk=<C>\n"
    "followed by one line per finished index range\n"
    "  <range_start> <range_end> <key>:<count> ...\n"
    "Rerunning the same census with the same file skips the recorded ranges.";

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank censuses of persymmetric matrices over F2 and the exponential sums built on them"};
  app.footer(kCheckpointHelp);
  app.require_subcommand(1);

  CensusOptions opts;
  std::string checkpoint;
  app.add_option("--threads", opts.threads, "Worker threads (0: hardware concurrency)");
  app.add_option("--budget-bits", opts.budget_bits, "Refuse enumerations over 2^N points")->capture_default_str();
  app.add_option("--checkpoint", checkpoint, "Resume file for long censuses (see below)");

  Params params;
  auto add_params = [&params](CLI::App* sub, std::initializer_list<const char*> names) {
    for (const std::string name : names) {
      CLI::Option* o = nullptr;
      if (name == "s") o = sub->add_option("--s", params.s, "Rows of the persymmetric block");
      else if (name == "k") o = sub->add_option("--k", params.k, "Columns");
      else if (name == "m") o = sub->add_option("--m", params.m, "Persymmetric block has 1+m rows");
      else if (name == "n") o = sub->add_option("--n", params.n, "Number of appended free rows");
      else if (name == "q") o = sub->add_option("--q", params.q, "Number of summands");
      else if (name == "rows") o = sub->add_option("--rows", params.rows, "Rows of an unstructured matrix");
      else if (name == "l") o = sub->add_option("--l", params.l, "Coefficient offset of the quadruple window");
      o->each([&params, name](const std::string&) { params.given.push_back(name); });
    }
  };

  auto* verify = app.add_subcommand("verify", "Compare an exhaustive census with its closed form");
  std::string verify_id;
  std::vector<std::string> ids;
  for (const auto& [id, fn] : verifiers()) ids.push_back(id);
  verify->add_option("id", verify_id, "Check to run")->required()->check(CLI::IsMember(ids));
  bool no_runtime = false;
  verify->add_flag("--no-runtime", no_runtime, "Report runtime_ms as 0 for reproducible output");
  add_params(verify, {"s", "k", "m", "n", "q", "rows", "l"});

  auto* census = app.add_subcommand("census", "Exhaustive rank census");
  std::string census_kind, format = "json";
  census->add_option("kind", census_kind, "gamma | quad | sigma | stacked")
      ->required()
      ->check(CLI::IsMember({"gamma", "quad", "sigma", "stacked"}));
  census->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  add_params(census, {"s", "k", "m", "n", "l"});

  auto* expsum = app.add_subcommand("expsum", "Evaluate an exponential sum directly and by its rank formula");
  std::string expsum_kind, t_literal;
  std::vector<std::string> eta_literals;
  expsum->add_option("kind", expsum_kind, "h | g | g2 | f2 | fmulti")
      ->required()
      ->check(CLI::IsMember({"h", "g", "g2", "f2", "fmulti"}));
  expsum->add_option("--t", t_literal, "Coefficients of t as a bit string, alpha_1 first")->required();
  expsum->add_option("--eta", eta_literals, "Coefficients of an eta (repeatable)");
  add_params(expsum, {"s", "k", "m"});

  auto* repcount = app.add_subcommand("repcount", "Count solutions of the bilinear system");
  std::string mode = "formula", gamma_source = "closed";
  bool check = false;
  repcount->add_option("--mode", mode, "formula | brute | integral")
      ->check(CLI::IsMember({"formula", "brute", "integral"}));
  repcount->add_flag("--check", check, "Run every mode that fits the budget and compare");
  repcount->add_option("--gamma-source", gamma_source, "Rank table for formula mode: closed | census")
      ->check(CLI::IsMember({"closed", "census"}));
  add_params(repcount, {"q", "n", "k", "m"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (!checkpoint.empty()) opts.checkpoint = checkpoint;

  try {
    if (verify->parsed()) {
      const auto start = std::chrono::steady_clock::now();
      Report r = verifiers().at(verify_id)(params, opts);
      const auto ms =
          std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
      const bool match = nlohmann::json::parse(r.computed.dump()) == nlohmann::json::parse(r.expected.dump());
      Json report = {{"params", r.params},
                     {"computed", r.computed},
                     {"expected", r.expected},
                     {"match", match},
                     {"runtime_ms", no_runtime ? 0 : ms}};
      out << report.dump() << '\n';
      return match ? 0 : 1;
    }

    if (census->parsed()) {
      const bool csv = format == "csv";
      if (census_kind == "gamma") {
        params.need({"s", "k"});
        const auto t = enum_gamma(params.s, params.k, opts);
        out << (csv ? "rank,count\n" + table_csv(t) : table_json(t).dump() + "\n");
      } else if (census_kind == "quad") {
        params.need({"s", "k"});
        const auto t = enum_quadruple(params.l, params.s, params.k, opts);
        if (csv) {
          out << "j1,j2,j3,j4,count\n";
          for (const auto& [p, c] : t) out << p.to_key() << ',' << to_string(c) << '\n';
        } else {
          out << table_json(t).dump() << '\n';
        }
      } else if (census_kind == "sigma") {
        params.need({"m", "k"});
        const auto t = enum_sigma(params.m, params.k, opts);
        if (csv)
          out << "table,rank,count\n" << table_csv(t.equal, "equal,") << table_csv(t.increment, "increment,");
        else
          out << Json{{"equal", table_json(t.equal)}, {"increment", table_json(t.increment)}}.dump() << '\n';
      } else {
        params.need({"n", "m", "k"});
        const auto t = enum_stacked_gamma(params.n, params.m, params.k, opts);
        out << (csv ? "rank,count\n" + table_csv(t) : table_json(t).dump() + "\n");
      }
      return 0;
    }

    if (expsum->parsed()) {
      const auto t = UnitSeries::from_literal(t_literal);
      std::vector<UnitSeries> etas;
      for (const auto& e : eta_literals) etas.push_back(UnitSeries::from_literal(e));
      BigInt direct, closed;
      if (expsum_kind == "h" || expsum_kind == "g") {
        params.need({"s", "k"});
        if (!etas.empty()) throw UsageError(expsum_kind + " takes no --eta");
        const bool h = expsum_kind == "h";
        direct = h ? h_direct(params.s, params.k, t) : g_direct(params.s, params.k, t);
        closed = h ? h_closed(params.s, params.k, t) : g_closed(params.s, params.k, t);
      } else if (expsum_kind == "g2" || expsum_kind == "f2") {
        params.need({"m", "k"});
        if (etas.size() != 1) throw UsageError(expsum_kind + " takes exactly one --eta");
        const bool g2 = expsum_kind == "g2";
        direct = g2 ? g2var_direct(params.m, params.k, t, etas[0]) : f2var_direct(params.m, params.k, t, etas[0]);
        closed = g2 ? g2var_closed(params.m, params.k, t, etas[0]) : f2var_closed(params.m, params.k, t, etas[0]);
      } else {
        params.need({"m", "k"});
        direct = fmulti_direct(params.m, params.k, t, etas);
        closed = fmulti_closed(params.m, params.k, t, etas);
      }
      out << "direct=" << direct << " closed=" << closed << " agree=" << (direct == closed ? "true" : "false") << '\n';
      return direct == closed ? 0 : 1;
    }

    params.need({"q", "k"});
    const bool from_census = gamma_source == "census";
    if (!check) {
      BigInt v;
      if (mode == "formula") v = formula_repcount(params.q, params.n, params.k, params.m, from_census, opts);
      else if (mode == "brute") v = repcount_bruteforce(params.q, params.n, params.k, params.m, opts);
      else v = integral_repcount(params.q, params.n, params.k, params.m, opts);
      out << v << '\n';
      return 0;
    }
    std::vector<std::pair<std::string, std::optional<BigInt>>> results;
    auto attempt = [&](const char* name, auto&& fn) {
      try {
        results.emplace_back(name, fn());
      } catch (const BudgetExceeded&) {
        results.emplace_back(name, std::nullopt);
      }
    };
    attempt("formula", [&] { return formula_repcount(params.q, params.n, params.k, params.m, from_census, opts); });
    attempt("brute", [&] { return repcount_bruteforce(params.q, params.n, params.k, params.m, opts); });
    attempt("integral", [&] { return integral_repcount(params.q, params.n, params.k, params.m, opts); });
    std::optional<BigInt> first;
    bool agree = true;
    for (const auto& [name, v] : results) {
      out << name << '=' << (v ? to_string(*v) : std::string("skipped")) << ' ';
      if (!v) continue;
      if (first && *first != *v) agree = false;
      if (!first) first = v;
    }
    if (!first) throw BudgetExceeded("no repcount mode fits the budget");
    out << "agree=" << (agree ? "true" : "false") << '\n';
    return agree ? 0 : 1;
  } catch (const CaseMismatch& e) {
    err << "mismatch: " << e.what() << '\n';
    return 1;
  } catch (const NonIntegerResult& e) {
    err << "mismatch: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace persym::cli
