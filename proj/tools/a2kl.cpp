// Command-line front end: tables of KL data for affine A2 and the verification suites.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "a2kl/cells.hpp"
#include "a2kl/coxeter.hpp"
#include "a2kl/extended.hpp"
#include "a2kl/hecke.hpp"
#include "a2kl/muclosed.hpp"
#include "a2kl/verify.hpp"
#include "a2kl/weights.hpp"

using namespace a2kl;
using nlohmann::json;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct Config {
  std::size_t max_len = 12;
  std::string cache_path;
  std::string format = "csv";
  unsigned jobs = 1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ExtElement parse_element(const std::string& text) {
  try {
    return ExtElement::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int cmd_enum(const Config& cfg) {
  const auto all = enumerate(cfg.max_len);
  if (cfg.format == "json") {
    json out = json::array();
    for (const Element& w : all) out.push_back({{"word", w.str()}, {"length", w.length()}});
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "word,length\n";
  for (const Element& w : all) std::cout << w.str() << "," << w.length() << "\n";
  return 0;
}

int cmd_kl(const Config& cfg, const std::string& us, const std::string& ws) {
  const ExtElement u = parse_element(us), w = parse_element(ws);
  const KLPoly p = kl_poly(u, w);
  const std::int64_t mu = mu_direct(u, w);
  const long long gap = static_cast<long long>(w.length()) - static_cast<long long>(u.length());
  if (cfg.format == "json")
    std::cout << json{{"u", u.str()}, {"w", w.str()}, {"P", p.str()}, {"mu", mu}, {"gap", gap}}.dump()
              << "\n";
  else
    std::cout << "P = " << p.str() << ", mu = " << mu << ", gap = " << gap << "\n";
  return 0;
}

int cmd_mu(const Config& cfg, const std::string& us, const std::string& ws,
           const std::string& method) {
  const ExtElement u = parse_element(us), w = parse_element(ws);
  json out = {{"u", u.str()}, {"w", w.str()}};
  std::string text;
  std::optional<std::int64_t> closed, direct;
  if (method != "direct") {
    if (u.omega() != w.omega() || !ext_bruhat_leq(u, w) || u == w)
      throw UsageError("the closed form needs u < w; got " + u.str() + ", " + w.str());
    const MuVerdict verdict = predict(u, w);
    closed = verdict.value;
    out["mu_closed"] = verdict.value;
    out["rule"] = to_string(verdict.rule);
    text += "mu_closed = " + std::to_string(verdict.value) + " (" + to_string(verdict.rule) + ")";
  }
  if (method != "closed") {
    direct = mu_direct(u, w);
    out["mu_direct"] = *direct;
    text += std::string(text.empty() ? "" : ", ") + "mu_direct = " + std::to_string(*direct);
  }
  const bool match = !closed || !direct || *closed == *direct;
  if (closed && direct) {
    out["match"] = match;
    text += match ? ", match" : ", MISMATCH";
  }
  std::cout << (cfg.format == "json" ? out.dump() : text) << "\n";
  return match ? 0 : kExitMismatch;
}

int cmd_mu_table(const Config& cfg, const std::string& path) {
  const auto rows = mu_table(cfg.max_len, cfg.jobs);
  std::ofstream file;
  if (!path.empty() && path != "-") {
    file.open(path);
    if (!file) throw std::runtime_error("cannot write " + path);
  }
  std::ostream& os = file.is_open() ? static_cast<std::ostream&>(file) : std::cout;
  std::size_t mismatches = 0;
  json arr = json::array();
  if (cfg.format != "json") os << "u,w,gap,mu_closed,rule,mu_direct,match\n";
  for (const MuRow& row : rows) {
    const bool match = row.mu_closed == row.mu_direct;
    mismatches += !match;
    const std::size_t gap = row.w.length() - row.u.length();
    if (cfg.format == "json")
      arr.push_back({{"u", row.u.str()},
                     {"w", row.w.str()},
                     {"gap", gap},
                     {"mu_closed", row.mu_closed},
                     {"rule", to_string(row.rule)},
                     {"mu_direct", row.mu_direct},
                     {"match", match}});
    else
      os << row.u.str() << "," << row.w.str() << "," << gap << "," << row.mu_closed << ","
         << to_string(row.rule) << "," << row.mu_direct << "," << (match ? "yes" : "no") << "\n";
  }
  if (cfg.format == "json") os << arr.dump(2) << "\n";
  std::cerr << rows.size() << " rows, " << mismatches << " mismatches\n";
  return mismatches ? kExitMismatch : 0;
}

int cmd_cells(const Config& cfg) {
  const auto rows = cell_report(cfg.max_len);
  if (cfg.format == "json") {
    json arr = json::array();
    for (const Element& w : enumerate(cfg.max_len)) {
      const CellLabel label = left_cell(w);
      arr.push_back({{"word", w.str()},
                     {"length", w.length()},
                     {"two_sided", to_string(label.two_sided)},
                     {"left_cell", to_string(label.left)}});
    }
    std::cout << arr.dump(2) << "\n";
    return 0;
  }
  std::cout << "word,length,two_sided,left_cell\n";
  for (const std::string& row : rows) std::cout << row << "\n";
  return 0;
}

int cmd_b_table(const Config& cfg, const std::string& lambda_text) {
  Weight top;
  try {
    top = Weight::parse(lambda_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!top.is_dominant()) throw UsageError("--lambda must be dominant");
  const auto table = b_table(top);
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& [lambda, b] : table)
      arr.push_back({{"lambda_m", lambda.m}, {"lambda_n", lambda.n}, {"b", b.str()},
                     {"coeffs", b.serialize()}});
    std::cout << arr.dump(2) << "\n";
    return 0;
  }
  std::cout << "lambda_m,lambda_n,coeffs\n";
  for (const auto& [lambda, b] : table)
    std::cout << lambda.m << "," << lambda.n << "," << b.serialize() << "\n";
  return 0;
}

int cmd_verify(const Config& cfg, const std::string& id, bool explicit_len) {
  VerifyOptions opts;
  opts.max_len = explicit_len ? cfg.max_len : 14;
  opts.jobs = cfg.jobs;
  std::vector<Report> reports;
  if (id == "all") {
    reports = verify_all(opts);
  } else {
    try {
      reports.push_back(verify(id, opts));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  bool ok = true;
  json arr = json::array();
  for (const Report& r : reports) {
    ok = ok && r.passed();
    if (cfg.format == "json") {
      json lines = json::array();
      for (const CheckLine& l : r.lines)
        lines.push_back(
            {{"what", l.what}, {"expected", l.expected}, {"actual", l.actual}, {"ok", l.ok}});
      arr.push_back({{"id", r.id}, {"passed", r.passed()}, {"lines", lines}});
      continue;
    }
    for (const CheckLine& l : r.lines)
      std::cout << (l.ok ? "ok   " : "FAIL ") << r.id << " " << l.what << ": expected "
                << l.expected << ", actual " << l.actual << "\n";
    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.id << "\n";
  }
  if (cfg.format == "json") std::cout << arr.dump(2) << "\n";
  return ok ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kazhdan-Lusztig data for the affine Weyl group of type A2"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value configuration file");

  Config cfg;
  auto* len_opt = app.add_option("--max-len,--max_len", cfg.max_len, "Length bound (at most 20)")
                      ->check(CLI::Range(0, static_cast<int>(kMaxEnumerationLength)));
  app.add_option("--format,--output_format", cfg.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--cache,--cache_path", cfg.cache_path, "KL cache file")->envname("A2KL_CACHE");

  auto* enum_cmd = app.add_subcommand("enum", "List the elements up to --max-len");

  std::string u_text, w_text, method = "both", out_path, lambda_text, verify_id;
  auto* kl_cmd = app.add_subcommand("kl", "KL polynomial P_{u,w} with mu and the length gap");
  kl_cmd->add_option("U", u_text)->required();
  kl_cmd->add_option("W", w_text)->required();

  auto* mu_cmd = app.add_subcommand("mu", "mu(u, w) from the closed form and/or the recursion");
  mu_cmd->add_option("U", u_text)->required();
  mu_cmd->add_option("W", w_text)->required();
  mu_cmd->add_option("--method", method)->check(CLI::IsMember({"closed", "direct", "both"}));

  auto* table_cmd = app.add_subcommand("mu-table", "All nonzero mu up to --max-len");
  table_cmd->add_option("--out", out_path, "Output file (stdout if omitted)");

  auto* cells_cmd = app.add_subcommand("cells", "Two-sided and left cells up to --max-len");

  auto* b_cmd = app.add_subcommand("b-table", "b-coefficients below a dominant weight");
  b_cmd->add_option("--lambda", lambda_text, "m,n")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  std::string ids_help = "One of: all";
  for (const std::string& id : verify_ids()) ids_help += " " + id;
  verify_cmd->add_option("ID", verify_id, ids_help)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const bool use_cache = !cfg.cache_path.empty();
  if (use_cache && std::filesystem::exists(cfg.cache_path)) {
    try {
      kl_table().load(cfg.cache_path);
    } catch (const std::exception& e) {
      kl_table().clear();
      std::cerr << "warning: ignoring KL cache: " << e.what() << "\n";
    }
  }

  int code = 0;
  try {
    if (*enum_cmd) code = cmd_enum(cfg);
    if (*kl_cmd) code = cmd_kl(cfg, u_text, w_text);
    if (*mu_cmd) code = cmd_mu(cfg, u_text, w_text, method);
    if (*table_cmd) code = cmd_mu_table(cfg, out_path);
    if (*cells_cmd) code = cmd_cells(cfg);
    if (*b_cmd) code = cmd_b_table(cfg, lambda_text);
    if (*verify_cmd) code = cmd_verify(cfg, verify_id, len_opt->count() > 0);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  }

  if (use_cache) {
    try {
      kl_table().save(cfg.cache_path);
    } catch (const std::exception& e) {
      std::cerr << "warning: KL cache not written: " << e.what() << "\n";
    }
  }
  return code;
}
