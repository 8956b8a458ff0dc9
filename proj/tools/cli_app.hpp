#pragma once

// Command-line front end. run() takes the argument list without the program
// name and returns the process exit code, so tests can drive it in-process.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sturmian/calkin_wilf.hpp"
#include "sturmian/christoffel.hpp"
#include "sturmian/distribution.hpp"
#include "sturmian/error.hpp"
#include "sturmian/palindromization.hpp"
#include "sturmian/stern.hpp"
#include "sturmian/trees.hpp"
#include "sturmian/verify.hpp"

namespace sturmian::cli {

using Json = nlohmann::ordered_json;

enum class Format { text, json, csv };

inline constexpr std::size_t text_row_limit = 100'000;

// Above this the zeta evaluator (linear in n) is skipped by --method all.
inline constexpr std::uint64_t zeta_limit = 1'000'000;

struct Context {
  Format format = Format::text;
  Alphabet alphabet = Alphabet::ab;
  std::ostream& out;

  Word word(const std::string& text) const { return Word::parse(text, alphabet); }
  std::string str(const Word& w) const { return w.str(alphabet); }
  void emit(const Json& j) const { out << j.dump(2) << '\n'; }
  void require_not_csv(const char* command) const {
    if (format == Format::csv) fail(ErrorKind::parse, std::string("csv output is not available for '") + command + "'");
  }
};

namespace detail {

inline std::string join(const std::vector<std::size_t>& xs, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) s += sep;
    s += std::to_string(xs[i]);
  }
  return s;
}

// Keys print as digit strings (76421) when every position is a single digit.
inline std::string key_text(const std::vector<std::size_t>& key) {
  const bool compact = std::all_of(key.begin(), key.end(), [](std::size_t p) { return p < 10; });
  return join(key, compact ? "" : ".");
}

}  // namespace detail

inline void cmd_psi(const Context& ctx, const std::string& text) {
  ctx.require_not_csv("psi");
  const Word v = ctx.word(text);
  const Word p = psi(v);
  const auto pp = period_pair(v);
  if (ctx.format == Format::json) {
    ctx.emit({{"directive", ctx.str(v)}, {"psi", ctx.str(p)}, {"length", p.size()}, {"p_a", pp.p_a.str()},
              {"p_b", pp.p_b.str()}});
    return;
  }
  ctx.out << ctx.str(p) << " (|.|=" << p.size() << ", p_a=" << pp.p_a << ", p_b=" << pp.p_b << ")\n";
}

inline void cmd_closure(const Context& ctx, const std::string& text) {
  ctx.require_not_csv("closure");
  const Word w = ctx.word(text);
  const Word c = pal_closure(w);
  if (ctx.format == Format::json) {
    ctx.emit({{"word", ctx.str(w)}, {"closure", ctx.str(c)}, {"length", c.size()}});
    return;
  }
  ctx.out << ctx.str(c) << " (|.|=" << c.size() << ")\n";
}

inline void cmd_directive(const Context& ctx, const std::string& text) {
  ctx.require_not_csv("directive");
  const Word w = ctx.word(text);
  const auto v = psi_inverse(w);
  if (!v) fail(ErrorKind::not_in_class, "'" + ctx.str(w) + "' is not a central word");
  const auto pp = period_pair(*v);
  if (ctx.format == Format::json) {
    ctx.emit({{"word", ctx.str(w)}, {"directive", ctx.str(*v)}, {"length", w.size()}, {"p_a", pp.p_a.str()},
              {"p_b", pp.p_b.str()}});
    return;
  }
  ctx.out << ctx.str(*v) << " (|.|=" << w.size() << ", p_a=" << pp.p_a << ", p_b=" << pp.p_b << ")\n";
}

inline void cmd_christoffel(const Context& ctx, const std::optional<std::string>& slope,
                            const std::optional<std::string>& directive) {
  ctx.require_not_csv("christoffel");
  if (slope.has_value() == directive.has_value()) fail(ErrorKind::parse, "give exactly one of --slope or --directive");
  ChristoffelWord cw;
  if (slope) {
    const Fraction f = Fraction::parse(*slope);
    if (!is_irreducible_text(*slope)) fail(ErrorKind::precondition, "slope " + *slope + " is not irreducible");
    cw = christoffel_by_slope(f.num(), f.den());
  } else {
    cw = christoffel_by_directive(ctx.word(*directive));
  }
  const BigInt n = cw.word.size();
  Json j{{"word", ctx.str(cw.word)}, {"slope", cw.slope.str()}, {"length", cw.word.size()}, {"order", cw.order()}};
  j["directive"] = cw.directive ? Json(ctx.str(*cw.directive)) : Json(nullptr);
  std::optional<std::pair<ChristoffelWord, ChristoffelWord>> factors;
  if (cw.proper()) {
    factors = lyndon_factorization(cw);
    const auto& [w1, w2] = *factors;
    const BigInt c1 = BigInt(w1.word.size()) * cw.word.count(Letter::b) % n;
    const BigInt c2 = BigInt(w2.word.size()) * cw.word.count(Letter::a) % n;
    j["factorization"] = {ctx.str(w1.word), ctx.str(w2.word)};
    j["factor_lengths"] = {w1.word.size(), w2.word.size()};
    j["inverse_check"] = {{"modulus", cw.word.size()}, {"first", c1.str()}, {"second", c2.str()},
                          {"passed", c1 == 1 % n && c2 == 1 % n}};
  }
  if (ctx.format == Format::json) {
    ctx.emit(j);
    return;
  }
  auto& out = ctx.out;
  out << "word:          " << ctx.str(cw.word) << '\n';
  out << "slope:         " << cw.slope << '\n';
  out << "order:         " << cw.order();
  if (cw.directive) out << " (directive " << (cw.directive->empty() ? "eps" : ctx.str(*cw.directive)) << ')';
  out << '\n';
  if (!factors) {
    out << "factorization: none (single letter)\n";
    return;
  }
  const auto& [w1, w2] = *factors;
  out << "factorization: (" << ctx.str(w1.word) << ", " << ctx.str(w2.word) << ") lengths (" << w1.word.size() << ", "
      << w2.word.size() << ")\n";
  out << "inverse check: " << w1.word.size() << "*" << cw.word.count(Letter::b) << " = "
      << j["inverse_check"]["first"].get<std::string>() << ", " << w2.word.size() << "*" << cw.word.count(Letter::a)
      << " = " << j["inverse_check"]["second"].get<std::string>() << " (mod " << n << ")\n";
}

inline void cmd_stern(const Context& ctx, const std::string& n_text, const std::string& method) {
  ctx.require_not_csv("stern");
  const BigInt n = parse_bigint(n_text);
  if (n < 0) fail(ErrorKind::precondition, "n must be non-negative");
  std::vector<std::pair<std::string, BigInt>> values;
  std::vector<std::string> skipped;
  auto want = [&](const char* m) { return method == "all" || method == m; };
  if (want("recurrence")) values.emplace_back("recurrence", stern(n));
  if (want("christoffel")) values.emplace_back("christoffel", stern_via_christoffel(n));
  if (want("subwords")) values.emplace_back("subwords", stern_via_subwords(n));
  if (want("zeta")) {
    if (method == "zeta" && n < 2) fail(ErrorKind::precondition, "the zeta evaluator needs n >= 2");
    if (n >= 2 && n <= zeta_limit)
      values.emplace_back("zeta", stern_via_zeta(static_cast<std::uint64_t>(n)));
    else if (method == "zeta")
      fail(ErrorKind::budget, "the zeta evaluator is linear in n; limit is " + std::to_string(zeta_limit));
    else
      skipped.emplace_back("zeta");
  }
  for (const auto& [name, value] : values)
    if (value != values.front().second)
      fail(ErrorKind::disagreement, "evaluators disagree at n = " + n.str() + ": " + values.front().first + " gives " +
                                        values.front().second.str() + ", " + name + " gives " + value.str());
  const BigInt& value = values.front().second;
  if (ctx.format == Format::json) {
    Json methods = Json::object();
    for (const auto& [name, v] : values) methods[name] = v.str();
    ctx.emit({{"n", n.str()}, {"value", value.str()}, {"methods", methods}, {"skipped", skipped}});
    return;
  }
  if (values.size() > 1)
    for (const auto& [name, v] : values) ctx.out << name << ": " << v << '\n';
  for (const auto& name : skipped) ctx.out << name << ": skipped (n outside 2.." << zeta_limit << ")\n";
  ctx.out << "s(" << n << ") = " << value << '\n';
}

inline void cmd_occ(const Context& ctx, const std::string& text) {
  const Word w = ctx.word(text);
  const BigInt rows = period_pair(w).christoffel_length();
  if (ctx.format == Format::text && rows > text_row_limit)
    fail(ErrorKind::budget, rows.str() + " rows exceed the text limit of " + std::to_string(text_row_limit) +
                                "; use --format csv or json");
  const auto cw = noncommutative_cw(w);
  if (ctx.format == Format::json) {
    Json table = Json::array();
    for (const auto& m : cw.trace)
      table.push_back({{"key", m.reversed_key}, {"initial", m.occurrence.initial()}, {"marker", ctx.str(Word{m.marker})}});
    ctx.emit({{"word", ctx.str(w)}, {"host", ctx.str(Letter::b + w + Letter::b)}, {"rows", table},
              {"markers", ctx.str(cw.markers)}});
    return;
  }
  if (ctx.format == Format::csv) {
    ctx.out << "rank,key,positions,initial,marker\n";
    std::size_t rank = 0;
    for (const auto& m : cw.trace)
      ctx.out << ++rank << ',' << detail::join(m.reversed_key, ".") << ',' << detail::join(m.occurrence.positions, ".")
              << ',' << (m.occurrence.initial() ? 1 : 0) << ',' << ctx.str(Word{m.marker}) << '\n';
    return;
  }
  ctx.out << "host b" << ctx.str(w) << "b, " << cw.trace.size() << " occurrences of b(ab)*\n";
  ctx.out << "rank  key  initial  marker\n";
  std::size_t rank = 0;
  for (const auto& m : cw.trace)
    ctx.out << ++rank << "  " << detail::key_text(m.reversed_key) << "  " << (m.occurrence.initial() ? "yes" : "no")
            << "  " << ctx.str(Word{m.marker}) << '\n';
  ctx.out << "markers: " << ctx.str(cw.markers) << '\n';
}

inline void cmd_tree(const Context& ctx, const std::optional<std::string>& path_text,
                     const std::optional<std::string>& fraction, const std::string& flavor) {
  ctx.require_not_csv("tree");
  if (path_text.has_value() == fraction.has_value()) fail(ErrorKind::parse, "give exactly one of a path or --fraction");
  Word path;
  if (path_text) {
    path = ctx.word(*path_text);
  } else {
    const Fraction f = Fraction::parse(*fraction);
    if (!is_irreducible_text(*fraction)) fail(ErrorKind::precondition, "fraction " + *fraction + " is not irreducible");
    path = path_of_fraction(f, flavor == "raney" ? TreeFlavor::raney : TreeFlavor::stern_brocot);
  }
  const TreeNode node = tree_node(path);
  if (ctx.format == Format::json) {
    ctx.emit({{"path", ctx.str(path)}, {"nu", node.number.str()}, {"raney", node.raney.str()},
              {"stern_brocot", node.stern_brocot.str()}});
    return;
  }
  ctx.out << "path:   " << (path.empty() ? "eps" : ctx.str(path)) << '\n';
  ctx.out << "nu:     " << node.number << '\n';
  ctx.out << "Ra:     " << node.raney << '\n';
  ctx.out << "Sb:     " << node.stern_brocot << '\n';
}

inline void cmd_dist(const Context& ctx, unsigned k, const HistogramOptions& opts) {
  const LengthHistogram h = histogram(k, opts);
  const OrderSummary s = summarize(h);
  if (ctx.format == Format::csv) {
    ctx.out << "k,n,C_k(n)\n";
    for (const auto& [n, c] : h.counts) ctx.out << k << ',' << n << ',' << c << '\n';
    return;
  }
  if (ctx.format == Format::json) {
    Json counts = Json::array();
    for (const auto& [n, c] : h.counts) counts.push_back({n, c});
    ctx.emit({{"k", k}, {"M_k", s.max_count}, {"argmax", s.argmax}, {"missing", s.missing},
              {"missing_count", s.missing_count()}, {"counts", counts}});
    return;
  }
  ctx.out << "k = " << k << ", M_k = " << s.max_count << ", argmax = {" << detail::join(std::vector<std::size_t>(s.argmax.begin(), s.argmax.end()), ", ")
          << "}, missing lengths = " << s.missing_count() << '\n';
  for (const auto& [n, c] : h.counts) ctx.out << n << ' ' << c << '\n';
}

inline bool cmd_verify(const Context& ctx, const VerifyOptions& opts) {
  ctx.require_not_csv("verify");
  const auto results = run_verification(opts);
  const bool ok = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
  if (ctx.format == Format::json) {
    Json checks = Json::array();
    for (const auto& r : results) checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    ctx.emit({{"max_k", opts.max_k}, {"max_n", opts.max_n}, {"passed", ok}, {"checks", checks}});
  } else {
    for (const auto& r : results) {
      ctx.out << (r.passed ? "PASS  " : "FAIL  ") << r.name;
      if (!r.passed) ctx.out << "  [" << r.detail << ']';
      ctx.out << '\n';
    }
    ctx.out << (ok ? "all checks passed\n" : "some checks FAILED\n");
  }
  return ok;
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Central words, Christoffel words, Stern's sequence and their trees", "sturmian"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text", alphabet = "ab";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--alphabet", alphabet, "Letters used for words")->check(CLI::IsMember({"ab", "01"}));

  std::string word, n_text, method = "recurrence", flavor = "stern-brocot";
  std::optional<std::string> slope, directive, path, fraction;
  unsigned order = 0;
  HistogramOptions hist_opts;
  VerifyOptions verify_opts;

  auto* psi_cmd = app.add_subcommand("psi", "Iterated palindromic closure psi(v)");
  psi_cmd->add_option("word", word, "Directive word (eps for empty)")->required();
  auto* closure_cmd = app.add_subcommand("closure", "Palindromic closure w^(+)");
  closure_cmd->add_option("word", word)->required();
  auto* directive_cmd = app.add_subcommand("directive", "Directive word of a central word");
  directive_cmd->add_option("word", word)->required();

  auto* christoffel_cmd = app.add_subcommand("christoffel", "Lower Christoffel word and its standard factorization");
  christoffel_cmd->add_option("--slope", slope, "Slope p/q = |w|_b / |w|_a");
  christoffel_cmd->add_option("--directive", directive, "Directive word v of a psi(v) b");

  auto* stern_cmd = app.add_subcommand("stern", "Stern's diatomic sequence s(n)");
  stern_cmd->add_option("n", n_text)->required();
  stern_cmd->add_option("--method", method)
      ->check(CLI::IsMember({"all", "recurrence", "christoffel", "subwords", "zeta"}));

  auto* occ_cmd = app.add_subcommand("occ", "Sorted b(ab)* occurrences in bwb and their markers");
  occ_cmd->add_option("word", word)->required();

  auto* tree_cmd = app.add_subcommand("tree", "Tree node: numbering and Raney / Stern-Brocot labels");
  tree_cmd->add_option("path", path, "Path word from the root");
  tree_cmd->add_option("--fraction", fraction, "Locate a positive fraction p/q instead");
  tree_cmd->add_option("--flavor", flavor)->check(CLI::IsMember({"raney", "stern-brocot"}));

  auto* dist_cmd = app.add_subcommand("dist", "Length distribution of the Christoffel words of order k");
  dist_cmd->add_option("k", order)->required();
  dist_cmd->add_option("--max-order", hist_opts.max_order, "Refuse orders above this");
  dist_cmd->add_option("--threads", hist_opts.threads)->check(CLI::PositiveNumber);

  auto* verify_cmd = app.add_subcommand("verify", "Replay the identities over bounded domains");
  verify_cmd->add_option("--max-k", verify_opts.max_k, "Longest word examined")->check(CLI::Range(1u, 20u));
  verify_cmd->add_option("--max-n", verify_opts.max_n, "Largest Stern argument examined")->check(CLI::Range(16ull, 1ull << 22));

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : static_cast<int>(ErrorKind::parse);
  }

  Context ctx{format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text,
              alphabet == "01" ? Alphabet::digits : Alphabet::ab, out};
  try {
    if (psi_cmd->parsed()) cmd_psi(ctx, word);
    if (closure_cmd->parsed()) cmd_closure(ctx, word);
    if (directive_cmd->parsed()) cmd_directive(ctx, word);
    if (christoffel_cmd->parsed()) cmd_christoffel(ctx, slope, directive);
    if (stern_cmd->parsed()) cmd_stern(ctx, n_text, method);
    if (occ_cmd->parsed()) cmd_occ(ctx, word);
    if (tree_cmd->parsed()) cmd_tree(ctx, path, fraction, flavor);
    if (dist_cmd->parsed()) cmd_dist(ctx, order, hist_opts);
    if (verify_cmd->parsed() && !cmd_verify(ctx, verify_opts)) return static_cast<int>(ErrorKind::disagreement);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace sturmian::cli
