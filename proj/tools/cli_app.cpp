#include "cli_app.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wreath/bijections.hpp"
#include "wreath/identities.hpp"
#include "wreath/order_io.hpp"

namespace wreath::cli {

namespace {

using nlohmann::json;

// Bad input on the command line; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr double kGuardLimit = 1e7;

struct Config {
  std::uint32_t r = 1, n = 3;
  CLI::Option* r_opt = nullptr;
  CLI::Option* n_opt = nullptr;
  std::string order = "ar";
  CLI::Option* order_opt = nullptr;
  std::string from = "bz", to = "ar";
  std::string format = "json";
  std::string output;
  bool timing = false;
  bool force = false;
  unsigned threads = 1;

  std::string which;
  std::vector<std::string> input;

  std::uint32_t t_cap = 3, q_cap = 0, k1 = 3, k2 = 3, max_f = 0;
  CLI::Option* q_opt = nullptr;
  CLI::Option* k1_opt = nullptr;
  CLI::Option* k2_opt = nullptr;
  CLI::Option* max_f_opt = nullptr;
  std::string eta, comp, columns = "as_printed", rule = "as_defined", stats = "des,maj";
  bool exploratory = false;

  [[nodiscard]] bool has_r() const { return r_opt && r_opt->count() > 0; }
  [[nodiscard]] bool has_n() const { return n_opt && n_opt->count() > 0; }
  [[nodiscard]] std::optional<std::uint32_t> given_r() const {
    return has_r() ? std::optional<std::uint32_t>(r) : std::nullopt;
  }
};

std::string joined(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) out += (out.empty() ? "" : " ") + w;
  return out;
}

template <class F>
auto parse_input(F&& f) {
  try {
    return f();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

std::uint32_t parse_uint(const std::string& text) {
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || text[0] == '-') throw UsageError("not a nonnegative integer: '" + text + "'");
  return static_cast<std::uint32_t>(v);
}

Composition parse_composition(const std::string& text) {
  std::vector<std::uint32_t> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(parse_uint(item));
  return parse_input([&] { return Composition(std::move(parts)); });
}

Partition parse_partition(const std::string& text) {
  std::vector<std::uint32_t> parts;
  std::istringstream ss(text);
  std::string word;
  while (ss >> word) parts.push_back(parse_uint(word));
  return parse_input([&] { return Partition(std::move(parts)); });
}

OrderSpec resolve_order(const std::string& selector, std::uint32_t r, std::uint32_t n) {
  const Ambient amb{r, n};
  if (selector == "ar") return OrderSpec::ar(amb);
  if (selector == "bz") return OrderSpec::bz(amb);
  if (selector == "st") return OrderSpec::st(amb);
  if (selector == "reiner") {
    if (r != 2) throw UsageError("the reiner order needs --r 2");
    return OrderSpec::reiner(n);
  }
  if (selector.rfind("custom:", 0) == 0) {
    auto order = parse_input([&] { return load_order(selector.substr(7)); });
    if (order.r() != r || order.n() < n)
      throw UsageError("custom order covers r=" + std::to_string(order.r()) + ", n=" + std::to_string(order.n()) +
                       " but r=" + std::to_string(r) + ", n=" + std::to_string(n) + " is needed");
    return order;
  }
  if (selector.rfind("random:", 0) == 0) {
    const auto seed = parse_uint(selector.substr(7));
    return random_positive_dominant(r, std::max<std::uint32_t>(n, 1), seed);
  }
  throw UsageError("unknown order '" + selector + "' (ar|bz|st|reiner|custom:<path>|random:<seed>)");
}

void guard(const Config& c, double work, const std::string& what) {
  if (work > kGuardLimit && !c.force) {
    std::ostringstream msg;
    msg << what << " needs about " << work << " steps; pass --force to run it anyway";
    throw UsageError(msg.str());
  }
}

double group_work(std::uint32_t r, std::uint32_t n) { return std::pow(double(r), n) * std::tgamma(n + 1.0); }

void emit(const Config& c, const std::string& text, std::ostream& out) {
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.output);
  if (!file) throw UsageError("cannot write " + c.output);
  file << text;
}

void emit_json(const Config& c, const json& doc, std::ostream& out) { emit(c, doc.dump(2) + "\n", out); }

void require_json(const Config& c, const char* command) {
  if (c.format != "json") throw UsageError(std::string(command) + " only writes json");
}

std::vector<std::uint32_t> parts_of(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }
std::vector<std::uint32_t> parts_of(const Composition& p) { return {p.parts().begin(), p.parts().end()}; }

// --- stats -------------------------------------------------------------------

json stat_block(const OrderSpec& order, const ColoredPermutation& g) {
  return {{"window", format(g)},   {"des_set", des_set(order, g)}, {"des", des(order, g)},
          {"maj", maj(order, g)},  {"inv", inv(order, g)},         {"len", len(order, g)},
          {"col", col(g)}};
}

int cmd_stats(const Config& c, std::ostream& out) {
  const auto g = parse_input([&] { return parse_permutation(joined(c.input), c.given_r()); });
  if (c.has_n() && c.n != g.n()) throw UsageError("--n does not match the window length");
  const auto order = resolve_order(c.order, g.r(), g.n());
  const auto gi = inverse(g);
  if (c.format == "csv") {
    std::ostringstream os;
    os << "which,window,des,maj,inv,len,col\n";
    for (const auto& [name, p] : {std::pair{"permutation", &g}, std::pair{"inverse", &gi}})
      os << name << ',' << format(*p) << ',' << des(order, *p) << ',' << maj(order, *p) << ',' << inv(order, *p)
         << ',' << len(order, *p) << ',' << col(*p) << '\n';
    emit(c, os.str(), out);
    return kPass;
  }
  require_json(c, "stats");
  emit_json(c, {{"order", describe_order(order)}, {"permutation", stat_block(order, g)}, {"inverse", stat_block(order, gi)}},
            out);
  return kPass;
}

// --- bijection ---------------------------------------------------------------

int bijection_phi(const Config& c, std::ostream& out) {
  const auto f = parse_input([&] { return parse_sequence(joined(c.input), c.given_r()); });
  const auto order = resolve_order(c.order, f.r(), std::max(f.n(), c.has_n() ? c.n : 0));
  const auto img = phi(order, f);
  const bool roundtrip = phi_inverse(order, img.gamma, img.lambda) == f;
  const auto d = des(order, img.gamma);
  const auto m = maj(order, img.gamma);
  const bool max_ok = seq_max(f) == img.lambda.max() + d;
  const bool weight_ok = seq_weight(f) + m == img.lambda.weight() + std::uint64_t{f.n()} * d;
  emit_json(c,
            {{"which", "phi"},
             {"order", describe_order(order)},
             {"input", format(f)},
             {"gamma", format(img.gamma)},
             {"lambda", parts_of(img.lambda)},
             {"des", d},
             {"maj", m},
             {"max", {{"f", seq_max(f)}, {"lambda", img.lambda.max()}, {"holds", max_ok}}},
             {"weight", {{"f", seq_weight(f)}, {"lambda", img.lambda.weight()}, {"holds", weight_ok}}},
             {"roundtrip", roundtrip}},
            out);
  return roundtrip && max_ok && weight_ok ? kPass : kMismatch;
}

int bijection_block(const Config& c, std::ostream& out) {
  if (!c.comp.empty()) {
    const auto comp = parse_composition(c.comp);
    const auto g = parse_input([&] { return parse_permutation(joined(c.input), c.given_r()); });
    const auto order = resolve_order(c.order, g.r(), g.n());
    const auto f = block_encode(order, g, comp);
    const auto back = block_decode(order, f);
    const bool roundtrip = back.gamma == g && back.comp == comp;
    emit_json(c,
              {{"which", "block"},
               {"direction", "encode"},
               {"order", describe_order(order)},
               {"gamma", format(g)},
               {"composition", parts_of(comp)},
               {"sequence", format(f)},
               {"roundtrip", roundtrip}},
              out);
    return roundtrip ? kPass : kMismatch;
  }
  const auto f = parse_input([&] { return parse_sequence(joined(c.input), c.given_r()); });
  const auto order = resolve_order(c.order, f.r(), f.n());
  const auto img = block_decode(order, f);
  const bool roundtrip = block_encode(order, img.gamma, img.comp) == f;
  emit_json(c,
            {{"which", "block"},
             {"direction", "decode"},
             {"order", describe_order(order)},
             {"sequence", format(f)},
             {"gamma", format(img.gamma)},
             {"composition", parts_of(img.comp)},
             {"roundtrip", roundtrip}},
            out);
  return roundtrip ? kPass : kMismatch;
}

json sequence_stats(const OrderSpec& order, const ColoredSequence& f) {
  const auto g = gamma_of(order, f);
  return {{"sequence", format(f)}, {"gamma", format(g)}, {"len", len(order, g)}, {"inv", inv(order, g)},
          {"col", seq_col(f)}};
}

int bijection_psi(const Config& c, std::ostream& out) {
  const auto f = parse_input([&] { return parse_sequence(joined(c.input), c.given_r()); });
  const auto from = resolve_order(c.from, f.r(), f.n());
  const auto to = resolve_order(c.to, f.r(), f.n());
  const auto image = psi(from, to, f);
  const bool roundtrip = psi(to, from, image) == f;
  const bool preserved = sequence_inv(from, f) == sequence_inv(to, image) && seq_col(f) == seq_col(image) &&
                         composition_of(f) == composition_of(image);
  emit_json(c,
            {{"which", "psi"},
             {"from", describe_order(from)},
             {"to", describe_order(to)},
             {"input", sequence_stats(from, f)},
             {"image", sequence_stats(to, image)},
             {"composition", parts_of(composition_of(f))},
             {"preserved", preserved},
             {"roundtrip", roundtrip}},
            out);
  return roundtrip && preserved ? kPass : kMismatch;
}

int bijection_bipartite(const Config& c, std::ostream& out) {
  const auto text = joined(c.input);
  const auto bar = text.find('|');
  if (bar == std::string::npos) throw UsageError("bipartite input is 'g | f'");
  const auto rule = c.rule == "anchored" ? BipartiteRule::anchored : BipartiteRule::as_defined;
  if (c.rule != "anchored" && c.rule != "as_defined") throw UsageError("--rule is as_defined or anchored");
  auto top = parse_partition(text.substr(0, bar));
  auto bottom = parse_input([&] { return parse_sequence(text.substr(bar + 1), c.given_r()); });
  const auto b = make_bipartite(std::move(top), std::move(bottom), rule);
  const auto t = bipartite_split(b);
  const auto ok = triple_compatibility(t);
  json doc{{"which", "bipartite"},
           {"rule", to_string(rule)},
           {"top", parts_of(b.top)},
           {"bottom", format(b.bottom)},
           {"gamma", format(t.gamma)},
           {"lambda", parts_of(t.lambda)},
           {"mu", parts_of(t.mu)},
           {"compatibility", {{"mu_gamma", ok.mu_gamma}, {"lambda_gamma_inverse", ok.lambda_gamma_inverse}}}};
  bool roundtrip = false;
  try {
    roundtrip = bipartite_merge(t.gamma, t.lambda, t.mu, rule) == b;
  } catch (const DomainError& e) {
    doc["merge_error"] = e.what();
  }
  doc["roundtrip"] = roundtrip;
  emit_json(c, doc, out);
  return roundtrip ? kPass : kMismatch;
}

int cmd_bijection(const Config& c, std::ostream& out) {
  require_json(c, "bijection");
  if (c.which == "phi") return bijection_phi(c, out);
  if (c.which == "block") return bijection_block(c, out);
  if (c.which == "psi") return bijection_psi(c, out);
  if (c.which == "bipartite") return bijection_bipartite(c, out);
  throw UsageError("bijection is one of phi, block, psi, bipartite");
}

// --- verify ------------------------------------------------------------------

int cmd_verify(const Config& c, std::ostream& out) {
  require_json(c, "verify");
  const auto n = c.n;
  const auto r = c.r;
  VerificationReport report;
  bool asserted = true;

  if (c.which == "carlitz") {
    const auto n_max = c.has_n() ? n : 4;
    guard(c, group_work(1, n_max), "carlitz");
    const auto q_cap = c.q_opt->count() ? c.q_cap : n_max * c.t_cap + n_max * (n_max - (n_max > 0)) / 2;
    report = verify_carlitz(n_max, c.t_cap, q_cap);
  } else if (c.which == "gg1") {
    guard(c, group_work(1, n), "gg1");
    report = verify_gg1(n, c.t_cap);
  } else if (c.which == "gg2") {
    guard(c, group_work(1, n), "gg2");
    report = verify_gg2(n, std::max(c.k1, c.k2));
  } else if (c.which == "fiber") {
    if (c.eta.empty()) throw UsageError("fiber needs --eta");
    const auto eta = parse_input([&] { return parse_permutation(c.eta, c.given_r()); });
    const auto order = resolve_order(c.order, eta.r(), eta.n());
    const auto max_f = c.max_f_opt->count() ? c.max_f : c.t_cap;
    guard(c, std::pow(double(eta.r()) * max_f + 1, eta.n()), "fiber");
    report = parse_input([&] { return verify_fiber_identity(order, eta, max_f, c.t_cap); });
  } else if (c.which == "lemma43") {
    if (!c.comp.empty()) {
      const auto comp = parse_composition(c.comp);
      guard(c, group_work(r, comp.total()), "lemma43");
      report = verify_lemma43(r, comp, resolve_order(c.order, r, comp.total()));
    } else {
      guard(c, group_work(r, n), "lemma43");
      report = verify_lemma43_all(r, n, resolve_order(c.order, r, n));
    }
  } else if (c.which == "four") {
    guard(c, group_work(r, n), "four");
    const auto order = resolve_order(c.order, r, n);
    report = parse_input([&] { return verify_four_variate(r, n, c.t_cap, order, c.threads); });
  } else if (c.which == "six") {
    guard(c, group_work(r, n), "six");
    SixVariateOptions options;
    options.columns = parse_input([&] { return column_set_from_string(c.columns); });
    options.exploratory = c.exploratory;
    options.threads = c.threads;
    if (c.order_opt->count()) options.order = resolve_order(c.order, r, n);
    asserted = !c.exploratory;
    report = parse_input([&] { return verify_six_variate(r, n, c.k1, c.k2, options); });
  } else if (c.which == "bipartite-gf") {
    const auto rule = c.rule == "anchored" ? BipartiteRule::anchored : BipartiteRule::as_defined;
    if (c.rule != "anchored" && c.rule != "as_defined") throw UsageError("--rule is as_defined or anchored");
    const auto k1 = c.k1_opt->count() ? c.k1 : 2;
    const auto k2 = c.k2_opt->count() ? c.k2 : 2;
    guard(c, std::pow(double(r) * k2 + 1, n) * std::pow(double(k1) + 1, n), "bipartite-gf");
    report = verify_bipartite_gf(r, n, k1, k2, rule);
  } else {
    throw UsageError("verify is one of carlitz, gg1, gg2, fiber, lemma43, four, six, bipartite-gf");
  }

  emit_json(c, report.to_json(c.timing), out);
  return report.pass || !asserted ? kPass : kMismatch;
}

// --- dist --------------------------------------------------------------------

int cmd_dist(const Config& c, std::ostream& out) {
  const auto r = c.r, n = c.n;
  guard(c, group_work(r, n), "dist");
  const auto order = resolve_order(c.order, r, n);
  std::vector<Stat> stats;
  std::stringstream ss(c.stats);
  std::string name;
  while (std::getline(ss, name, ',')) stats.push_back(parse_input([&] { return stat_from_string(name); }));
  if (stats.empty()) throw UsageError("--stats lists at least one statistic");

  std::vector<StatBinding> bindings;
  std::vector<Variable> vars;
  std::vector<std::uint32_t> caps;
  const auto half = n * (n - (n > 0)) / 2;
  for (auto s : stats) {
    Variable v{};
    std::uint32_t cap = 0;
    switch (s) {
      case Stat::des: v = Variable::t, cap = n; break;
      case Stat::maj: v = Variable::q, cap = half; break;
      case Stat::inv: v = Variable::x, cap = half; break;
      case Stat::len: v = Variable::p, cap = max_len(r, n); break;
      case Stat::col: v = Variable::a, cap = n * (r - 1); break;
      case Stat::des_inv: v = Variable::t2, cap = n; break;
      case Stat::maj_inv: v = Variable::q2, cap = half; break;
      case Stat::col_inv: v = Variable::b, cap = n * (r - 1); break;
    }
    bindings.push_back({s, v});
    vars.push_back(v);
    caps.push_back(cap);
  }
  const auto space = parse_input([&] { return SeriesSpace(vars, caps); });
  const auto table = dist_table(r, n, order, bindings, space, c.threads);

  if (c.format == "csv") {
    std::ostringstream os;
    for (auto s : stats) os << to_string(s) << ',';
    os << "count\n";
    for (const auto& [e, coef] : table.terms()) {
      for (auto x : e) os << x << ',';
      os << coef << '\n';
    }
    emit(c, os.str(), out);
    return kPass;
  }
  require_json(c, "dist");
  std::vector<std::string> names;
  for (auto s : stats) names.push_back(to_string(s));
  emit_json(c, {{"r", r}, {"n", n}, {"order", describe_order(order)}, {"stats", names}, {"series", to_json(table)}},
            out);
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Colored permutation statistics, bijections and identity checks", "wreath"};
  app.require_subcommand(1);
  Config c;

  auto common = [&](CLI::App* sub) {
    c.r_opt = sub->add_option("--r", c.r, "number of colors");
    c.n_opt = sub->add_option("--n", c.n, "size (or size cap)");
    c.order_opt = sub->add_option("--order", c.order, "ar|bz|st|reiner|custom:<path>|random:<seed>");
    sub->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--output", c.output, "write here instead of stdout");
    sub->add_flag("--timing", c.timing, "include wall_ms in reports");
    sub->add_flag("--force", c.force, "skip the size guard");
    sub->add_option("--threads", c.threads, "worker threads for enumeration")->check(CLI::Range(1u, 256u));
  };

  auto* stats = app.add_subcommand("stats", "statistics of a colored permutation and its inverse");
  common(stats);
  stats->add_option("window", c.input, "window, e.g. 3^1 1^2 2^2")->required();

  auto* bij = app.add_subcommand("bijection", "run a bijection and its inverse");
  common(bij);
  bij->add_option("which", c.which, "phi|block|psi|bipartite")->required();
  bij->add_option("input", c.input, "sequence, permutation, or 'g | f'")->required();
  bij->add_option("--comp", c.comp, "composition for block encoding, e.g. 2,2,2");
  bij->add_option("--from", c.from, "source order for psi");
  bij->add_option("--to", c.to, "target order for psi");
  bij->add_option("--rule", c.rule, "bipartite membership rule: as_defined|anchored");

  auto* ver = app.add_subcommand("verify", "check an identity coefficientwise");
  common(ver);
  ver->add_option("which", c.which, "carlitz|gg1|gg2|fiber|lemma43|four|six|bipartite-gf")->required();
  ver->add_option("--t-cap", c.t_cap, "t truncation");
  c.q_opt = ver->add_option("--q-cap", c.q_cap, "q truncation (carlitz)");
  ver->add_option("--u-cap", c.n, "alias of --n for four");
  c.k1_opt = ver->add_option("--k1", c.k1, "k1 cap");
  c.k2_opt = ver->add_option("--k2", c.k2, "k2 cap");
  c.max_f_opt = ver->add_option("--max-f", c.max_f, "largest sequence value (fiber)");
  ver->add_option("--eta", c.eta, "fixed permutation (fiber)");
  ver->add_option("--comp", c.comp, "single composition (lemma43)");
  ver->add_option("--columns", c.columns, "as_printed|colored_entries|anchored (six)");
  ver->add_flag("--exploratory", c.exploratory, "allow non-A-R orders for six; result is not asserted");
  ver->add_option("--rule", c.rule, "as_defined|anchored (bipartite-gf)");

  auto* dist = app.add_subcommand("dist", "joint distribution of statistics over the group");
  common(dist);
  dist->add_option("--stats", c.stats, "comma list of des,maj,inv,len,col,des_inv,maj_inv,col_inv");

  std::vector<const char*> argv{"wreath"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kPass : kUsage;
  }

  for (auto* sub : {stats, bij, ver, dist}) {
    if (!sub->parsed()) continue;
    c.r_opt = sub->get_option("--r");
    c.n_opt = sub->get_option("--n");
    c.order_opt = sub->get_option("--order");
  }

  try {
    if (stats->parsed()) return cmd_stats(c, out);
    if (bij->parsed()) return cmd_bijection(c, out);
    if (ver->parsed()) return cmd_verify(c, out);
    return cmd_dist(c, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kMismatch;
  }
}

}  // namespace wreath::cli
