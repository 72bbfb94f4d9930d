#include "stieltjes/cli.hpp"

#include "stieltjes/convergent.hpp"
#include "stieltjes/enveloping.hpp"
#include "stieltjes/figures.hpp"
#include "stieltjes/oracles.hpp"
#include "stieltjes/stirling.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

namespace stieltjes::cli {

namespace {

using nlohmann::ordered_json;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  long m = 0;
  long n = 0;
  long k = 0;
  long terms = 0;
  long nodes = 4096;
  long corrections = 8;
  std::string radius = "0.5";
  std::string method;
  bool signed_values = false;
  long precision_bits = 128;
  std::string format = "text";
  std::string out_path;
  int figure_id = 0;
};

// One output value. Exact values are integers or "p/q" strings; inexact
// values carry their precision.
struct Field {
  enum class Kind { Exact, Inexact, Count, Text, ExactList };
  std::string key;
  Kind kind;
  std::string text;
  long precision = 0;
  std::vector<std::string> list = {};
};

Field exact(std::string key, const BigRational& q) { return {std::move(key), Field::Kind::Exact, to_string(q)}; }
Field exact(std::string key, const BigInt& z) { return {std::move(key), Field::Kind::Exact, z.get_str()}; }
Field count(std::string key, long v) { return {std::move(key), Field::Kind::Count, std::to_string(v)}; }
Field text(std::string key, std::string v) { return {std::move(key), Field::Kind::Text, std::move(v)}; }

Field inexact(std::string key, const BigFloat& x, const PrecisionContext& ctx) {
  return {std::move(key), Field::Kind::Inexact, x.rounded(ctx.bits()).to_decimal(ctx.printable_digits()),
          ctx.precision_bits};
}

Field inexact_short(std::string key, const BigFloat& x, const PrecisionContext& ctx) {
  return {std::move(key), Field::Kind::Inexact, x.to_scientific(kErrorDigits), ctx.precision_bits};
}

/// Exact rational also shown as a decimal.
void exact_with_decimal(std::vector<Field>& fields, const std::string& key, const BigRational& q,
                        const PrecisionContext& ctx) {
  fields.push_back(exact(key, q));
  fields.push_back(inexact(key + "_decimal", rational_to_float(q, ctx), ctx));
}

ordered_json to_json(const Field& f) {
  switch (f.kind) {
    case Field::Kind::Exact:
    case Field::Kind::Text: return f.text;
    case Field::Kind::Count: return std::stol(f.text);
    case Field::Kind::Inexact: return ordered_json{{"value", f.text}, {"precision_bits", f.precision}};
    case Field::Kind::ExactList: return f.list;
  }
  return nullptr;
}

std::string flat(const Field& f) {
  if (f.kind != Field::Kind::ExactList) return f.text;
  std::string s;
  for (std::size_t i = 0; i < f.list.size(); ++i) s += (i ? ";" : "") + f.list[i];
  return s;
}

// Text: primary value alone on the first line, then "key = value" lines.
void emit_record(const std::vector<Field>& fields, std::size_t primary, const std::string& format,
                 std::ostream& out) {
  if (format == "json") {
    ordered_json j = ordered_json::object();
    for (const auto& f : fields) j[f.key] = to_json(f);
    out << j.dump(2) << '\n';
  } else if (format == "csv") {
    Table t;
    std::vector<std::string> row;
    for (const auto& f : fields) {
      t.header.push_back(f.key);
      row.push_back(flat(f));
    }
    t.rows.push_back(row);
    t.write_csv(out);
  } else {
    out << flat(fields[primary]) << '\n';
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i == primary) continue;
      out << fields[i].key << " = " << flat(fields[i]) << '\n';
    }
  }
}

void emit_table(const Table& table, const std::string& format, std::ostream& out) {
  if (format == "json") {
    ordered_json rows = ordered_json::array();
    for (const auto& r : table.rows) {
      ordered_json obj = ordered_json::object();
      for (std::size_t i = 0; i < table.header.size(); ++i) obj[table.header[i]] = r[i];
      rows.push_back(obj);
    }
    out << rows.dump(2) << '\n';
  } else if (format == "csv") {
    table.write_csv(out);
  } else {
    std::vector<std::size_t> width(table.header.size());
    for (std::size_t i = 0; i < width.size(); ++i) {
      width[i] = table.header[i].size();
      for (const auto& r : table.rows) width[i] = std::max(width[i], r[i].size());
    }
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        out << cells[i];
        if (i + 1 < cells.size()) out << std::string(width[i] - cells[i].size() + 2, ' ');
      }
      out << '\n';
    };
    line(table.header);
    for (const auto& r : table.rows) line(r);
  }
}

std::size_t as_size(long v) { return static_cast<std::size_t>(v); }

// --- commands -----------------------------------------------------------

void cmd_stirling(const RunConfig& cfg, const PrecisionContext& ctx, std::ostream& out) {
  const std::string method = cfg.method.empty() ? "recurrence" : cfg.method;
  std::vector<Field> f{count("n", cfg.n), count("k", cfg.k), text("method", method)};
  const std::size_t n = as_size(cfg.n);
  const std::size_t k = as_size(cfg.k);
  if (k > n) throw std::invalid_argument("--k must not exceed --n");
  if (method == "recurrence" || method == "explicit") {
    BigInt v;
    if (method == "recurrence") {
      v = cfg.signed_values ? stirling1_signed(n, k) : stirling1_unsigned(n, k);
    } else {
      v = stirling1_explicit(n, k);
      if (!cfg.signed_values) v = abs(v);
    }
    f.push_back(exact("value", v));
  } else if (method == "contour" || method == "pochhammer-contour") {
    QuadratureEstimate q = method == "contour"
                               ? stirling1_contour(n, k, BigFloat(cfg.radius, ctx.bits()), as_size(cfg.nodes), ctx)
                               : stirling1_pochhammer_contour(n, k, as_size(cfg.nodes), ctx);
    f.push_back(inexact("value", q.value, ctx));
    f.push_back(inexact_short("error_estimate", q.error_estimate, ctx));
    f.push_back(count("nodes", cfg.nodes));
  } else {
    throw std::invalid_argument("unknown stirling method: " + method);
  }
  emit_record(f, 3, cfg.format, out);
}

void cmd_sequence(const RunConfig& cfg, const PrecisionContext& ctx, std::ostream& out) {
  const std::size_t n = as_size(cfg.n);
  BigRational v;
  if (cfg.command == "bernoulli") {
    v = bernoulli(n);
  } else if (cfg.command == "gregory") {
    v = gregory(n);
  } else {
    v = cauchy2(n);
  }
  std::vector<Field> f{count("n", cfg.n)};
  exact_with_decimal(f, "value", v, ctx);
  emit_record(f, 1, cfg.format, out);
}

void cmd_zeta(const RunConfig& cfg, const PrecisionContext& ctx, std::ostream& out) {
  const long N = cfg.terms > 0 ? cfg.terms : 10000;
  BigFloat v = zeta_by_stirling(as_size(cfg.k), as_size(N), ctx);
  std::vector<Field> f{count("k", cfg.k), count("terms", N), inexact("value", v, ctx)};
  emit_record(f, 2, cfg.format, out);
}

BigFloat reference_for(std::size_t m, const PrecisionContext& ctx) {
  return reference_stieltjes(m, ctx.precision_bits + 64);
}

void add_reference(std::vector<Field>& f, std::size_t m, const BigFloat& value, const PrecisionContext& ctx) {
  BigFloat ref = reference_for(m, ctx);
  f.push_back(inexact("reference", ref, ctx));
  f.push_back(inexact_short("abs_error", abs(value - ref), ctx));
}

std::vector<Field> stieltjes_fields(const std::string& method, std::size_t m, long terms, long corrections,
                                    const PrecisionContext& ctx) {
  std::vector<Field> f{count("m", static_cast<long>(m)), text("method", method)};
  if (method == "convergent") {
    const std::size_t N = terms > 0 ? as_size(terms) : 1000;
    ConvergentEvaluator eval({m}, ctx);
    eval.advance_to(N);
    BigFloat v = eval.partial(0);
    f.push_back(inexact("value", v, ctx));
    f.push_back(count("terms", static_cast<long>(N)));
    f.push_back(inexact_short("last_term", eval.last_term(0), ctx));
    add_reference(f, m, v, ctx);
  } else if (method == "enveloping") {
    const std::size_t N = terms > 0 ? as_size(terms) : 10;
    EnvelopingResult r = gamma_enveloping(m, N);
    const BigRational& a = r.partial_sums[r.optimal_N - 1];
    const BigRational& b = r.partial_sums[r.optimal_N];
    f.push_back(inexact("value", rational_to_float(r.optimal_estimate(), ctx), ctx));
    f.push_back(exact("estimate", r.optimal_estimate()));
    f.push_back(count("optimal_N", static_cast<long>(r.optimal_N)));
    f.push_back(exact("bracket_lower", std::min(a, b)));
    f.push_back(exact("bracket_upper", std::max(a, b)));
    f.push_back(inexact("bracket_lower_decimal", rational_to_float(std::min(a, b), ctx), ctx));
    f.push_back(inexact("bracket_upper_decimal", rational_to_float(std::max(a, b), ctx), ctx));
    f.push_back(exact("remainder_bound", r.remainder_bound));
    Field sums{"partial_sums", Field::Kind::ExactList, ""};
    for (const auto& s : r.partial_sums) sums.list.push_back(to_string(s));
    f.push_back(sums);
  } else if (method == "euler-transform") {
    const std::size_t N = terms > 0 ? as_size(terms) : 7;
    std::vector<BigRational> t = euler_transform_terms(m, N);
    BigRational sum = 0;
    Field list{"terms_exact", Field::Kind::ExactList, ""};
    for (const auto& x : t) {
      sum += x;
      list.list.push_back(to_string(x));
    }
    BigFloat v = rational_to_float(sum, ctx);
    f.push_back(inexact("value", v, ctx));
    f.push_back(exact("exact", sum));
    f.push_back(count("terms", static_cast<long>(N)));
    f.push_back(list);
    add_reference(f, m, v, ctx);
  } else if (method == "israilov") {
    const std::size_t n = terms > 0 ? as_size(terms) : 50;
    IsrailovResult r = gamma_israilov(m, n, as_size(corrections), ctx);
    f.push_back(inexact("value", r.value, ctx));
    f.push_back(count("n", static_cast<long>(n)));
    f.push_back(count("corrections", corrections));
    f.push_back(inexact_short("remainder", r.remainder, ctx));
  } else if (method == "jensen-franel") {
    QuadratureSpec spec = QuadratureSpec::for_context(ctx);
    BigFloat v = gamma_jensen_franel(m, spec);
    f.push_back(inexact("value", v, ctx));
    f.push_back(count("level", spec.level));
    f.push_back(count("truncation", spec.truncation));
    f.push_back(count("nodes", static_cast<long>(spec.node_count())));
  } else if (method == "coppo-ser") {
    const std::size_t N = terms > 0 ? as_size(terms) : 30;
    BigFloat v = gamma_m_coppo_ser(m, N, ctx);
    f.push_back(inexact("value", v, ctx));
    f.push_back(count("terms", static_cast<long>(N)));
    add_reference(f, m, v, ctx);
  } else {
    throw std::invalid_argument("unknown stieltjes method: " + method);
  }
  return f;
}

void cmd_stieltjes(const RunConfig& cfg, const PrecisionContext& ctx, std::ostream& out) {
  const std::size_t m = as_size(cfg.m);
  const std::string method = cfg.method.empty() ? "israilov" : cfg.method;
  if (method != "all") {
    emit_record(stieltjes_fields(method, m, cfg.terms, cfg.corrections, ctx), 2, cfg.format, out);
    return;
  }
  // Method comparison with default parameters; methods with a restricted
  // domain are skipped outside it.
  BigFloat ref = reference_for(m, ctx);
  Table t{{"method", "value", "abs_error"}, {}};
  std::vector<std::string> methods{"convergent", "enveloping", "euler-transform", "israilov", "jensen-franel"};
  if (m <= 3) methods.push_back("coppo-ser");
  for (const auto& name : methods) {
    if (name == "convergent" && m > 8) continue;
    std::vector<Field> f = stieltjes_fields(name, m, 0, cfg.corrections, ctx);
    BigFloat v(f[2].text, ctx.bits());
    t.rows.push_back({name, f[2].text, abs(v - ref).to_scientific(kErrorDigits)});
  }
  t.rows.push_back({"reference", ref.rounded(ctx.bits()).to_decimal(ctx.printable_digits()), "0"});
  emit_table(t, cfg.format, out);
}

void cmd_bounds(const RunConfig& cfg, const PrecisionContext& ctx, std::ostream& out) {
  const std::size_t m = as_size(cfg.m);
  RationalInterval iv = stieltjes_bounds(m);
  const std::string name = m == 0 ? "gamma" : "gamma_" + std::to_string(m);
  std::vector<Field> f{count("m", cfg.m),
                       text("interval", to_string(iv.lower) + " < " + name + " < " + to_string(iv.upper)),
                       exact("lower", iv.lower),
                       exact("upper", iv.upper),
                       inexact("lower_decimal", rational_to_float(iv.lower, ctx), ctx),
                       inexact("upper_decimal", rational_to_float(iv.upper, ctx), ctx),
                       exact("width", iv.width()),
                       count("sign", iv.sign())};
  if (m >= 1) {
    BoundsReport r = competitor_bounds(m, ctx);
    for (const auto& c : r.competitors()) {
      f.push_back(inexact(std::string(c.name), c.magnitude, ctx));
      f.push_back(text(std::string(c.name) + "_ours_tighter", c.ours_tighter ? "true" : "false"));
    }
  }
  emit_record(f, 1, cfg.format, out);
}

void cmd_figure(const RunConfig& cfg, const PrecisionContext& ctx, std::ostream& out) {
  Table t = figure_by_id(cfg.figure_id, ctx);
  if (cfg.format == "json") {
    emit_table(t, "json", out);
  } else {
    t.write_csv(out);
  }
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--precision-bits", cfg.precision_bits, "Working precision in bits")
      ->check(CLI::Range(64L, 1L << 20));
  sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  sub->add_option("--out", cfg.out_path, "Write output to this file instead of stdout");
}

CLI::Validator positive() { return CLI::PositiveNumber; }
CLI::Validator non_negative() { return CLI::NonNegativeNumber; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Stieltjes constants, Stirling numbers and related series", "stieltjes"};
  app.require_subcommand(1);

  auto* stirling = app.add_subcommand("stirling", "Stirling numbers of the first kind |S1(n,k)|");
  stirling->add_option("--n", cfg.n)->required()->check(positive());
  stirling->add_option("--k", cfg.k)->required()->check(positive());
  stirling->add_option("--method", cfg.method)
      ->check(CLI::IsMember({"recurrence", "explicit", "contour", "pochhammer-contour"}));
  stirling->add_option("--nodes", cfg.nodes, "Quadrature nodes for contour methods")->check(positive());
  stirling->add_option("--r", cfg.radius, "Contour radius in (0,1)");
  stirling->add_flag("--signed", cfg.signed_values, "Print signed S1(n,k) for exact methods");

  auto* bern = app.add_subcommand("bernoulli", "Bernoulli number B_n (B_1 = -1/2)");
  bern->add_option("--n", cfg.n)->required()->check(non_negative());
  auto* greg = app.add_subcommand("gregory", "Gregory coefficient G_n");
  greg->add_option("--n", cfg.n)->required()->check(positive());
  auto* cau = app.add_subcommand("cauchy2", "Cauchy number of the second kind C_{2,n}");
  cau->add_option("--n", cfg.n)->required()->check(positive());

  auto* st = app.add_subcommand("stieltjes", "Stieltjes constant gamma_m by a chosen method");
  st->add_option("--m", cfg.m)->required()->check(non_negative());
  st->add_option("--method", cfg.method)
      ->check(CLI::IsMember(
          {"convergent", "enveloping", "euler-transform", "israilov", "jensen-franel", "coppo-ser", "all"}));
  st->add_option("--terms", cfg.terms, "Series length (method specific)")->check(positive());
  st->add_option("--corrections", cfg.corrections, "Euler-Maclaurin corrections for israilov")->check(positive());

  auto* bounds = app.add_subcommand("bounds", "Rational bounds for gamma_m and published magnitude bounds");
  bounds->add_option("--m", cfg.m)->required()->check(non_negative());

  auto* zeta = app.add_subcommand("zeta-stirling", "sum_{n=k}^{N} |S1(n,k)|/(n n!) -> zeta(k+1)");
  zeta->add_option("--k", cfg.k)->required()->check(positive());
  zeta->add_option("--terms", cfg.terms, "Upper summation index N")->check(positive());

  auto* fig = app.add_subcommand("figure", "Emit the data table of a diagnostic figure as CSV");
  fig->add_option("id", cfg.figure_id, "Figure id")->required()->check(CLI::Range(1, 4));

  for (auto* sub : {stirling, bern, greg, cau, st, bounds, zeta, fig}) add_common(sub, cfg);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    PrecisionContext ctx(cfg.precision_bits, 32);
    std::ostringstream buffer;
    if (cfg.command == "stirling") {
      cmd_stirling(cfg, ctx, buffer);
    } else if (cfg.command == "bernoulli" || cfg.command == "gregory" || cfg.command == "cauchy2") {
      cmd_sequence(cfg, ctx, buffer);
    } else if (cfg.command == "stieltjes") {
      cmd_stieltjes(cfg, ctx, buffer);
    } else if (cfg.command == "bounds") {
      cmd_bounds(cfg, ctx, buffer);
    } else if (cfg.command == "zeta-stirling") {
      cmd_zeta(cfg, ctx, buffer);
    } else {
      cmd_figure(cfg, ctx, buffer);
    }
    if (cfg.out_path.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(cfg.out_path, std::ios::binary);
      if (!file) throw IoError("cannot open output file: " + cfg.out_path);
      file << buffer.str();
      if (!file.flush()) throw IoError("failed writing output file: " + cfg.out_path);
    }
  } catch (const NumericalAlarm& e) {
    err << "numerical alarm: " << e.what() << '\n';
    return kNumericalAlarm;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kSuccess;
}

}  // namespace stieltjes::cli
