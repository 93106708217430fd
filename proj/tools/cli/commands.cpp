#include "commands.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "genbell/coherent_states.hpp"
#include "genbell/dobinski.hpp"
#include "genbell/errata.hpp"
#include "genbell/generating_functions.hpp"
#include "genbell/measures.hpp"
#include "genbell/moment_analysis.hpp"
#include "genbell/normal_order.hpp"
#include "output.hpp"
#include "verify.hpp"

namespace genbell::cli {

namespace {

struct Globals {
  unsigned bits = 256;
  double tail_bound = 1e-30;
  double max_terms = 1e6;
  std::string format = "json";
  std::string out_path;
  bool timing = false;

  PrecisionContext context() const {
    PrecisionContext ctx;
    ctx.precision_bits = bits;
    ctx.tail_relative_bound = tail_bound;
    ctx.max_terms = static_cast<std::size_t>(max_terms);
    ctx.validate();
    return ctx;
  }
};

struct FamilyArgs {
  unsigned r = 1;
  unsigned s = 1;
  FamilyParams params() const { return FamilyParams(r, s); }
};

OutputRecord make_record(std::string command, Json parameters) {
  OutputRecord rec;
  rec.command = std::move(command);
  rec.parameters = std::move(parameters);
  return rec;
}

Json family_json(const FamilyParams& p) { return Json{{"r", p.r()}, {"s", p.s()}}; }

OutputRecord cmd_stirling(const FamilyArgs& f, unsigned n) {
  OutputRecord rec = make_record("stirling", family_json(f.params()));
  rec.parameters["n"] = n;
  const auto table = normal_order::stirling_table(f.params(), n);
  for (unsigned k = table.min_k(); k <= table.max_k(); ++k) rec.rows.push_back({{"k", k}, {"value", exact(table.at(k))}});
  rec.summary["row_sum"] = exact(table.row_sum());
  return rec;
}

OutputRecord cmd_bell(const FamilyArgs& f, unsigned max_n) {
  OutputRecord rec = make_record("bell", family_json(f.params()));
  rec.parameters["max_n"] = max_n;
  const auto seq = normal_order::bell_sequence(f.params(), max_n);
  for (unsigned n = 0; n <= max_n; ++n) rec.rows.push_back({{"n", n}, {"value", exact(seq[n])}});
  return rec;
}

OutputRecord cmd_dobinski(const FamilyArgs& f, unsigned n, const PrecisionContext& ctx) {
  OutputRecord rec = make_record("dobinski", family_json(f.params()));
  rec.parameters["n"] = n;
  rec.parameters["bits"] = ctx.precision_bits;
  const IntegerRecovery r = dobinski::dobinski_integer(f.params(), n, ctx);
  const BigInt want = normal_order::bell_number(f.params(), n);
  rec.rows.push_back({{"n", n},
                      {"approx", approx(r.approx)},
                      {"integer", exact(r.value)},
                      {"exact", exact(want)},
                      {"match", r.value == want},
                      {"certain", r.certain},
                      {"bits_used", r.bits_used}});
  return rec;
}

OutputRecord cmd_moments(const FamilyArgs& f, unsigned max_n, const PrecisionContext& ctx) {
  OutputRecord rec = make_record("moments", family_json(f.params()));
  rec.parameters["max_n"] = max_n;
  const auto spec = measures::WeightSpec::for_family(f.params());
  rec.summary["weight"] = measures::to_string(spec.kind());
  PrecisionScope scope(ctx.precision_bits);
  if (!spec.continuous()) {
    for (unsigned n = 1; n <= max_n; ++n) {
      const ApproxValue m = measures::comb_moment(f.r, n, ctx);
      const BigInt want = normal_order::bell_number(f.params(), n);
      const Real rel = abs(m.value - Real(want)) / Real(want);
      rec.rows.push_back({{"n", n}, {"exact", exact(want)}, {"moment", approx(m)}, {"relative_error", rel.to_double()}});
    }
    return rec;
  }
  for (const auto& rep : measures::moment_quadrature_batch(spec, max_n, ctx)) {
    rec.rows.push_back({{"n", rep.n},
                        {"exact", exact(rep.exact)},
                        {"moment", approx(rep.quadrature)},
                        {"relative_error", rep.relative_error}});
  }
  return rec;
}

OutputRecord cmd_hankel(const FamilyArgs& f, unsigned max_order) {
  OutputRecord rec = make_record("hankel", family_json(f.params()));
  rec.parameters["max_order"] = max_order;
  const auto seq = normal_order::bell_sequence(f.params(), 2 * max_order);
  for (unsigned order = 1; order <= max_order; ++order) {
    const auto h = moment_analysis::hankel_determinants(seq, order);
    rec.rows.push_back({{"order", order},
                        {"det0", exact(h.det0)},
                        {"det1", exact(h.det1)},
                        {"positive", h.det0 > 0 && h.det1 > 0}});
  }
  return rec;
}

OutputRecord cmd_egf(unsigned r, unsigned max_n) {
  OutputRecord rec = make_record("egf", Json{{"r", r}, {"max_n", max_n}});
  const auto series =
      r == 1 ? generating_functions::classical_egf_check(max_n) : generating_functions::egf_coefficients(r, max_n);
  const auto values = series.egf_values();
  for (unsigned n = 0; n <= max_n; ++n) {
    rec.rows.push_back({{"n", n}, {"coefficient", exact(series[n])}, {"value", exact(values[n])}});
  }
  return rec;
}

OutputRecord cmd_asympt(unsigned fam, const std::vector<unsigned>& ns, const PrecisionContext& ctx) {
  OutputRecord rec = make_record("asympt", Json{{"family", fam}, {"n", ns}});
  for (unsigned n : ns) {
    const auto rep = fam == 21 ? moment_analysis::asymptotic_b21(n, ctx) : moment_analysis::asymptotic_b31(n, ctx);
    rec.rows.push_back({{"n", n},
                        {"exact", exact(rep.exact)},
                        {"asymptotic", decimal(rep.asymptotic)},
                        {"ratio", rep.ratio.to_string(12)},
                        {"leading_only_ratio", rep.leading_only_ratio.to_string(12)}});
  }
  return rec;
}

Complex parse_complex(const std::string& text) {
  std::istringstream is(text);
  double re = 0.0;
  double im = 0.0;
  char comma = 0;
  is >> re;
  if (is && is.peek() == ',') is >> comma >> im;
  if (!is || !is.eof()) throw Error(ErrorCode::InvalidArgument, "--z expects RE or RE,IM, got '" + text + "'");
  return Complex(re, im);
}

OutputRecord cmd_coherent(const FamilyArgs& f, const std::string& z_text, unsigned cutoff,
                          const PrecisionContext& ctx) {
  OutputRecord rec = make_record("coherent", family_json(f.params()));
  rec.parameters["z"] = z_text;
  rec.parameters["cutoff"] = cutoff;
  PrecisionScope scope(ctx.precision_bits);
  const Complex z = parse_complex(z_text);
  const coherent_states::CoherentFamily fam(f.params());
  const auto state = coherent_states::state_coefficients(fam, z, cutoff, ctx);
  for (unsigned n = 0; n <= cutoff; ++n) {
    const Complex& c = state.coefficients[n];
    rec.rows.push_back({{"n", n}, {"rho", exact(fam.rho(n))}, {"re", c.re.to_string(20)}, {"im", c.im.to_string(20)}});
  }
  rec.summary["normalization"] = approx(coherent_states::normalization(fam, z.norm(), ctx));
  rec.summary["norm_squared"] = decimal(state.norm_squared());
  rec.summary["truncated_weight"] = state.truncated_weight.to_string(6);
  rec.summary["overlap_with_vacuum"] = approx(coherent_states::overlap(fam, z, Complex(0.0, 0.0), ctx));
  return rec;
}

OutputRecord cmd_errata() {
  OutputRecord rec = make_record("errata", Json::object());
  for (const Erratum& e : errata()) {
    rec.rows.push_back({{"id", e.id},
                        {"formula", e.formula},
                        {"observation", e.observation},
                        {"resolution", e.resolution},
                        {"test_id", e.test_id}});
  }
  return rec;
}

OutputRecord cmd_verify(const std::string& grid, const PrecisionContext& ctx, bool& passed) {
  OutputRecord rec = make_record("verify", Json{{"suite", "all"}, {"grid", grid}});
  const auto checks = run_verification(grid == "full" ? Grid::Full : Grid::Small, ctx);
  Json failures = Json::array();
  for (const Check& c : checks) {
    rec.rows.push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    if (!c.passed) failures.push_back(c.name);
  }
  passed = failures.empty();
  rec.summary["passed"] = passed;
  rec.summary["failures"] = failures;
  return rec;
}

void emit(const OutputRecord& rec, const Globals& g, std::ostream& out) {
  std::ofstream file;
  std::ostream* target = &out;
  if (!g.out_path.empty()) {
    file.open(g.out_path);
    if (!file) throw Error(ErrorCode::InvalidArgument, "cannot open " + g.out_path);
    target = &file;
  }
  if (g.format == "csv") {
    write_csv(*target, rec);
  } else {
    write_json(*target, rec);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Stirling and Bell numbers of boson normal ordering"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--bits", g.bits, "working precision in bits")->check(CLI::Range(64U, 1U << 20));
  app.add_option("--tail-bound", g.tail_bound, "relative truncation bound for series")->check(CLI::Range(1e-300, 0.5));
  app.add_option("--max-terms", g.max_terms, "series term limit")->check(CLI::Range(1.0, 1e12));
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", g.out_path, "write output to FILE instead of stdout");
  app.add_flag("--timing", g.timing, "include wall-clock timing in the record");

  FamilyArgs f;
  auto add_family = [&f](CLI::App* sub) {
    sub->add_option("--r", f.r, "creation power r")->required()->check(CLI::Range(1U, 64U));
    sub->add_option("--s", f.s, "annihilation power s")->required()->check(CLI::Range(1U, 64U));
  };
  unsigned n = 0;
  unsigned max_n = 0;
  unsigned max_order = 0;
  unsigned egf_r = 2;
  unsigned asympt_family = 21;
  std::vector<unsigned> asympt_n;
  std::string z_text = "1,0";
  unsigned cutoff = 40;
  std::string grid = "small";
  std::string suite;

  auto* stirling = app.add_subcommand("stirling", "row n of S_{r,s}(n,k)");
  add_family(stirling);
  stirling->add_option("--n", n)->required()->check(CLI::Range(0U, 2000U));

  auto* bell = app.add_subcommand("bell", "B_{r,s}(0..max_n)");
  add_family(bell);
  bell->add_option("--max-n", max_n)->required()->check(CLI::Range(0U, 2000U));

  auto* dob = app.add_subcommand("dobinski", "Dobinski series for B_{r,s}(n)");
  add_family(dob);
  dob->add_option("--n", n)->required()->check(CLI::Range(1U, 2000U));

  auto* moments = app.add_subcommand("moments", "moments of the weight function");
  add_family(moments);
  moments->add_option("--max-n", max_n)->required()->check(CLI::Range(1U, 64U));

  auto* hankel = app.add_subcommand("hankel", "Hankel determinants of B_{r,s}");
  add_family(hankel);
  hankel->add_option("--max-order", max_order)->required()->check(CLI::Range(1U, 64U));

  auto* egf = app.add_subcommand("egf", "EGF coefficients of B_{r,1}; r = 1 gives the classical Bell EGF");
  egf->add_option("--r", egf_r)->required()->check(CLI::Range(1U, 64U));
  egf->add_option("--max-n", max_n)->required()->check(CLI::Range(0U, 400U));

  auto* asympt = app.add_subcommand("asympt", "exact versus two-term asymptotics");
  asympt->add_option("--family", asympt_family)->required()->check(CLI::IsMember({21U, 31U}));
  asympt->add_option("--n", asympt_n)->required()->check(CLI::Range(1U, 5000U));

  auto* coherent = app.add_subcommand("coherent", "coherent-state amplitudes");
  add_family(coherent);
  coherent->add_option("--z", z_text, "RE,IM")->required();
  coherent->add_option("--cutoff", cutoff)->check(CLI::Range(1U, 2000U));

  auto* verify = app.add_subcommand("verify", "cross-validation suite");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember({"all"}));
  verify->add_option("--grid", grid)->check(CLI::IsMember({"small", "full"}));

  auto* errata_cmd = app.add_subcommand("errata", "corrected formulas and their tests");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const PrecisionContext ctx = g.context();
    const auto start = std::chrono::steady_clock::now();
    OutputRecord rec;
    int code = kExitOk;
    if (stirling->parsed()) {
      rec = cmd_stirling(f, n);
    } else if (bell->parsed()) {
      rec = cmd_bell(f, max_n);
    } else if (dob->parsed()) {
      rec = cmd_dobinski(f, n, ctx);
    } else if (moments->parsed()) {
      rec = cmd_moments(f, max_n, ctx);
    } else if (hankel->parsed()) {
      rec = cmd_hankel(f, max_order);
    } else if (egf->parsed()) {
      rec = cmd_egf(egf_r, max_n);
    } else if (asympt->parsed()) {
      rec = cmd_asympt(asympt_family, asympt_n, ctx);
    } else if (coherent->parsed()) {
      rec = cmd_coherent(f, z_text, cutoff, ctx);
    } else if (verify->parsed()) {
      bool passed = false;
      rec = cmd_verify(grid, ctx, passed);
      if (!passed) code = kExitFailure;
    } else if (errata_cmd->parsed()) {
      rec = cmd_errata();
    }
    if (g.timing) {
      rec.timing_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    emit(rec, g, out);
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::InvalidArgument ? kExitUsage : kExitFailure;
  }
}

}  // namespace genbell::cli
