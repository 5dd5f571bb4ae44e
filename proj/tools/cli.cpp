#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

namespace hvec::cli {

using nlohmann::json;

namespace {

struct Predicate {
  explicit Predicate(std::string n) : name(std::move(n)) {}

  std::string name;
  bool holds = true;
  std::optional<std::size_t> degree;
  std::string detail;
};

std::string describe(const GrowthViolation& g) {
  std::ostringstream os;
  os << "step " << g.degree << "->" << g.degree + 1 << ": " << g.value.get_str()
     << " -> " << g.next.get_str() << " exceeds Macaulay bound "
     << g.bound.get_str();
  return os.str();
}

Predicate difference_predicate(std::string name, std::span<const Integer> seq) {
  Predicate p(std::move(name));
  const auto v = first_difference_violation(seq);
  if (!v) return p;
  p.holds = false;
  p.degree = v->degree;
  switch (v->kind) {
    case DifferenceViolation::Kind::Negative:
      p.detail = "negative difference at degree " + std::to_string(v->degree);
      break;
    case DifferenceViolation::Kind::InternalZero:
      p.detail = "difference is positive at degree " +
                 std::to_string(v->degree) + " after a zero";
      break;
    case DifferenceViolation::Kind::Growth:
      p.detail = "difference " + describe(*v->growth);
      break;
  }
  return p;
}

std::vector<Predicate> classify(const HVector& h) {
  std::vector<Predicate> out;

  Predicate o("o_sequence");
  if (auto g = first_growth_violation(h.entries())) {
    o.holds = false;
    o.degree = g->degree;
    o.detail = describe(*g);
  }
  out.push_back(o);

  Predicate sym("symmetric");
  const auto asym = first_asymmetry(h);
  if (asym) {
    sym.holds = false;
    sym.degree = *asym;
    const std::size_t e = h.socle_degree();
    sym.detail = "h_" + std::to_string(*asym) + " = " + h[*asym].get_str() +
                 " but h_" + std::to_string(e - *asym) + " = " +
                 h[e - *asym].get_str();
  }
  out.push_back(sym);

  Predicate uni("unimodal");
  if (auto i = first_unimodality_break(h)) {
    uni.holds = false;
    uni.degree = *i;
    uni.detail = "strict increase at degree " + std::to_string(*i) +
                 " after a strict decrease";
  }
  out.push_back(uni);

  out.push_back(difference_predicate("differentiable", h.entries()));

  const auto half = first_half(h);
  Predicate si = difference_predicate("si_sequence", half);
  if (asym) {
    si.holds = false;
    si.degree = *asym;
    si.detail = "not symmetric";
  } else if (!si.holds) {
    si.detail = "first-half " + si.detail;
  }
  out.push_back(si);
  return out;
}

json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
  return json(v.get_str());
}

std::string csv_row(std::initializer_list<std::string> head, const HVector& h) {
  std::string row;
  for (const auto& cell : head) {
    if (!row.empty()) row += ',';
    row += cell;
  }
  for (const auto& v : h.entries()) row += "," + v.get_str();
  return row;
}

std::string_view kind_label(const FamilyResult& f) { return to_string(f.kind); }

std::vector<FamilyKind> kinds_for(const RunConfig& cfg) {
  if (cfg.family == Family::ThmE) return {FamilyKind::ThmE};
  std::vector<FamilyKind> out;
  for (Parity p : cfg.parities) {
    out.push_back(p == Parity::Odd ? FamilyKind::ThmROdd : FamilyKind::ThmREven);
  }
  return out;
}

// (kind, parameter) pairs in output order.
std::vector<std::pair<FamilyKind, long>> jobs_for(const RunConfig& cfg) {
  std::vector<std::pair<FamilyKind, long>> jobs;
  const auto& params = cfg.family == Family::ThmE ? cfg.e_values : cfg.d_values;
  for (long param : params) {
    for (FamilyKind kind : kinds_for(cfg)) jobs.emplace_back(kind, param);
  }
  return jobs;
}

std::string field_name(std::uint64_t characteristic) {
  return characteristic == 0 ? "Q" : "GF(" + std::to_string(characteristic) + ")";
}

json envelope(const RunConfig& cfg, std::string_view command) {
  json j;
  j["format_version"] = kFormatVersion;
  j["command"] = std::string(command);
  j["command_line"] = cfg.command_line;
  return j;
}

int run_check(const RunConfig& cfg, std::ostream& out) {
  const HVector h = parse_hvector(cfg.vector_literal);
  const auto predicates = classify(h);
  switch (cfg.format) {
    case OutputFormat::Plain: {
      out << "vector: " << h.to_string() << "\n";
      out << "socle degree: " << h.socle_degree() << "\n";
      if (h.size() >= 2) out << "codimension: " << h.codimension().get_str() << "\n";
      for (const auto& p : predicates) {
        out << p.name << ": " << (p.holds ? "yes" : "no");
        if (!p.holds) out << " (" << p.detail << ")";
        out << "\n";
      }
      break;
    }
    case OutputFormat::Json: {
      json j = envelope(cfg, "check");
      j["vector"] = hvector_json(h);
      j["socle_degree"] = h.socle_degree();
      if (h.size() >= 2) j["codimension"] = integer_json(h.codimension());
      json preds = json::array();
      for (const auto& p : predicates) {
        json entry{{"name", p.name}, {"holds", p.holds}};
        if (p.degree) entry["violation_degree"] = *p.degree;
        if (!p.holds) entry["detail"] = p.detail;
        preds.push_back(entry);
      }
      j["predicates"] = preds;
      out << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::Csv: {
      out << "predicate,holds,violation_degree,detail\n";
      for (const auto& p : predicates) {
        out << p.name << ',' << (p.holds ? "true" : "false") << ','
            << (p.degree ? std::to_string(*p.degree) : "") << ",\""
            << p.detail << "\"\n";
      }
      break;
    }
  }
  return static_cast<int>(ExitCode::Ok);
}

FamilyResult build_family(FamilyKind kind, long param, long a) {
  if (kind == FamilyKind::ThmE) {
    return construct_thm_e_in_codimension(param, param + 4 + a);
  }
  const Parity parity = kind == FamilyKind::ThmROdd ? Parity::Odd : Parity::Even;
  return construct_thm_r_in_codimension(param, parity, 5 + a);
}

json family_json(const FamilyResult& f) {
  const HVector& g = f.gorenstein_hvector;
  return json{
      {"kind", std::string(kind_label(f))},
      {"parameter", f.parameter},
      {"lift", f.lift},
      {"level", hvector_json(f.level_hvector)},
      {"gorenstein", hvector_json(g)},
      {"codimension", integer_json(g.codimension())},
      {"socle_degree", g.socle_degree()},
      {"predicted_violation",
       json::array({f.predicted_violation.first, f.predicted_violation.second})},
      {"symmetric", is_symmetric(g)},
      {"unimodal", is_unimodal(g)},
      {"si_sequence", is_si_sequence(g)},
  };
}

int run_construct(const RunConfig& cfg, std::ostream& out) {
  std::vector<FamilyResult> results;
  for (const auto& [kind, param] : jobs_for(cfg)) {
    results.push_back(build_family(kind, param, cfg.a));
  }
  switch (cfg.format) {
    case OutputFormat::Plain:
      for (const auto& f : results) {
        const HVector& g = f.gorenstein_hvector;
        out << kind_label(f) << (f.kind == FamilyKind::ThmE ? " e=" : " d=")
            << f.parameter << " lift=" << f.lift << "\n";
        out << "  level:      " << f.level_hvector.to_string() << "\n";
        out << "  gorenstein: " << g.to_string() << "\n";
        out << "  codimension " << g.codimension().get_str() << ", socle degree "
            << g.socle_degree() << ", symmetric "
            << (is_symmetric(g) ? "yes" : "no") << ", unimodal "
            << (is_unimodal(g) ? "yes" : "no") << ", SI "
            << (is_si_sequence(g) ? "yes" : "no") << "\n";
        out << "  predicted SI violation: difference step "
            << f.predicted_violation.first << "->" << f.predicted_violation.second
            << "\n";
      }
      break;
    case OutputFormat::Json: {
      json j = envelope(cfg, "construct");
      json arr = json::array();
      for (const auto& f : results) arr.push_back(family_json(f));
      j["results"] = arr;
      out << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::Csv:
      for (const auto& f : results) {
        const std::string kind(kind_label(f));
        const std::string param = std::to_string(f.parameter);
        out << csv_row({kind, param, "level"}, f.level_hvector) << "\n";
        out << csv_row({kind, param, "gorenstein"}, f.gorenstein_hvector) << "\n";
      }
      break;
  }
  return static_cast<int>(ExitCode::Ok);
}

void print_reports(const RunConfig& cfg, std::string_view command,
                   const std::vector<VerificationReport>& reports,
                   std::ostream& out) {
  switch (cfg.format) {
    case OutputFormat::Plain:
      for (const auto& r : reports) {
        out << to_string(r.kind)
            << (r.kind == FamilyKind::ThmE ? " e=" : " d=") << r.parameter
            << " over " << field_name(r.characteristic) << " seed=" << r.seed
            << " trials=" << r.trial_seeds.size() << ": " << to_string(r.verdict);
        if (r.status != "ok") out << " [" << r.status << "]";
        out << "\n";
        if (r.target) out << "  target:   " << r.target->to_string() << "\n";
        if (r.best) out << "  computed: " << r.best->to_string() << "\n";
        for (std::size_t t = 0; t < r.per_trial.size(); ++t) {
          out << "  trial " << t << " (seed " << r.trial_seeds[t]
              << "): " << r.per_trial[t].to_string() << "\n";
        }
        if (cfg.timings && !r.degree_seconds.empty()) {
          double total = 0;
          for (double s : r.degree_seconds) total += s;
          out << "  rank time: " << total << " s\n";
        }
      }
      break;
    case OutputFormat::Json: {
      json j = envelope(cfg, command);
      j["generator"] = kGeneratorName;
      j["seed_mix"] = kSeedMixName;
      j["seed"] = cfg.seed;
      j["trials"] = cfg.trials;
      json arr = json::array();
      for (const auto& r : reports) arr.push_back(report_json(r, cfg.timings));
      j["reports"] = arr;
      out << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::Csv:
      for (const auto& r : reports) {
        const std::string kind(to_string(r.kind));
        const std::string param = std::to_string(r.parameter);
        const std::string field = field_name(r.characteristic);
        const std::string verdict(to_string(r.verdict));
        if (r.target) {
          out << csv_row({kind, param, field, verdict, "target"}, *r.target) << "\n";
        }
        if (r.best) {
          out << csv_row({kind, param, field, verdict, "best"}, *r.best) << "\n";
        }
        for (std::size_t t = 0; t < r.per_trial.size(); ++t) {
          out << csv_row({kind, param, field, verdict, "trial" + std::to_string(t)},
                         r.per_trial[t])
              << "\n";
        }
      }
      break;
  }
}

int exit_status(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports) {
    if (r.verdict == Verdict::Mismatch) return static_cast<int>(ExitCode::Mismatch);
  }
  return static_cast<int>(ExitCode::Ok);
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
  const FieldSpec field(cfg.field);
  std::vector<VerificationReport> reports;
  for (const auto& [kind, param] : jobs_for(cfg)) {
    reports.push_back(
        verify_construction(kind, param, field, cfg.seed, cfg.trials, cfg.parallel));
  }
  print_reports(cfg, "verify", reports, out);
  return exit_status(reports);
}

int run_sweep(const RunConfig& cfg, std::ostream& out) {
  std::vector<VerificationReport> reports;
  for (const auto& [kind, param] : jobs_for(cfg)) {
    auto batch = sweep_characteristics(kind, param, cfg.chars, cfg.seed,
                                       cfg.trials, cfg.parallel);
    reports.insert(reports.end(), std::make_move_iterator(batch.begin()),
                   std::make_move_iterator(batch.end()));
  }
  print_reports(cfg, "sweep", reports, out);
  return exit_status(reports);
}

std::string join_command_line(const std::vector<std::string>& args) {
  std::string line = "hvec";
  for (const auto& a : args) line += " " + a;
  return line;
}

void validate_family(RunConfig& cfg, const std::string& e_text,
                     const std::string& d_text, const std::string& parity_text) {
  if (cfg.family == Family::ThmE) {
    if (e_text.empty()) throw UsageError("thm-e requires --e");
    if (!d_text.empty()) throw UsageError("--d does not apply to thm-e");
    if (!parity_text.empty()) throw UsageError("--parity does not apply to thm-e");
    cfg.e_values = parse_int_list(e_text);
    for (long e : cfg.e_values) {
      if (e < 6) {
        throw UsageError(
            "no unimodal non-SI Gorenstein h-vector exists in socle degree " +
            std::to_string(e) + "; they exist if and only if e >= 6");
      }
    }
  } else {
    if (d_text.empty()) throw UsageError("thm-r requires --d");
    if (!e_text.empty()) throw UsageError("--e does not apply to thm-r");
    cfg.d_values = parse_int_list(d_text);
    for (long d : cfg.d_values) {
      if (d < 10) {
        throw UsageError("thm-r requires d >= 10, got " + std::to_string(d));
      }
    }
    if (!parity_text.empty()) cfg.parities = {*parse_parity(parity_text)};
  }
}

void validate_characteristic(std::uint64_t c) {
  try {
    FieldSpec{c};
  } catch (const InvalidInput& ex) {
    throw UsageError(ex.what());
  }
}

}  // namespace

json hvector_json(const HVector& h) {
  json arr = json::array();
  for (const auto& v : h.entries()) arr.push_back(integer_json(v));
  return arr;
}

json report_json(const VerificationReport& r, bool timings) {
  json j{
      {"kind", std::string(to_string(r.kind))},
      {"parameter", r.parameter},
      {"characteristic", r.characteristic},
      {"field", field_name(r.characteristic)},
      {"seed", r.seed},
      {"trial_seeds", r.trial_seeds},
      {"verdict", std::string(to_string(r.verdict))},
      {"status", r.status},
  };
  j["target"] = r.target ? hvector_json(*r.target) : json(nullptr);
  j["best"] = r.best ? hvector_json(*r.best) : json(nullptr);
  json trials = json::array();
  for (const auto& h : r.per_trial) trials.push_back(hvector_json(h));
  j["per_trial"] = trials;
  if (timings) {
    json micros = json::array();
    for (double s : r.degree_seconds) {
      micros.push_back(static_cast<std::int64_t>(s * 1e6));
    }
    j["degree_microseconds"] = micros;
  }
  return j;
}

std::vector<long> parse_int_list(const std::string& text) {
  auto to_long = [&](const std::string& s) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(s, &used);
    } catch (const std::exception&) {
      throw UsageError("malformed integer '" + s + "'");
    }
    if (used != s.size()) throw UsageError("malformed integer '" + s + "'");
    return v;
  };
  std::vector<long> out;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    const long lo = to_long(text.substr(0, dots));
    const long hi = to_long(text.substr(dots + 2));
    if (lo > hi) throw UsageError("empty range '" + text + "'");
    for (long v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) out.push_back(to_long(token));
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig cfg;
  cfg.command_line = join_command_line(args);

  CLI::App app{"Gorenstein and level h-vector toolkit", "hvec"};
  app.require_subcommand(1);

  std::string family_text, e_text, d_text, parity_text, chars_text;
  std::string format_text = "plain";
  std::string out_text;

  auto* check = app.add_subcommand("check", "Classify an h-vector");
  check->add_option("vector", cfg.vector_literal, "Comma-separated entries")
      ->required();

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("family", family_text, "thm-e or thm-r")
        ->required()
        ->check(CLI::IsMember({"thm-e", "thm-r"}));
    sub->add_option("--e", e_text, "Socle degree(s): 6, 6..10 or 6,8");
    sub->add_option("--d", d_text, "Parameter d >= 10 of the thm-r family");
    sub->add_option("--parity", parity_text, "odd or even (default: both)")
        ->check(CLI::IsMember({"odd", "even"}));
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", format_text, "plain, json or csv")
        ->check(CLI::IsMember({"plain", "json", "csv"}));
    sub->add_option("--out", out_text, "Write the report to this path");
  };
  auto add_numeric = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "64-bit base seed");
    sub->add_option("--trials", cfg.trials, "Random trials per verification");
    sub->add_flag("--parallel", cfg.parallel, "Run trials concurrently");
    sub->add_flag("--timings", cfg.timings, "Include wall-time per degree");
  };

  add_output(check);

  auto* construct = app.add_subcommand("construct", "Emit a family member");
  add_common(construct);
  add_output(construct);
  construct->add_option("--a", cfg.a, "Extra codimension (>= 0)");

  auto* verify = app.add_subcommand("verify", "Check a family by rank computation");
  add_common(verify);
  add_output(verify);
  add_numeric(verify);
  verify->add_option("--field", cfg.field, "0 or a prime");

  auto* sweep = app.add_subcommand("sweep", "Verify across characteristics");
  add_common(sweep);
  add_output(sweep);
  add_numeric(sweep);
  sweep->add_option("--chars", chars_text, "Comma-separated characteristics");

  std::vector<std::string> argv_storage{"hvec"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_storage) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& ex) {
    if (ex.get_exit_code() != 0) throw UsageError(ex.what());
    std::ostringstream help;
    app.exit(ex, help, help);
    throw HelpRequested(help.str());
  }

  if (format_text == "json") cfg.format = OutputFormat::Json;
  if (format_text == "csv") cfg.format = OutputFormat::Csv;
  if (!out_text.empty()) cfg.out_path = out_text;

  if (check->parsed()) {
    cfg.command = Command::Check;
    try {
      parse_hvector(cfg.vector_literal);
    } catch (const InvalidInput& ex) {
      throw UsageError(ex.what());
    }
    return cfg;
  }
  cfg.command = construct->parsed() ? Command::Construct
                : verify->parsed()  ? Command::Verify
                                    : Command::Sweep;
  cfg.family = family_text == "thm-e" ? Family::ThmE : Family::ThmR;
  validate_family(cfg, e_text, d_text, parity_text);
  if (cfg.a < 0) throw UsageError("--a must be >= 0");
  if (cfg.trials == 0) throw UsageError("--trials must be >= 1");
  if (cfg.command == Command::Verify) validate_characteristic(cfg.field);
  if (cfg.command == Command::Sweep && !chars_text.empty()) {
    cfg.chars.clear();
    for (long c : parse_int_list(chars_text)) {
      if (c < 0) throw UsageError("characteristic must be nonnegative");
      cfg.chars.push_back(static_cast<std::uint64_t>(c));
    }
  }
  if (cfg.command == Command::Sweep) {
    for (auto c : cfg.chars) validate_characteristic(c);
  }
  return cfg;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (cfg.out_path) {
    file.open(*cfg.out_path);
    if (!file) {
      err << "hvec: error: cannot open " << *cfg.out_path << "\n";
      return static_cast<int>(ExitCode::InvalidInput);
    }
    sink = &file;
  }
  try {
    switch (cfg.command) {
      case Command::Check: return run_check(cfg, *sink);
      case Command::Construct: return run_construct(cfg, *sink);
      case Command::Verify: return run_verify(cfg, *sink);
      case Command::Sweep: return run_sweep(cfg, *sink);
    }
  } catch (const InvalidInput& ex) {
    err << "hvec: error: " << ex.what() << "\n";
    return static_cast<int>(ExitCode::InvalidInput);
  }
  return static_cast<int>(ExitCode::InvalidInput);
}

int run_command_line(const std::vector<std::string>& args, std::ostream& out,
                     std::ostream& err) {
  RunConfig cfg;
  try {
    cfg = parse_args(args);
  } catch (const HelpRequested& help) {
    out << help.what();
    return static_cast<int>(ExitCode::Ok);
  } catch (const UsageError& ex) {
    err << "hvec: error: " << ex.what() << "\n";
    return static_cast<int>(ExitCode::InvalidInput);
  }
  return run(cfg, out, err);
}

}  // namespace hvec::cli
