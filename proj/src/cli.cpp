#include "cspec/cli.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <functional>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "cspec/cache.hpp"
#include "cspec/classes.hpp"
#include "cspec/divgraph.hpp"
#include "cspec/primes.hpp"
#include "cspec/report.hpp"
#include "cspec/verify.hpp"

namespace cspec::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<GroupKind> parse_kinds(const std::string& text) {
  std::vector<GroupKind> kinds;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) continue;
    GroupKind kind = parse_group_kind(item);
    if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end()) kinds.push_back(kind);
  }
  if (kinds.empty()) throw UsageError("--kinds must name at least one of sym, alt");
  return kinds;
}

struct CacheOptions {
  std::string directory;
  bool disabled = false;

  std::optional<SpectrumCache> open() const {
    if (disabled) return std::nullopt;
    return SpectrumCache(directory.empty() ? SpectrumCache::default_directory()
                                           : fs::path(directory));
  }
};

json cached(const CacheOptions& options, std::string_view family, const json& parameters,
            const std::function<json()>& compute) {
  auto cache = options.open();
  if (!cache) return compute();
  return cache->get_or_compute(SpectrumCache::make_key(family, parameters), compute);
}

// ---------------------------------------------------------------------------

struct SpectrumArgs {
  std::string kind;
  unsigned n = 0;
  std::string family = "full";
  std::optional<unsigned> t;
  std::optional<unsigned> support_cap;
  std::string format = "text";
  unsigned cap = 45;
  bool override_cap = false;
};

json compute_spectrum(const SpectrumArgs& args) {
  const GroupKind kind = parse_group_kind(args.kind);
  const Family family = parse_family(args.family);
  auto need_t = [&] {
    if (!args.t) throw UsageError("--family " + args.family + " requires --t");
    return *args.t;
  };
  auto build = [&]() -> Spectrum {
    switch (family) {
      case Family::full:
        return spectrum(kind, args.n, SpectrumOptions{args.cap, args.override_cap});
      case Family::moved:
        return moved_class_sizes(kind, args.n);
      case Family::phi:
        return phi_set(kind, args.n, need_t());
      case Family::psi:
        return psi_set(kind, args.n, need_t(), args.support_cap);
    }
    throw UsageError("unknown family");
  };
  const Spectrum result = build();
  json types = json::array();
  for (const auto& type : result.representatives()) types.push_back(report::to_json(type));
  return json{{"values", report::decimal_array(result.values())}, {"representatives", types}};
}

int run_spectrum(const SpectrumArgs& args, const CacheOptions& cache, std::ostream& out) {
  if (args.n < 1 && args.family == "full") throw UsageError("--n must be >= 1");
  json parameters{{"kind", args.kind}, {"n", args.n}, {"family", args.family}};
  if (args.t) parameters["t"] = *args.t;
  if (args.support_cap) parameters["support_cap"] = *args.support_cap;
  if (args.family == "full") parameters["cap"] = args.override_cap ? 0u : args.cap;
  // Validate before touching the cache so errors are never cached.
  parse_group_kind(args.kind);
  parse_family(args.family);
  if (args.family == "full" && args.n > args.cap && !args.override_cap) {
    throw EnumerationCapError("full spectrum of degree " + std::to_string(args.n) +
                              " exceeds the enumeration cap " + std::to_string(args.cap) +
                              "; pass --override-cap to enumerate anyway");
  }
  const json payload = cached(cache, "spectrum", parameters, [&] { return compute_spectrum(args); });
  const json& values = payload.at("values");
  if (args.format == "json") {
    out << json{{"values", values}}.dump() << '\n';
  } else if (args.format == "csv") {
    out << "value\n";
    for (const auto& value : values) out << value.get<std::string>() << '\n';
  } else {
    for (const auto& value : values) out << value.get<std::string>() << '\n';
  }
  return kAllPass;
}

// ---------------------------------------------------------------------------

int run_height(const std::string& input, const std::string& convention_text,
               const std::string& format, std::ostream& out) {
  const Convention convention = parse_convention(convention_text);
  std::ifstream in(input);
  if (!in) throw UsageError("cannot open input file " + input);
  std::vector<BigNat> values;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    line.erase(std::remove_if(line.begin(), line.end(),
                              [](unsigned char c) { return std::isspace(c); }),
               line.end());
    if (line.empty()) continue;
    try {
      values.push_back(from_decimal(line));
    } catch (const std::invalid_argument&) {
      throw UsageError(input + ":" + std::to_string(line_number) + ": not a decimal natural");
    }
    if (sgn(values.back()) == 0) {
      throw UsageError(input + ":" + std::to_string(line_number) + ": zero is not allowed");
    }
  }
  const ChainResult chain = height(values, convention);
  if (format == "json") {
    out << report::to_json(chain).dump() << '\n';
  } else {
    out << chain.height << '\n';
  }
  return kAllPass;
}

// ---------------------------------------------------------------------------

int run_omega(std::optional<std::uint64_t> n, std::optional<std::uint64_t> from,
              std::optional<std::uint64_t> to, unsigned jobs, const std::string& format,
              std::ostream& out) {
  if (n) {
    if (*n < 3) throw UsageError("--n must be >= 3");
    const PrimeTable table(*n);
    const OmegaData omega = omega_set(table, *n);
    const OmegaCheck check = check_omega_lemma(table, *n);
    if (format == "json") {
      json doc = report::to_json(check);
      doc["omega"] = report::to_json(omega);
      out << doc.dump() << '\n';
    } else {
      out << "n " << omega.n << '\n' << "p " << omega.p << '\n' << "count " << omega.count << '\n'
          << "omega";
      for (auto t : omega.omega) out << ' ' << t;
      out << '\n'
          << "ratio_bits " << check.ratio_bits << '\n'
          << "power_bits " << check.power_bits << '\n'
          << (check.holds ? "PASS" : "FAIL") << '\n';
    }
    return check.holds ? kAllPass : kNotAllPass;
  }
  if (!from || !to) throw UsageError("omega needs --n, or both --from and --to");
  if (*from < 3 || *from > *to) throw UsageError("omega sweep needs 3 <= from <= to");
  const PrimeTable table(*to);
  const OmegaSweep sweep = sweep_omega(table, *from, *to, jobs);
  if (format == "json") {
    out << report::to_json(sweep).dump() << '\n';
  } else {
    out << "checked " << sweep.checked << '\n' << "failed " << sweep.failures.size() << '\n';
    for (const auto& failure : sweep.failures) out << "FAIL n=" << failure.n << '\n';
    out << (sweep.all_pass() ? "PASS" : "FAIL") << '\n';
  }
  return sweep.all_pass() ? kAllPass : kNotAllPass;
}

// ---------------------------------------------------------------------------

int run_hz_table(unsigned max_m, const std::string& kinds_text, const std::string& format,
                 const CacheOptions& cache, std::ostream& out) {
  if (max_m < 2) throw UsageError("--max-m must be >= 2");
  const auto kinds = parse_kinds(kinds_text);
  json kind_names = json::array();
  for (GroupKind kind : kinds) kind_names.push_back(to_string(kind));
  const json rows = cached(cache, "hz-table", json{{"max_m", max_m}, {"kinds", kind_names}},
                           [&] { return report::to_json(hz_table(max_m, kinds)); });
  bool reproduced = true;
  for (const auto& row : rows) reproduced = reproduced && row.at("reproduced").get<bool>();

  if (format == "json") {
    out << rows.dump() << '\n';
  } else {
    out << "m\tbound";
    for (GroupKind kind : kinds) {
      out << '\t' << to_string(kind) << "/vertices\t" << to_string(kind) << "/edges";
    }
    out << "\tstatus\n";
    for (const auto& row : rows) {
      out << row.at("m").get<unsigned>() << '\t';
      if (row.at("published_bound").is_null()) {
        out << '-';
      } else {
        out << row.at("published_bound").get<unsigned>();
      }
      for (GroupKind kind : kinds) {
        for (std::string_view convention : {"vertices", "edges"}) {
          out << '\t'
              << row.at("computed")
                     .at(std::string(to_string(kind)) + "/" + std::string(convention))
                     .get<std::size_t>();
        }
      }
      out << '\t' << (row.at("reproduced").get<bool>() ? "PASS" : "FAIL");
      for (const auto& name : row.at("exceeding")) out << " exceeds:" << name.get<std::string>();
      out << '\n';
    }
  }
  return reproduced ? kAllPass : kNotAllPass;
}

// ---------------------------------------------------------------------------

int run_verify_case(std::uint64_t n, const std::string& kind_text, unsigned support_cap,
                    std::ostream& out) {
  if (n < 23) throw UsageError("verify case needs --n >= 23");
  const GroupKind kind = parse_group_kind(kind_text);
  const Verifier verifier(n, VerifyConfig{support_cap});
  const Certificate cert = verifier.check_case(n, kind);
  out << report::to_json(cert).dump(2) << '\n';
  return cert.verdict == Verdict::pass ? kAllPass : kNotAllPass;
}

int run_verify_scan(std::uint64_t from, std::uint64_t to, const std::string& kinds_text,
                    unsigned jobs, const std::string& out_dir, unsigned support_cap,
                    std::ostream& out) {
  if (from < 23 || from > to) throw UsageError("verify scan needs 23 <= --from <= --to");
  const auto kinds = parse_kinds(kinds_text);
  const Verifier verifier(to, VerifyConfig{support_cap});
  const ScanReport scan = scan_range(verifier, from, to, kinds, jobs);
  const json summary = report::summary(scan);

  if (!out_dir.empty()) {
    const fs::path dir(out_dir);
    fs::create_directories(dir);
    std::ofstream(dir / "summary.json") << summary.dump(2) << '\n';
    std::ofstream jsonl(dir / "certificates.jsonl");
    std::ofstream csv(dir / "certificates.csv");
    csv << report::certificate_csv_header() << '\n';
    for (const auto& cert : scan.certificates) {
      jsonl << report::to_json(cert).dump() << '\n';
      csv << report::to_csv_row(cert) << '\n';
    }
  }
  out << summary.dump(2) << '\n';
  return scan.all_pass() ? kAllPass : kNotAllPass;
}

// ---------------------------------------------------------------------------

int run_bounds(std::optional<std::uint64_t> x, std::optional<std::uint64_t> sweep_to,
               const std::string& format, std::ostream& out) {
  if (x) {
    if (*x <= 10) throw UsageError("--x must be > 10");
    const PrimeTable table(*x);
    const BoundReport bounds = bound_report(table, *x);
    if (format == "json") {
      out << report::to_json(bounds).dump() << '\n';
    } else {
      out << "x " << bounds.x << '\n'
          << "pi " << bounds.pi_exact << '\n'
          << "lower " << bounds.lower << ' ' << (bounds.lower_holds ? "holds" : "VIOLATED") << '\n'
          << "upper " << bounds.upper << ' ' << (bounds.upper_holds ? "holds" : "VIOLATED") << '\n'
          << "gap " << bounds.gap << " limit " << bounds.gap_limit << ' '
          << (bounds.gap_bound_holds ? "holds" : "VIOLATED") << '\n';
    }
    return kAllPass;
  }
  if (!sweep_to || *sweep_to <= 10) throw UsageError("bounds needs --x X or --sweep-to X with X > 10");
  const PrimeTable table(*sweep_to);
  std::size_t lower_violations = 0, upper_violations = 0, gap_violations = 0;
  json first_upper = nullptr, first_lower = nullptr;
  for (std::uint64_t value = 11; value <= *sweep_to; ++value) {
    const BoundReport bounds = bound_report(table, value);
    if (!bounds.lower_holds && lower_violations++ == 0) first_lower = value;
    if (!bounds.upper_holds && upper_violations++ == 0) first_upper = value;
    if (!bounds.gap_bound_holds) ++gap_violations;
  }
  const json doc{{"from", 11},
                 {"to", *sweep_to},
                 {"lower_violations", lower_violations},
                 {"upper_violations", upper_violations},
                 {"gap_violations", gap_violations},
                 {"first_lower_violation", first_lower},
                 {"first_upper_violation", first_upper}};
  out << (format == "json" ? doc.dump() : doc.dump(2)) << '\n';
  return kAllPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Conjugacy class size spectra of Sym_n and Alt_n, divisor-chain heights, "
               "and the case checks built on them",
               "class-spectrum"};
  app.require_subcommand(1);

  CacheOptions cache;
  app.add_option("--cache-dir", cache.directory,
                 "Cache directory (default: $CLASS_SPECTRUM_CACHE or the user cache dir)");
  app.add_flag("--no-cache", cache.disabled, "Disable the on-disk cache");

  const std::vector<std::string> formats{"json", "csv", "text"};
  const std::vector<std::string> json_text{"json", "text"};

  SpectrumArgs spectrum_args;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Class sizes of Sym_n or Alt_n");
  spectrum_cmd->add_option("--kind", spectrum_args.kind, "sym or alt")
      ->required()
      ->check(CLI::IsMember({"sym", "alt"}));
  spectrum_cmd->add_option("--n", spectrum_args.n, "Degree (for --family moved: the i of R_i)")
      ->required();
  spectrum_cmd->add_option("--family", spectrum_args.family, "full, moved, phi or psi")
      ->check(CLI::IsMember({"full", "moved", "phi", "psi"}));
  spectrum_cmd->add_option("--t", spectrum_args.t, "t for the phi and psi families");
  spectrum_cmd->add_option("--support-cap", spectrum_args.support_cap, "Truncate psi supports");
  spectrum_cmd->add_option("--format", spectrum_args.format)->check(CLI::IsMember(formats));
  spectrum_cmd->add_option("--cap", spectrum_args.cap, "Enumeration cap for full spectra");
  spectrum_cmd->add_flag("--override-cap", spectrum_args.override_cap);

  std::string height_input, height_convention = "vertices", height_format = "text";
  auto* height_cmd = app.add_subcommand("height", "Longest divisor chain in a set of integers");
  height_cmd->add_option("--input", height_input, "File with one decimal integer per line")
      ->required();
  height_cmd->add_option("--convention", height_convention)
      ->check(CLI::IsMember({"vertices", "edges"}));
  height_cmd->add_option("--format", height_format)->check(CLI::IsMember(json_text));

  std::optional<std::uint64_t> omega_n, omega_from, omega_to;
  unsigned omega_jobs = 1;
  std::string omega_format = "text";
  auto* omega_cmd = app.add_subcommand("omega", "Primes in (n/2, n] and 2^|Omega| vs n!/p!");
  omega_cmd->add_option("--n", omega_n);
  omega_cmd->add_option("--from", omega_from);
  omega_cmd->add_option("--to", omega_to);
  omega_cmd->add_option("--jobs", omega_jobs);
  omega_cmd->add_option("--format", omega_format)->check(CLI::IsMember(json_text));

  unsigned hz_max_m = 0;
  std::string hz_kinds = "sym,alt", hz_format = "text";
  auto* hz_cmd = app.add_subcommand("hz-table", "Sums of h(R_i) against the published table");
  hz_cmd->add_option("--max-m", hz_max_m)->required();
  hz_cmd->add_option("--kinds", hz_kinds);
  hz_cmd->add_option("--format", hz_format)->check(CLI::IsMember(json_text));

  auto* verify_cmd = app.add_subcommand("verify", "Per-degree certificates");
  verify_cmd->require_subcommand(1);
  std::uint64_t case_n = 0;
  std::string case_kind;
  unsigned support_cap = VerifyConfig{}.support_cap;
  auto* case_cmd = verify_cmd->add_subcommand("case", "Certificate for one degree");
  case_cmd->add_option("--n", case_n)->required();
  case_cmd->add_option("--kind", case_kind)->required()->check(CLI::IsMember({"sym", "alt"}));
  case_cmd->add_option("--support-cap", support_cap);

  std::uint64_t scan_from = 0, scan_to = 0;
  std::string scan_kinds = "sym,alt", scan_out;
  unsigned scan_jobs = 1;
  auto* scan_cmd = verify_cmd->add_subcommand("scan", "Certificates for a range of degrees");
  scan_cmd->add_option("--from", scan_from)->required();
  scan_cmd->add_option("--to", scan_to)->required();
  scan_cmd->add_option("--kinds", scan_kinds);
  scan_cmd->add_option("--jobs", scan_jobs);
  scan_cmd->add_option("--out", scan_out, "Directory for summary.json and certificate files");
  scan_cmd->add_option("--support-cap", support_cap);

  std::optional<std::uint64_t> bounds_x, bounds_sweep;
  std::string bounds_format = "text";
  auto* bounds_cmd = app.add_subcommand("bounds", "Chebyshev-constant and prime-gap diagnostic");
  bounds_cmd->add_option("--x", bounds_x);
  bounds_cmd->add_option("--sweep-to", bounds_sweep);
  bounds_cmd->add_option("--format", bounds_format)->check(CLI::IsMember(json_text));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kAllPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*spectrum_cmd) return run_spectrum(spectrum_args, cache, out);
    if (*height_cmd) return run_height(height_input, height_convention, height_format, out);
    if (*omega_cmd) return run_omega(omega_n, omega_from, omega_to, omega_jobs, omega_format, out);
    if (*hz_cmd) return run_hz_table(hz_max_m, hz_kinds, hz_format, cache, out);
    if (*case_cmd) return run_verify_case(case_n, case_kind, support_cap, out);
    if (*scan_cmd) {
      return run_verify_scan(scan_from, scan_to, scan_kinds, scan_jobs, scan_out, support_cap, out);
    }
    if (*bounds_cmd) return run_bounds(bounds_x, bounds_sweep, bounds_format, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const EnumerationCapError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kUsageError;
  }
  err << "error: no command given\n";
  return kUsageError;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace cspec::cli
