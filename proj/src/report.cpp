#include "cspec/report.hpp"

#include <map>
#include <sstream>

namespace cspec::report {

json decimal_array(const std::vector<BigNat>& values) {
  json out = json::array();
  for (const auto& value : values) out.push_back(to_decimal(value));
  return out;
}

std::vector<BigNat> parse_decimal_array(const json& array) {
  std::vector<BigNat> out;
  for (const auto& item : array) out.push_back(from_decimal(item.get<std::string>()));
  return out;
}

json spectrum_values(const Spectrum& spectrum) {
  return json{{"values", decimal_array(spectrum.values())}};
}

json to_json(const CycleType& type) { return json(type.parts()); }

json to_json(const ChainResult& chain) {
  return json{
      {"height", chain.height},
      {"convention", to_string(chain.convention)},
      {"witness", decimal_array(chain.witness)},
  };
}

json to_json(const OmegaData& omega) {
  return json{{"n", omega.n}, {"omega", omega.omega}, {"p", omega.p}, {"count", omega.count}};
}

json to_json(const OmegaCheck& check) {
  return json{
      {"n", check.n},
      {"p", check.p},
      {"omega_count", check.omega_count},
      {"ratio", to_decimal(check.ratio)},
      {"ratio_bits", check.ratio_bits},
      {"power_bits", check.power_bits},
      {"verdict", check.holds ? "PASS" : "FAIL"},
  };
}

json to_json(const BoundReport& report) {
  return json{
      {"x", report.x},
      {"pi_exact", report.pi_exact},
      {"lower", report.lower},
      {"upper", report.upper},
      {"lower_holds", report.lower_holds},
      {"upper_holds", report.upper_holds},
      {"largest_prime", report.largest_prime},
      {"gap", report.gap},
      {"gap_limit", report.gap_limit},
      {"gap_bound_holds", report.gap_bound_holds},
  };
}

json to_json(const std::vector<HzTableRow>& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    json computed = json::object();
    for (const auto& [key, value] : row.computed) {
      computed[std::string(to_string(key.first)) + "/" + std::string(to_string(key.second))] =
          value;
    }
    json exceeding = json::array();
    for (const auto& [kind, convention] : row.exceeding()) {
      exceeding.push_back(std::string(to_string(kind)) + "/" + std::string(to_string(convention)));
    }
    out.push_back(json{
        {"m", row.m},
        {"published_bound", row.published_bound ? json(*row.published_bound) : json(nullptr)},
        {"computed", computed},
        {"exceeding", exceeding},
        {"reproduced", row.reproduced()},
    });
  }
  return out;
}

namespace {

json types_json(const std::vector<CycleType>& types) {
  json out = json::array();
  for (const auto& type : types) out.push_back(to_json(type));
  return out;
}

json optional_json(const std::optional<std::uint64_t>& value) {
  return value ? json(*value) : json(nullptr);
}

}  // namespace

json to_json(const StrategyOutcome& outcome) {
  json out{
      {"strategy", to_string(outcome.strategy)},
      {"r", optional_json(outcome.r)},
      {"t_star", outcome.t_star},
      {"support_m", outcome.support_m},
      {"decided", outcome.decided},
      {"h_value", outcome.h_vertices},
      {"h_value_edges", outcome.h_edges},
      {"h_sum_bound", outcome.h_sum_bound},
  };
  if (!outcome.decided) out["reason"] = outcome.reason;
  return out;
}

json to_json(const Certificate& cert, bool include_elapsed) {
  json candidates = json::array();
  for (const auto& candidate : cert.candidates) candidates.push_back(to_json(candidate));
  json out{
      {"n", cert.n},
      {"kind", to_string(cert.kind)},
      {"strategy", to_string(cert.strategy)},
      {"r", optional_json(cert.r)},
      {"t_star", cert.t_star},
      {"support_m", cert.support_m},
      {"omega_count", cert.omega_count},
      {"p", cert.p},
      {"h_value", cert.h_value},
      {"h_value_edges", cert.h_value_edges},
      {"h_sum_bound", cert.h_sum_bound},
      {"verdict", to_string(cert.verdict)},
      {"witness_chain", decimal_array(cert.witness_chain)},
      {"witness_types", types_json(cert.witness_types)},
      {"phi_excluded", cert.phi_excluded},
      {"notes", cert.notes},
      {"candidates", candidates},
  };
  if (include_elapsed) out["elapsed_us"] = cert.elapsed.count();
  return out;
}

json summary(const ScanReport& report) {
  json kinds = json::array();
  for (GroupKind kind : report.kinds) kinds.push_back(to_string(kind));

  std::map<std::string, std::size_t> by_strategy;
  std::size_t max_h = 0;
  std::uint64_t max_h_n = 0;
  std::size_t min_margin = static_cast<std::size_t>(-1);
  std::uint64_t min_margin_n = 0;
  json non_pass = json::array();
  for (const auto& cert : report.certificates) {
    if (cert.verdict == Verdict::indeterminate) {
      by_strategy["none"]++;
    } else {
      by_strategy[std::string(to_string(cert.strategy))]++;
    }
    if (cert.h_value > max_h) {
      max_h = cert.h_value;
      max_h_n = cert.n;
    }
    if (cert.verdict == Verdict::pass) {
      std::size_t margin = cert.omega_count - cert.h_value;
      if (margin < min_margin) {
        min_margin = margin;
        min_margin_n = cert.n;
      }
    } else {
      non_pass.push_back(json{
          {"n", cert.n},
          {"kind", to_string(cert.kind)},
          {"verdict", to_string(cert.verdict)},
          {"omega_count", cert.omega_count},
          {"h_value", cert.h_value},
          {"witness_chain", decimal_array(cert.witness_chain)},
          {"notes", cert.notes},
      });
    }
  }
  return json{
      {"from", report.from},
      {"to", report.to},
      {"kinds", kinds},
      {"certificates", report.certificates.size()},
      {"passed", report.passed},
      {"failed", report.failed},
      {"indeterminate", report.indeterminate},
      {"verdict", report.all_pass() ? "PASS" : "FAIL"},
      {"strategies", by_strategy},
      {"max_h_value", json{{"h", max_h}, {"n", max_h_n}}},
      {"min_margin", report.passed ? json{{"margin", min_margin}, {"n", min_margin_n}} : json(nullptr)},
      {"non_pass", non_pass},
  };
}

json to_json(const OmegaSweep& sweep) {
  json failures = json::array();
  for (const auto& check : sweep.failures) failures.push_back(to_json(check));
  return json{
      {"from", sweep.from},
      {"to", sweep.to},
      {"checked", sweep.checked},
      {"failed", sweep.failures.size()},
      {"verdict", sweep.all_pass() ? "PASS" : "FAIL"},
      {"failures", failures},
  };
}

std::string certificate_csv_header() {
  return "n,kind,strategy,r,t_star,support_m,omega_count,p,h_value,h_value_edges,h_sum_bound,"
         "verdict,witness_chain";
}

std::string to_csv_row(const Certificate& cert) {
  std::ostringstream row;
  row << cert.n << ',' << to_string(cert.kind) << ',' << to_string(cert.strategy) << ',';
  if (cert.r) row << *cert.r;
  row << ',' << cert.t_star << ',' << cert.support_m << ',' << cert.omega_count << ',' << cert.p
      << ',' << cert.h_value << ',' << cert.h_value_edges << ',' << cert.h_sum_bound << ','
      << to_string(cert.verdict) << ',';
  for (std::size_t i = 0; i < cert.witness_chain.size(); ++i) {
    if (i) row << ' ';
    row << to_decimal(cert.witness_chain[i]);
  }
  return row.str();
}

}  // namespace cspec::report
