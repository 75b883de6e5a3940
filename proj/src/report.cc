// Copyright 2026 The bvpcf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bvpcf/report.hpp"

#include <sstream>

#include "bvpcf/error.hpp"
#include "json.hpp"

namespace bvpcf {

using json = nlohmann::ordered_json;

namespace {

constexpr int kMaxPlaces = 20;

std::string str(const Integer& v) { return v.get_str(); }

}  // namespace

const char* command_name(Command command) noexcept {
  switch (command) {
    case Command::kExpand:
      return "expand";
    case Command::kPredict:
      return "predict";
    case Command::kVerify:
      return "verify";
    case Command::kScan:
      return "scan";
  }
  return "unknown";
}

void validate_config(const RunConfig& config) {
  if (config.k_lo > config.k_hi) {
    throw Error(Errc::kInvalidArgument, "empty k range");
  }
  if (config.m_lo > config.m_hi) {
    throw Error(Errc::kInvalidArgument, "empty m range");
  }
  if (config.terms == 0) throw Error(Errc::kInvalidArgument, "terms must be >= 1");
  if (config.precision_cap_bits < 64) {
    throw Error(Errc::kInvalidArgument, "precision cap must be >= 64 bits");
  }
}

Report run(const RunConfig& config) {
  validate_config(config);
  Report report;
  report.config = config;
  const PrecisionPolicy policy{64, config.precision_cap_bits};

  if (config.command == Command::kScan) {
    report.scan = scan(ScanRequest{config.k_lo, config.k_hi, config.m_lo,
                                   config.m_hi, config.terms, policy,
                                   config.threads});
    return report;
  }

  for (unsigned long m = config.m_lo; m <= config.m_hi; ++m) {
    for (Integer k = config.k_lo; k <= config.k_hi; ++k) {
      const RadicandSpec spec = RadicandSpec::validate(k, m);
      switch (config.command) {
        case Command::kExpand:
          report.expansions.push_back(expand(spec, config.terms, policy));
          break;
        case Command::kPredict: {
          PredictionRun run{spec, expand(spec, config.terms + 1, policy), {}};
          for (std::size_t n = 1; n <= config.terms; ++n) {
            run.outcomes.push_back(predict_next(spec, run.expansion.at(n),
                                                run.expansion.previous(n)));
          }
          report.predictions.push_back(std::move(run));
          break;
        }
        case Command::kVerify:
          report.verifications.push_back(verify_theorems(spec, config.terms, policy));
          break;
        case Command::kScan:
          break;
      }
    }
  }
  return report;
}

std::string to_decimal(const Rational& value, int places) {
  const Integer scale = ipow(10, static_cast<unsigned long>(std::max(places, 0)));
  Integer scaled;
  const Rational magnitude = abs(value) * scale;
  mpz_tdiv_q(scaled.get_mpz_t(), magnitude.get_num_mpz_t(),
             magnitude.get_den_mpz_t());
  std::string digits = scaled.get_str();
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places)) {
      digits.insert(0, places + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - places, ".");
  }
  return (sgn(value) < 0 && scaled != 0 ? "-" : "") + digits;
}

std::string to_fraction(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

CertifiedDecimal render_enclosure(const RationalInterval& interval) {
  // Largest exponent e (capped) with width <= 10^-e.
  const Rational width = interval.width();
  int e = 0;
  if (width <= 1) {
    Rational scaled = width * 10;
    while (e < kMaxPlaces && scaled <= 1) {
      ++e;
      scaled *= 10;
    }
  } else {
    Rational bound = 1;
    while (width > bound) {
      --e;
      bound *= 10;
    }
  }
  return {to_decimal(interval.midpoint(), std::max(e, 0)),
          "<=1e" + std::to_string(-e)};
}

namespace {

json enclosure_json(const RationalInterval& interval) {
  const CertifiedDecimal d = render_enclosure(interval);
  return json{{"value", d.value}, {"width", d.width}};
}

json exact_json(const Rational& value) {
  const CertifiedDecimal d = render_enclosure(RationalInterval::point(value));
  return json{{"exact", to_fraction(value)}, {"decimal", d.value}, {"width", d.width}};
}

json spec_json(const RadicandSpec& spec) {
  return json{{"k", str(spec.k())}, {"m", spec.m()}};
}

json convergent_json(const Convergent& c) {
  return json{{"n", c.n}, {"b", str(c.b)}, {"p", str(c.p)}, {"q", str(c.q)},
              {"side", side_name(c.side)}};
}

json optional_index(const std::optional<long>& v) {
  return v ? json(*v) : json(nullptr);
}

json prediction_json(const PredictionOutcome& p) {
  return json{{"n", p.n},
              {"floor_H", str(p.floor_H)},
              {"candidate", str(p.candidate)},
              {"epsilon", p.epsilon ? json(*p.epsilon) : json(nullptr)},
              {"predicted", str(p.predicted)},
              {"actual", str(p.actual)},
              {"offset", str(p.offset)},
              {"formula_held", p.formula_held},
              {"window_held", p.window_held},
              {"fractional_part_nonzero", p.fractional_part_nonzero}};
}

json violation_json(const ViolationRecord& v) {
  json observed;
  if (const auto* interval = std::get_if<RationalInterval>(&v.observed)) {
    observed = enclosure_json(*interval);
  } else {
    observed = str(std::get<Integer>(v.observed));
  }
  return json{{"k", str(v.k)},         {"m", v.m},
              {"n", v.n},              {"quantity", quantity_name(v.quantity)},
              {"claimed", v.claimed},  {"observed", observed},
              {"p", str(v.p)},         {"q", str(v.q)},
              {"b_next", str(v.b)},    {"d", str(v.d)},
              {"p_prev", str(v.p_prev)}, {"q_prev", str(v.q_prev)}};
}

json check_json(const RadicandSpec& spec, const IndexCheck& c) {
  const auto [h_num, h_den] = leading_term_unreduced(spec, c.conv);
  json theta = enclosure_json(c.terms.theta);
  // theta_n is [b_{n+1}; ...]; some sources label it by n + 1.
  theta["index"] = c.n;
  theta["alt_index"] = c.n + 1;
  json out{{"n", c.n},
           {"side", side_name(c.conv.side)},
           {"p", str(c.conv.p)},
           {"q", str(c.conv.q)},
           {"b_next", str(c.next_quotient)},
           {"d", str(c.terms.d)},
           {"H", exact_json(c.terms.H)},
           {"H_unreduced", h_num.get_str() + "/" + h_den.get_str()},
           {"A", exact_json(c.terms.A)},
           {"theta", theta},
           {"R", enclosure_json(c.terms.R)},
           {"W", enclosure_json(c.terms.W)},
           {"V", c.terms.V ? enclosure_json(*c.terms.V) : json(nullptr)},
           {"precision_bits", c.terms.precision_bits},
           {"remainder_below_one", c.remainder_below_one},
           {"above_window_held", c.above_window_held},
           {"general_window_held", c.general_window_held},
           {"v_sign_matches",
            c.v_sign_matches ? json(*c.v_sign_matches) : json(nullptr)}};
  if (c.below_claims) {
    out["below_side_claims"] =
        json{{"H_n <= b_{n+1}", c.below_claims->lower_bound},
             {"b_{n+1} < H_n + 2", c.below_claims->upper_bound},
             {"eps_n in {-1, 0}", c.below_claims->epsilon_range}};
  } else {
    out["below_side_claims"] = nullptr;
  }
  out["prediction"] = prediction_json(c.prediction);
  return out;
}

json config_json(const RunConfig& config) {
  return json{{"command", command_name(config.command)},
              {"k_range", json::array({str(config.k_lo), str(config.k_hi)})},
              {"m_range", json::array({config.m_lo, config.m_hi})},
              {"terms", config.terms},
              {"precision_cap_bits", config.precision_cap_bits}};
}

std::string emit_json(const Report& report) {
  json doc;
  doc["tool"] = "bvpcf";
  doc["version"] = report.tool_version;
  doc["config"] = config_json(report.config);
  json results = json::array();
  json summary;
  switch (report.config.command) {
    case Command::kExpand:
      for (const Expansion& e : report.expansions) {
        json quotients = json::array();
        json convergents = json::array();
        for (const Convergent& c : e.terms()) {
          quotients.push_back(str(c.b));
          convergents.push_back(convergent_json(c));
        }
        json item = spec_json(e.spec());
        item["precision_bits"] = e.precision_used();
        item["quotients"] = quotients;
        item["convergents"] = convergents;
        results.push_back(item);
      }
      summary = json{{"expansions", report.expansions.size()}};
      break;
    case Command::kPredict: {
      std::size_t held = 0, total = 0;
      for (const PredictionRun& run : report.predictions) {
        json outcomes = json::array();
        for (const PredictionOutcome& p : run.outcomes) {
          const Convergent& c = run.expansion.at(p.n);
          json o = prediction_json(p);
          o["side"] = side_name(c.side);
          o["p"] = str(c.p);
          o["q"] = str(c.q);
          o["d"] = str(algebraic_distance(run.spec, c));
          o["H"] = exact_json(leading_term(run.spec, c));
          o["A"] = exact_json(shifted_leading_term(run.spec, c, run.expansion.previous(p.n)));
          outcomes.push_back(o);
          held += p.formula_held;
          ++total;
        }
        json item = spec_json(run.spec);
        item["predictions"] = outcomes;
        results.push_back(item);
      }
      summary = json{{"predictions", total}, {"formula_held", held},
                     {"formula_failed", total - held}};
      break;
    }
    case Command::kVerify: {
      std::size_t checked = 0, violations = 0;
      for (const TheoremReport& r : report.verifications) {
        json item = spec_json(r.spec);
        item["precision_bits"] = r.precision_bits;
        json checks = json::array();
        for (const IndexCheck& c : r.checks) checks.push_back(check_json(r.spec, c));
        json skipped = json::array();
        for (const SkippedIndex& s : r.skipped) {
          skipped.push_back(json{{"n", s.n}, {"reason", s.reason}});
        }
        json records = json::array();
        for (const ViolationRecord& v : r.violations) records.push_back(violation_json(v));
        item["checks"] = checks;
        item["skipped"] = skipped;
        item["violations"] = records;
        item["thresholds"] = json{{"remainder", optional_index(r.thresholds.remainder)},
                                  {"window", optional_index(r.thresholds.window)}};
        results.push_back(item);
        checked += r.checks.size();
        violations += r.violations.size();
      }
      summary = json{{"checked", checked}, {"violations", violations}};
      break;
    }
    case Command::kScan: {
      json cells = json::array();
      json records = json::array();
      const ScanResult empty;
      const ScanResult& s = report.scan ? *report.scan : empty;
      for (const ScanCell& c : s.cells) {
        cells.push_back(json{{"k", str(c.k)},
                             {"m", c.m},
                             {"valid", c.valid},
                             {"error", c.error},
                             {"checked", c.checked},
                             {"violations", c.violation_count},
                             {"remainder_threshold", optional_index(c.thresholds.remainder)},
                             {"window_threshold", optional_index(c.thresholds.window)},
                             {"precision_bits", c.precision_bits}});
      }
      for (const ViolationRecord& v : s.violations) records.push_back(violation_json(v));
      results.push_back(json{{"cells", cells}, {"violations", records}});
      summary = json{{"cells", s.cells.size()},
                     {"skipped", s.skipped},
                     {"failed", s.failed},
                     {"violations", s.violations.size()}};
      break;
    }
  }
  doc["results"] = results;
  doc["summary"] = summary;
  return doc.dump(2) + "\n";
}

// ---- csv ----

const char* kCsvColumns[] = {"schema_version", "record", "command", "k", "m",
                             "n", "side", "b", "b_next", "p", "q", "d", "H",
                             "A", "theta", "theta_width", "R", "R_width",
                             "status", "detail"};

class CsvWriter {
 public:
  explicit CsvWriter(Command command) : command_(command_name(command)) {
    std::string header;
    for (const char* c : kCsvColumns) {
      if (!header.empty()) header += ',';
      header += c;
    }
    out_ << header << '\n';
  }

  struct Row {
    std::string record, k, m, n, side, b, b_next, p, q, d, H, A, theta,
        theta_width, R, R_width, status, detail;
  };

  void write(const Row& r) {
    const std::string fields[] = {kCsvSchemaVersion, r.record, command_, r.k, r.m,
                                  r.n, r.side, r.b, r.b_next, r.p, r.q, r.d, r.H,
                                  r.A, r.theta, r.theta_width, r.R, r.R_width,
                                  r.status, r.detail};
    bool first = true;
    for (const std::string& f : fields) {
      if (!first) out_ << ',';
      first = false;
      out_ << quote(f);
    }
    out_ << '\n';
  }

  std::string str() const { return out_.str(); }

 private:
  static std::string quote(const std::string& f) {
    if (f.find_first_of(",\"\n") == std::string::npos) return f;
    std::string q = "\"";
    for (char c : f) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  }

  std::string command_;
  std::ostringstream out_;
};

CsvWriter::Row violation_row(const ViolationRecord& v) {
  CsvWriter::Row row;
  row.record = "violation";
  row.k = str(v.k);
  row.m = std::to_string(v.m);
  row.n = std::to_string(v.n);
  row.b_next = str(v.b);
  row.p = str(v.p);
  row.q = str(v.q);
  row.d = str(v.d);
  row.status = quantity_name(v.quantity);
  if (const auto* interval = std::get_if<RationalInterval>(&v.observed)) {
    const CertifiedDecimal d = render_enclosure(*interval);
    row.detail = "claimed " + v.claimed + "; observed " + d.value + " (" + d.width + ")";
  } else {
    row.detail = "claimed " + v.claimed + "; observed " + str(std::get<Integer>(v.observed));
  }
  return row;
}

std::string emit_csv(const Report& report) {
  CsvWriter csv(report.config.command);
  for (const Expansion& e : report.expansions) {
    for (const Convergent& c : e.terms()) {
      csv.write({"term", str(e.spec().k()), std::to_string(e.spec().m()),
                 std::to_string(c.n), side_name(c.side), str(c.b), "", str(c.p),
                 str(c.q), "", "", "", "", "", "", "", "certified", ""});
    }
  }
  for (const PredictionRun& run : report.predictions) {
    for (const PredictionOutcome& p : run.outcomes) {
      const Convergent& c = run.expansion.at(p.n);
      const Convergent prev = run.expansion.previous(p.n);
      csv.write({"prediction", str(run.spec.k()), std::to_string(run.spec.m()),
                 std::to_string(p.n), side_name(c.side), str(c.b), str(p.actual),
                 str(c.p), str(c.q), str(algebraic_distance(run.spec, c)),
                 to_fraction(leading_term(run.spec, c)),
                 to_fraction(shifted_leading_term(run.spec, c, prev)), "", "", "", "",
                 p.formula_held ? "formula_held" : "formula_failed",
                 "floor_H=" + str(p.floor_H) + ";candidate=" + str(p.candidate) +
                     ";epsilon=" + (p.epsilon ? std::to_string(*p.epsilon) : "none") +
                     ";offset=" + str(p.offset)});
    }
  }
  for (const TheoremReport& r : report.verifications) {
    const std::string k = str(r.spec.k());
    const std::string m = std::to_string(r.spec.m());
    for (const SkippedIndex& s : r.skipped) {
      CsvWriter::Row row;
      row.record = "skipped";
      row.k = k;
      row.m = m;
      row.n = std::to_string(s.n);
      row.status = "skipped";
      row.detail = s.reason;
      csv.write(row);
    }
    for (const IndexCheck& c : r.checks) {
      const CertifiedDecimal theta = render_enclosure(c.terms.theta);
      const CertifiedDecimal R = render_enclosure(c.terms.R);
      std::string detail = "above_window=" + std::string(c.above_window_held ? "1" : "0") +
                           ";general_window=" + (c.general_window_held ? "1" : "0") +
                           ";formula_held=" + (c.prediction.formula_held ? "1" : "0");
      if (c.below_claims) {
        detail += ";below_H_le_b=" + std::string(c.below_claims->lower_bound ? "1" : "0") +
                  ";below_b_lt_H_plus_2=" + (c.below_claims->upper_bound ? "1" : "0") +
                  ";below_eps_in_m1_0=" + (c.below_claims->epsilon_range ? "1" : "0");
      }
      csv.write({"check", k, m, std::to_string(c.n), side_name(c.conv.side),
                 str(c.conv.b), str(c.next_quotient), str(c.conv.p), str(c.conv.q),
                 str(c.terms.d), to_fraction(c.terms.H), to_fraction(c.terms.A),
                 theta.value, theta.width, R.value, R.width,
                 c.remainder_below_one ? "R_inside_unit" : "R_outside_unit", detail});
    }
    for (const ViolationRecord& v : r.violations) csv.write(violation_row(v));
  }
  if (report.scan) {
    for (const ScanCell& c : report.scan->cells) {
      CsvWriter::Row row;
      row.record = "cell";
      row.k = str(c.k);
      row.m = std::to_string(c.m);
      row.status = !c.valid ? "skipped" : (c.error.empty() ? "checked" : "failed");
      auto idx = [](const std::optional<long>& v) {
        return v ? std::to_string(*v) : std::string("none");
      };
      row.detail = c.valid && c.error.empty()
                       ? "checked=" + std::to_string(c.checked) +
                             ";violations=" + std::to_string(c.violation_count) +
                             ";remainder_threshold=" + idx(c.thresholds.remainder) +
                             ";window_threshold=" + idx(c.thresholds.window)
                       : c.error;
      csv.write(row);
    }
    for (const ViolationRecord& v : report.scan->violations) csv.write(violation_row(v));
  }
  return csv.str();
}

// ---- text ----

std::string quotient_list(const Expansion& e) {
  std::string out = "[";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i == 1) out += "; ";
    else if (i > 1) out += ", ";
    out += str(e.at(i).b);
  }
  return out + "]";
}

std::string with_width(const RationalInterval& interval) {
  const CertifiedDecimal d = render_enclosure(interval);
  return d.value + " (width " + d.width + ")";
}

void text_violation(std::ostringstream& out, const ViolationRecord& v) {
  out << "  violation m=" << v.m << " k=" << v.k << " n=" << v.n << " "
      << quantity_name(v.quantity) << ": claimed " << v.claimed << ", observed ";
  if (const auto* interval = std::get_if<RationalInterval>(&v.observed)) {
    out << with_width(*interval);
  } else {
    out << std::get<Integer>(v.observed);
  }
  out << "  [p=" << v.p << " q=" << v.q << " b_next=" << v.b << " d=" << v.d << "]\n";
}

std::string emit_text(const Report& report) {
  std::ostringstream out;
  out << "bvpcf " << report.tool_version << " " << command_name(report.config.command)
      << " k=" << report.config.k_lo << ".." << report.config.k_hi
      << " m=" << report.config.m_lo << ".." << report.config.m_hi
      << " terms=" << report.config.terms << "\n";
  for (const Expansion& e : report.expansions) {
    out << "k=" << e.spec().k() << " m=" << e.spec().m() << ": " << quotient_list(e)
        << "\n";
    for (const Convergent& c : e.terms()) {
      out << "  n=" << c.n << " b=" << c.b << " p/q=" << c.p << "/" << c.q << " "
          << side_name(c.side) << "\n";
    }
  }
  for (const PredictionRun& run : report.predictions) {
    out << "k=" << run.spec.k() << " m=" << run.spec.m() << "\n";
    for (const PredictionOutcome& p : run.outcomes) {
      out << "  n=" << p.n << " floor(H)=" << p.floor_H
          << " floor(A)=" << p.candidate << " eps="
          << (p.epsilon ? std::to_string(*p.epsilon) : std::string("unresolved"))
          << " predicted=" << p.predicted << " actual=" << p.actual
          << (p.formula_held ? " held" : " FAILED") << "\n";
    }
  }
  for (const TheoremReport& r : report.verifications) {
    out << "k=" << r.spec.k() << " m=" << r.spec.m() << ": "
        << quotient_list(r.expansion) << "\n";
    for (const SkippedIndex& s : r.skipped) {
      out << "  n=" << s.n << " skipped: " << s.reason << "\n";
    }
    for (const IndexCheck& c : r.checks) {
      const auto [h_num, h_den] = leading_term_unreduced(r.spec, c.conv);
      out << "  n=" << c.n << " " << side_name(c.conv.side) << " p/q=" << c.conv.p
          << "/" << c.conv.q << " d=" << c.terms.d << " b_next=" << c.next_quotient
          << "\n";
      out << "    H=" << h_num << "/" << h_den << " = " << to_fraction(c.terms.H)
          << " ~ " << render_enclosure(RationalInterval::point(c.terms.H)).value
          << "  A=" << to_fraction(c.terms.A) << "\n";
      out << "    theta_" << c.n << " (also labelled theta_" << c.n + 1
          << ") = " << with_width(c.terms.theta) << "\n";
      out << "    R=" << with_width(c.terms.R) << "  |R|<1: "
          << (c.remainder_below_one ? "certified" : "VIOLATED (certified)") << "\n";
      if (c.conv.side == Side::kAbove) {
        out << "    window H-2 < b_next <= H: "
            << (c.above_window_held ? "holds" : "FAILS") << "\n";
      }
      if (c.below_claims) {
        out << "    below-side claims (measured): H <= b_next: "
            << (c.below_claims->lower_bound ? "holds" : "FAILS")
            << "; b_next < H+2: " << (c.below_claims->upper_bound ? "holds" : "FAILS")
            << "; eps in {-1,0}: " << (c.below_claims->epsilon_range ? "holds" : "FAILS")
            << " (observed eps=" << c.prediction.offset << ")\n";
      }
      out << "    floor formula: floor(A)=" << c.prediction.candidate << " actual="
          << c.prediction.actual << (c.prediction.formula_held ? " held" : " FAILED")
          << "\n";
    }
    auto idx = [](const std::optional<long>& v) {
      return v ? std::to_string(*v) : std::string("none");
    };
    out << "  thresholds: remainder n0=" << idx(r.thresholds.remainder)
        << " window n0=" << idx(r.thresholds.window) << "\n";
    for (const ViolationRecord& v : r.violations) text_violation(out, v);
    out << "  violations: " << r.violations.size() << "\n";
  }
  if (report.scan) {
    for (const ScanCell& c : report.scan->cells) {
      out << "m=" << c.m << " k=" << c.k << ": ";
      if (!c.valid) {
        out << "skipped (" << c.error << ")\n";
      } else if (!c.error.empty()) {
        out << "failed (" << c.error << ")\n";
      } else {
        out << "checked=" << c.checked << " violations=" << c.violation_count
            << " remainder n0="
            << (c.thresholds.remainder ? std::to_string(*c.thresholds.remainder) : "none")
            << "\n";
      }
    }
    for (const ViolationRecord& v : report.scan->violations) text_violation(out, v);
    out << "cells=" << report.scan->cells.size() << " skipped=" << report.scan->skipped
        << " failed=" << report.scan->failed
        << " violations=" << report.scan->violations.size() << "\n";
  }
  return out.str();
}

}  // namespace

std::string emit(const Report& report, Format format) {
  switch (format) {
    case Format::kJson:
      return emit_json(report);
    case Format::kCsv:
      return emit_csv(report);
    case Format::kText:
      return emit_text(report);
  }
  throw Error(Errc::kInvalidArgument, "unknown output format");
}

}  // namespace bvpcf
