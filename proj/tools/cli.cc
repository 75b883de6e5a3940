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

#include "cli.hpp"

#include <fstream>
#include <map>
#include <memory>
#include <ostream>
#include <utility>

#include "CLI11.hpp"

namespace bvpcf::cli {

namespace {

bool is_decimal(const std::string& s) {
  return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
}

std::string strip_zeros(const std::string& s) {
  const auto pos = s.find_first_not_of('0');
  return pos == std::string::npos ? "0" : s.substr(pos);
}

// a <= b for non-negative decimal strings.
bool decimal_le(const std::string& a, const std::string& b) {
  const std::string x = strip_zeros(a), y = strip_zeros(b);
  if (x.size() != y.size()) return x.size() < y.size();
  return x <= y;
}

std::pair<std::string, std::string> split_range(const std::string& text,
                                                const char* flag) {
  const auto pos = text.find("..");
  if (pos == std::string::npos) {
    throw CLI::ValidationError(flag, "expected LO..HI, got '" + text + "'");
  }
  std::string lo = text.substr(0, pos), hi = text.substr(pos + 2);
  if (!is_decimal(lo) || !is_decimal(hi)) {
    throw CLI::ValidationError(flag, "bounds must be non-negative integers");
  }
  if (!decimal_le(lo, hi)) {
    throw CLI::ValidationError(flag, "empty range " + text);
  }
  return {strip_zeros(lo), strip_zeros(hi)};
}

unsigned long to_ulong(const std::string& s, const char* flag) {
  if (s.size() > 9) throw CLI::ValidationError(flag, "value too large");
  return std::stoul(s);
}

}  // namespace

ParseOutcome parse_args(int argc, const char* const* argv) {
  CLI::App app{"Certified continued fractions of k^(1/m) and "
               "Bombieri-van der Poorten analysis",
               "bvpcf"};
  app.require_subcommand(1);
  app.set_version_flag("--version", bvpcf_version());

  std::string k, k_range, m_range, format = "json", out_path;
  unsigned long m = 0;
  std::size_t terms = 10;
  unsigned long cap = 1ul << 20;
  unsigned threads = 0;

  const std::map<std::string, bvpcf_command> commands = {
      {"expand", BVPCF_CMD_EXPAND},
      {"predict", BVPCF_CMD_PREDICT},
      {"verify", BVPCF_CMD_VERIFY},
      {"scan", BVPCF_CMD_SCAN}};
  const std::map<std::string, const char*> descriptions = {
      {"expand", "certified partial quotients and convergents"},
      {"predict", "floor-formula prediction of b_{n+1} for n = 1..terms"},
      {"verify", "check the remainder, window and floor-formula claims"},
      {"scan", "verify over ranges of k and m"}};

  for (const auto& [name, command] : commands) {
    CLI::App* sub = app.add_subcommand(name, descriptions.at(name));
    auto* k_opt = sub->add_option("--k", k, "radicand k")->check([](const std::string& s) {
      return is_decimal(s) ? std::string() : std::string("k must be a non-negative integer");
    });
    auto* kr_opt = sub->add_option("--k-range", k_range, "radicand range LO..HI");
    k_opt->excludes(kr_opt);
    auto* m_opt = sub->add_option("--m", m, "root degree m");
    auto* mr_opt = sub->add_option("--m-range", m_range, "degree range LO..HI");
    m_opt->excludes(mr_opt);
    sub->add_option("--terms", terms, "term count / max index N (default 10)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--precision-cap", cap, "hard cap on alpha precision in bits")
        ->check(CLI::Range(64ul, 1ul << 30));
    sub->add_option("--format", format, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", out_path, "output path (default stdout)");
    sub->add_option("--threads", threads, "scan worker threads (0: hardware concurrency)")
        ->envname("BVPCF_THREADS")
        ->check(CLI::Range(0u, 1024u));
  }

  ParseOutcome outcome;
  try {
    app.parse(argc, argv);
    CliConfig config;
    for (const auto& [name, command] : commands) {
      if (app.got_subcommand(name)) config.command = command;
    }
    if (k.empty() && k_range.empty()) {
      throw CLI::RequiredError("one of --k or --k-range");
    }
    if (!k.empty()) {
      config.k_lo = config.k_hi = strip_zeros(k);
    } else {
      std::tie(config.k_lo, config.k_hi) = split_range(k_range, "--k-range");
    }
    const CLI::App* chosen = app.get_subcommands().front();
    if (chosen->count("--m") == 0 && m_range.empty()) throw CLI::RequiredError("one of --m or --m-range");
    if (m_range.empty()) {
      config.m_lo = config.m_hi = m;
    } else {
      auto [lo, hi] = split_range(m_range, "--m-range");
      config.m_lo = to_ulong(lo, "--m-range");
      config.m_hi = to_ulong(hi, "--m-range");
    }
    config.terms = terms;
    config.precision_cap_bits = cap;
    config.threads = threads;
    config.format = format == "csv"    ? BVPCF_FORMAT_CSV
                    : format == "text" ? BVPCF_FORMAT_TEXT
                                       : BVPCF_FORMAT_JSON;
    config.out_path = out_path;
    outcome.config = std::move(config);
  } catch (const CLI::CallForHelp&) {
    outcome.message = app.help();
  } catch (const CLI::CallForAllHelp&) {
    outcome.message = app.help("", CLI::AppFormatMode::All);
  } catch (const CLI::CallForVersion&) {
    outcome.message = std::string(bvpcf_version()) + "\n";
  } catch (const CLI::Error& e) {
    outcome.exit_code = kExitUsage;
    outcome.message = e.what();
  }
  return outcome;
}

int exit_code_for(bvpcf_status status) {
  switch (status) {
    case BVPCF_OK:
      return kExitOk;
    case BVPCF_ERR_INVALID_ARGUMENT:
    case BVPCF_ERR_INVALID_DEGREE:
      return kExitUsage;
    case BVPCF_ERR_PERFECT_POWER:
      return kExitPerfectPower;
    case BVPCF_ERR_PRECISION_CEILING:
      return kExitPrecisionCeiling;
    case BVPCF_ERR_IO:
      return kExitIo;
    default:
      return kExitInternal;
  }
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  bvpcf_run_config rc;
  bvpcf_run_config_init(&rc);
  rc.command = config.command;
  rc.k_lo = config.k_lo.c_str();
  rc.k_hi = config.k_hi.c_str();
  rc.m_lo = config.m_lo;
  rc.m_hi = config.m_hi;
  rc.terms = config.terms;
  rc.precision_cap_bits = config.precision_cap_bits;
  rc.threads = config.threads;

  bvpcf_report* raw = nullptr;
  bvpcf_status status = bvpcf_run(&rc, &raw);
  std::unique_ptr<bvpcf_report, decltype(&bvpcf_report_destroy)> report(
      raw, &bvpcf_report_destroy);
  if (status != BVPCF_OK) {
    err << "bvpcf: " << bvpcf_status_name(status) << ": " << bvpcf_last_error() << "\n";
    return exit_code_for(status);
  }

  char* text = nullptr;
  std::size_t length = 0;
  status = bvpcf_report_render(report.get(), config.format, &text, &length);
  std::unique_ptr<char, decltype(&bvpcf_string_free)> owned(text, &bvpcf_string_free);
  if (status != BVPCF_OK) {
    err << "bvpcf: " << bvpcf_status_name(status) << ": " << bvpcf_last_error() << "\n";
    return exit_code_for(status);
  }

  if (config.out_path.empty()) {
    out.write(text, static_cast<std::streamsize>(length));
    out.flush();
    return out ? kExitOk : kExitIo;
  }
  std::ofstream file(config.out_path, std::ios::binary | std::ios::trunc);
  file.write(text, static_cast<std::streamsize>(length));
  if (!file) {
    err << "bvpcf: cannot write " << config.out_path << "\n";
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace bvpcf::cli
