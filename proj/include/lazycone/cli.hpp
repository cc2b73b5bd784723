// Batch front end. Four subcommands:
//   verify     run the identity suite, text or JSON report
//   dump       write one witness matrix window in the coordinate format
//   cyclic     trace-space and cyclic-cohomology dimensions of an algebra
//   partition  list block members below a window
// Exit codes: 0 all checks pass, 1 at least one identity/certificate
// violation, 2 input or parse error. Reports are byte-deterministic for
// identical arguments.

#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lazycone/coords_io.hpp"
#include "lazycone/cyclic.hpp"
#include "lazycone/partition.hpp"
#include "lazycone/structure_algebra.hpp"
#include "lazycone/verify.hpp"
#include "lazycone/witnesses.hpp"

namespace lazycone {

namespace detail {

inline nlohmann::ordered_json report_json(const VerificationReport& report,
                                          const VerifyConfig& config, bool mutated,
                                          const std::string& format) {
  nlohmann::ordered_json doc;
  doc["config"] = {
      {"window", config.window},       {"index_bound", config.index_bound},
      {"seeds", config.seeds},         {"support", config.support},
      {"density", rational_str(config.density)},
      {"scheme", mutated ? "diagonal(mutated)" : "diagonal"},
      {"format", format},
  };
  nlohmann::ordered_json results = nlohmann::ordered_json::array();
  for (const IdentityRecord& r : report.records) {
    nlohmann::ordered_json item;
    item["id"] = r.id;
    item["status"] = r.status;
    item["window"] = r.window;
    if (r.seed)
      item["seed"] = *r.seed;
    if (r.mismatch) {
      item["mismatch"] = {
          {"i", r.mismatch->i},
          {"j", r.mismatch->j},
          {"lhs", rational_str(r.mismatch->lhs)},
          {"rhs", rational_str(r.mismatch->rhs)},
      };
      if (!r.mismatch->note.empty())
        item["mismatch"]["note"] = r.mismatch->note;
    }
    if (!r.detail.empty())
      item["detail"] = r.detail;
    results.push_back(std::move(item));
  }
  doc["results"] = std::move(results);
  doc["summary"] = {
      {"total", report.records.size()},
      {"pass", report.count("pass")},
      {"fail", report.count("fail")},
      {"error", report.count("error")},
  };
  return doc;
}

inline void report_text(std::ostream& out, const VerificationReport& report) {
  for (const IdentityRecord& r : report.records) {
    out << r.status << "  " << r.id;
    if (r.seed)
      out << " [seed " << *r.seed << "]";
    out << " (window " << r.window << ")";
    if (r.mismatch) {
      out << "  at (" << r.mismatch->i << "," << r.mismatch->j << "): "
          << rational_str(r.mismatch->lhs) << " != " << rational_str(r.mismatch->rhs);
      if (!r.mismatch->note.empty())
        out << " [" << r.mismatch->note << "]";
    }
    if (!r.detail.empty())
      out << "  " << r.detail;
    out << "\n";
  }
  out << "summary: " << report.count("pass") << " pass, " << report.count("fail")
      << " fail, " << report.count("error") << " error\n";
}

}  // namespace detail

// In-process entry point; `args` excludes the program name.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact witness-family verifier and cyclic-cohomology calculator"};
  app.name("lazycone");
  app.require_subcommand(1);

  // --- verify -------------------------------------------------------------
  VerifyConfig config;
  std::string density_text = "1/2";
  std::string format = "json";
  std::string verify_out_path;
  bool mutate_partition = false;

  CLI::App* verify = app.add_subcommand("verify", "Run the full identity suite");
  verify->add_option("--window", config.window, "Window size W")
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 32))
      ->capture_default_str();
  verify->add_option("--index-bound", config.index_bound, "Largest block index N")
      ->capture_default_str();
  verify->add_option("--seeds", config.seeds, "Seeds for test elements")
      ->delimiter(',')
      ->expected(1, -1);
  verify->add_option("--support", config.support, "Support box for test elements")
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{4096}))
      ->capture_default_str();
  verify->add_option("--density", density_text, "Nonzero density of test elements (p/q)")
      ->capture_default_str();
  verify->add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  verify->add_option("--out", verify_out_path, "Write the report to a file");
  // Test-only: corrupt the partition so the suite must fail.
  verify->add_flag("--mutate-partition", mutate_partition)->group("");

  // --- dump ---------------------------------------------------------------
  std::string dump_matrix;
  std::uint64_t dump_index = 0;
  std::uint64_t dump_window = 0;
  std::string dump_out_path;

  CLI::App* dump = app.add_subcommand("dump", "Write one matrix window as coordinates");
  dump->add_option("--matrix", dump_matrix, "Which matrix")
      ->required()
      ->check(CLI::IsMember({"v", "w", "p", "theta1", "theta2", "theta3", "rho-unit"}));
  dump->add_option("--index", dump_index, "Block index n for v, w, p");
  dump->add_option("--window", dump_window, "Window size W")
      ->required()
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 32));
  dump->add_option("--out", dump_out_path, "Write to a file instead of stdout");

  // --- cyclic -------------------------------------------------------------
  std::string algebra_path;
  std::string builtin_name;
  CyclicLimits limits;
  std::uint64_t max_degree = 2;

  CLI::App* cyclic = app.add_subcommand("cyclic", "Trace space and HC dimensions");
  CLI::Option* opt_file = cyclic->add_option("--algebra", algebra_path, "Algebra file (JSON)");
  CLI::Option* opt_builtin = cyclic->add_option("--builtin", builtin_name, "Built-in algebra")
                                 ->check(CLI::IsMember({"mat2", "mat3", "qq2", "tri2", "scalar"}));
  opt_file->excludes(opt_builtin);
  cyclic->add_option("--max-degree", max_degree, "Compute HC^0..HC^n")
      ->capture_default_str();
  cyclic->add_option("--degree-cap", limits.max_degree, "Reject degrees above this")
      ->capture_default_str();
  cyclic
      ->add_option("--coefficient-cap", limits.max_coefficients,
                   "Reject tensors with more coefficients")
      ->capture_default_str();

  // --- partition ----------------------------------------------------------
  std::uint64_t part_blocks = 8;
  std::uint64_t part_window = 64;

  CLI::App* partition = app.add_subcommand("partition", "List block members below a window");
  partition->add_option("--blocks", part_blocks, "Number of blocks to list")
      ->capture_default_str();
  partition->add_option("--window", part_window, "Window size W")
      ->capture_default_str();

  std::vector<const char*> argv;
  argv.push_back("lazycone");
  for (const std::string& a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      try {
        config.density = parse_rational(density_text);
      } catch (const std::invalid_argument& e) {
        err << "error: --density: " << e.what() << "\n";
        return 2;
      }
      const WitnessFamily family(mutate_partition ? mutated_diagonal_scheme()
                                                  : diagonal_scheme());
      const VerificationReport report = verify_identities(family, config);

      std::ostringstream rendered;
      if (format == "json")
        rendered << detail::report_json(report, config, mutate_partition, format).dump(2)
                 << "\n";
      else
        detail::report_text(rendered, report);

      if (verify_out_path.empty()) {
        out << rendered.str();
      } else {
        std::ofstream file(verify_out_path, std::ios::binary);
        if (!file) {
          err << "error: cannot open " << verify_out_path << " for writing\n";
          return 2;
        }
        file << rendered.str();
      }
      return report.all_pass() ? 0 : 1;
    }

    if (dump->parsed()) {
      const WitnessFamily family;
      std::optional<LazyMatrix> subject;
      if (dump_matrix == "v")
        subject = family.v(dump_index);
      else if (dump_matrix == "w")
        subject = family.w(dump_index);
      else if (dump_matrix == "p")
        subject = family.p(dump_index);
      else if (dump_matrix == "theta1")
        subject = family.theta(1);
      else if (dump_matrix == "theta2")
        subject = family.theta(2);
      else if (dump_matrix == "theta3")
        subject = family.theta(3);
      else
        subject = family.rho(identity_matrix());

      if (dump_out_path.empty()) {
        write_coords(out, *subject, dump_window);
      } else {
        std::ofstream file(dump_out_path, std::ios::binary);
        if (!file) {
          err << "error: cannot open " << dump_out_path << " for writing\n";
          return 2;
        }
        write_coords(file, *subject, dump_window);
      }
      return 0;
    }

    if (cyclic->parsed()) {
      if (algebra_path.empty() && builtin_name.empty()) {
        err << "error: cyclic needs --algebra or --builtin\n";
        return 2;
      }
      StructureAlgebra alg;
      if (!algebra_path.empty()) {
        std::ifstream file(algebra_path);
        if (!file) {
          err << "error: cannot open " << algebra_path << "\n";
          return 2;
        }
        try {
          alg = parse_algebra(file, algebra_path);
        } catch (const AlgebraParseError& e) {
          err << "error: " << algebra_path << ": " << e.what() << "\n";
          return 2;
        }
      } else {
        alg = builtin_algebra(builtin_name);
      }
      const AlgebraVerdict verdict = validate_algebra(alg);
      if (!verdict.ok()) {
        err << "error: " << alg.name << ": " << verdict.describe() << "\n";
        return 2;
      }
      out << "algebra: " << alg.name << " (dim " << alg.dim << ")\n";
      out << "trace space dimension: " << trace_space(alg).rank() << "\n";
      try {
        for (std::uint64_t n = 0; n <= max_degree; ++n)
          out << "hc dimension (n=" << n << "): " << hc_dimension(alg, n, limits) << "\n";
      } catch (const DegreeCapError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
      }
      return 0;
    }

    // partition
    const PartitionScheme scheme = diagonal_scheme();
    for (std::uint64_t b = 0; b < part_blocks; ++b) {
      out << "block " << b << ":";
      for (const std::uint64_t m : members_below(scheme, b, part_window))
        out << " " << m;
      out << "\n";
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace lazycone
