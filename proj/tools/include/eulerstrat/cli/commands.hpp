#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "eulerstrat/report.hpp"

namespace eulerstrat::cli {

enum ExitCode : int { exit_pass = 0, exit_fail = 1, exit_input = 2 };

struct Options {
  std::filesystem::path path;
  std::optional<std::filesystem::path> function_path;
  std::optional<Formula> formula;
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  std::size_t strata = 8;
  bool json = false;
  bool skip_kernel_validation = false;
  bool inject_fault = false;
  std::string catalog_action;  // list, run, emit
  std::string catalog_name;
};

int cmd_validate(const Options& options, std::ostream& out);
int cmd_bases(const Options& options, std::ostream& out);
int cmd_decompose(const Options& options, std::ostream& out);
int cmd_pushforward(const Options& options, std::ostream& out);
int cmd_verify(const Options& options, std::ostream& out);
int cmd_fuzz(const Options& options, std::ostream& out);
int cmd_catalog(const Options& options, std::ostream& out);

/// Name of the most derived library error type, e.g. "CycleError".
std::string error_kind(const std::exception& e);

/// Parses arguments and dispatches. Library errors are written to `err` and
/// give exit code 2, as do usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eulerstrat::cli
