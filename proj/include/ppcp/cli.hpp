#pragma once

#include <string>
#include <vector>

namespace ppcp {

/// Exit codes: 0 success / mathematical "yes"; 1 a well-defined negative
/// mathematical answer; 2 usage or budget errors.
struct CommandResult {
  int exit_code = 0;
  std::string output;
};

/// Entry point behind the ppcp binary. Subcommands:
///   group info <spec>
///   group prim <spec> [--dot FILE] [--json FILE]
///   structure components <spec>
///   structure hom <a> <b>
///   cond check --structure <spec> --cond <literal>
///   cond criterion --g <actionspec> --h <actionspec>
///   cond fs-spectrum <groupspec> [--upto N]
///   forge pipeline --domain 2 --max <n> [--report FILE]
///   reduce --action <actionspec>
/// Global flags: --budget <n> (overrides every enumeration cap),
/// --threads <n> (criterion enumeration workers).
CommandResult run(const std::vector<std::string>& args);

} // namespace ppcp
