// Command-line front end.  Exit codes: 0 — success / all checks passed;
// 1 — a mathematical check failed (counterexample on stdout, diagnostics on
// stderr); 2 — usage or input-format error.

#pragma once

namespace nelson {

int run_cli(int argc, const char* const* argv);

}  // namespace nelson
