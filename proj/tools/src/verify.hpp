#pragma once

// Invariant battery behind the `verify` subcommand.  Returns the number of
// failed checks; quick mode skips the Monte Carlo heavy ones.
int run_verify(bool quick, int threads);
