#pragma once

#include <iosfwd>

namespace qent::selftest {

// Runs the full acceptance suite (fig1/fig2 endpoint values, sudden death
// and revival windows, closed-form identities, backflow witness,
// randomized property checks, serialization determinism), printing one
// pass/fail line per criterion. Returns true when every criterion passed.
// Deterministic: all randomized checks run from fixed seeds.
bool run_all(std::ostream &out);

} // namespace qent::selftest
