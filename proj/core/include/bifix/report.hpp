#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bifix/limits.hpp"

namespace bifix {

/// One verified quantity. `pass` is derived from the kind:
///   Equals    observed == expected
///   Bound     observed <= expected
///   Range     lo <= observed <= hi
///   Recorded  informational only, always passes
struct Measure {
    enum class Kind { Equals, Bound, Range, Recorded };

    std::string name;
    Kind kind;
    long long observed = 0;
    long long expected = 0; // Equals / Bound / Recorded (reference value)
    long long lo = 0;       // Range
    long long hi = 0;       // Range
    bool pass = true;

    static Measure equals(std::string name, long long observed, long long expected);
    static Measure bound(std::string name, long long observed, long long expected);
    static Measure range(std::string name, long long observed, long long lo, long long hi);
    static Measure recorded(std::string name, long long observed, long long reference);
};

/// Structured output of one experiment: an id, its numeric parameters, and
/// the measures with their pass flags.
struct Report {
    std::string experiment;
    std::vector<std::pair<std::string, long long>> parameters;
    std::vector<Measure> measures;

    bool pass() const;
};

std::string to_json(const Report& report);
std::string to_text(const Report& report);

/// Observed vs. expected complexities of all basic operations on the
/// ternary witness pair (m on the left, the b/c-swapped dialect on the
/// right). Equality is asserted for m, n >= 9; for smaller sizes the
/// observed values are recorded without a verdict. Requires m, n >= 7.
Report table_ops(int m, int n, const Limits& lim = Limits::from_env());

/// Syntactic complexity of the superexponential witness against the closed
/// formula; for n == 6 the closure is additionally compared elementwise
/// with the direct enumeration of the three transformation types.
Report verify_syntactic(int n, const Limits& lim = Limits::from_env());

/// Atom count and every atom complexity of the (n+1)-letter witness against
/// the closed bounds.
Report verify_atoms(int n, const Limits& lim = Limits::from_env());

/// Reversal complexity of revmagic(n, alpha) for every alpha in
/// reverse_range(n).
Report verify_revmagic(int n, const Limits& lim = Limits::from_env());

/// `trials` random bifix-free pairs with 3 <= m, n <= n_max: the product
/// must have exactly m+n-2 states every time.
Report verify_product(int n_max, int trials, std::uint64_t seed,
                      const Limits& lim = Limits::from_env());

/// `trials` random bifix-free DFAs: star complexity must be n-1 or n-2 and
/// match the structural prediction every time.
Report verify_star(int n_max, int trials, std::uint64_t seed,
                   const Limits& lim = Limits::from_env());

} // namespace bifix
