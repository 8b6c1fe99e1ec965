#pragma once

// String-addressed registry over the families, used by the CLI and by
// report serialization.

#include <string>
#include <string_view>
#include <vector>

#include "momentforge/moments.hpp"

namespace momentforge {

enum class Family { Schur, Invmaj, Boolean, Domino, Board1n };

/// "schur", "invmaj", "boolean", "domino", "board1n". Throws
/// std::invalid_argument listing the valid ids otherwise.
Family parse_family(std::string_view id);
std::string_view family_id(Family family);
/// Required parameter keys, e.g. {"n", "c"} for schur.
std::vector<std::string> family_parameters(Family family);
/// Throws std::invalid_argument naming the missing or out-of-range key.
void validate_parameters(Family family, const ParamMap& params);

/// Moments of orders 0..r_max of the requested kind. Closed forms where they
/// exist; the exhaustive oracle fills orders without one (Schur r >= 3,
/// Boolean k >= 1 beyond the closed forms) inside its size guard.
/// Binomial kind is about the mean for invmaj and board1n, plain otherwise.
MomentVector<Rational> family_moments(Family family, const ParamMap& params, MomentKind kind, int r_max,
                                      unsigned threads = 0);

/// Exact PGF in q. Closed products where available, else the oracle.
Polynomial family_pgf(Family family, const ParamMap& params, unsigned threads = 0);

/// Central moments as a function of the grid parameter n with the other
/// parameters held fixed; for normality reports.
CentralMomentSource central_source(Family family, const ParamMap& fixed);

}  // namespace momentforge
