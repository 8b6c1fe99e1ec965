#pragma once

// JSON and CSV renderings of the library's result types. Exact values are
// "p/q" strings; reals are decimal strings at a stated number of digits.

#include <nlohmann/json.hpp>
#include <string>

#include "momentforge/boolean.hpp"
#include "momentforge/fitter.hpp"
#include "momentforge/mgf.hpp"
#include "momentforge/moments.hpp"
#include "momentforge/oracle.hpp"

namespace momentforge::cli {

using Json = nlohmann::ordered_json;

Json params_json(const ParamMap& params);
/// "m=2;n=3"
std::string params_text(const ParamMap& params);

Json moments_json(const MomentVector<Rational>& m);
Json histogram_json(const oracle::Histogram& h);
Json polynomial_json(const Polynomial& p);
Json normality_json(const NormalityReport& report, unsigned digits);
Json mgf_json(const MgfReport& report, unsigned digits);
Json fit_json(const FitResult& fit);
Json identities_json(const std::vector<boolean::IdentityRow>& rows);

/// RFC 4180-style field quoting when needed.
std::string csv_field(const std::string& s);

}  // namespace momentforge::cli
