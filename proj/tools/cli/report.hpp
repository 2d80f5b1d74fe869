#ifndef QTHETA_TOOLS_REPORT_HPP
#define QTHETA_TOOLS_REPORT_HPP

#include <json.hpp>

#include <complex>
#include <string>

#include "qtheta/shintani.hpp"

namespace qtheta::cli {

/// Map-backed, so object keys always serialize in sorted order.
using Json = nlohmann::json;

Json complex_json(std::complex<double> z);
std::complex<double> complex_from(const Json& j);

const char* kind_name(shintani::GenKind k);
shintani::GenKind kind_from(const std::string& name);

Json ledger_to_json(const shintani::DerivLedger& L);
shintani::DerivLedger ledger_from_json(const Json& j);

/// Deterministic serialization: sorted keys, every floating-point number
/// printed with 17 significant digits.
std::string dump17(const Json& j, int indent = 2);

/// CSV view: suite reports become header + one row per check, everything
/// else flattens to key,value rows sorted by path.
std::string to_csv(const Json& report);

} // namespace qtheta::cli

#endif
