#ifndef PADICSPEC_REPORT_JSON_HPP
#define PADICSPEC_REPORT_JSON_HPP

#include <nlohmann/json.hpp>

#include "padicspec/spectrum.hpp"

namespace padicspec {

/// mpz as a JSON number when it fits in 64 bits, else a decimal string.
/// Residues at precision 50 routinely exceed 2^64; goldens must not depend on
/// the parser's bignum behavior.
nlohmann::ordered_json json_int(const mpz_class& x);

nlohmann::ordered_json witness_json(const ReducibleWitness& w);

/// The stable report document:
///   { "anchor": ..., "space": {...}, "rows": [...], "generic": {...} }
nlohmann::ordered_json fiber_report_json(const FiberReport& rep);

nlohmann::ordered_json spec_point_json(const SpecPoint& pt);
nlohmann::ordered_json residue_json(const ResidueDescriptor& r);
nlohmann::ordered_json classify_json(const ClassifyResult& c);

} // namespace padicspec

#endif
