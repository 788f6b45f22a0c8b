#pragma once

#include "json.hpp"

#include "kptau/hirota.hpp"
#include "kptau/lax.hpp"
#include "kptau/partition.hpp"
#include "kptau/tau.hpp"

namespace kptau {

using Json = nlohmann::json;

// Canonical polynomial format: array of {"coeff": "p/q", "exps": {"t3": 2}}
// terms, sorted leading-first by the canonical monomial order. Bit-exact
// round-trip.
Json poly_to_json(const Polynomial& p);
Polynomial poly_from_json(const Json& j);

Json ratfun_to_json(const RationalFunction& f);      // {"num": ..., "den": ...}
RationalFunction ratfun_from_json(const Json& j);

Json shift_table_to_json(const ShiftTable& c);       // {"1": "1/2", ...}
ShiftTable shift_table_from_json(const Json& j);

Json tau_to_json(const TauFunction& t);              // {"level": m, "poly": ...}
TauFunction tau_from_json(const Json& j);

Json chain_to_json(const TauChain& c);               // array of tau objects
TauChain chain_from_json(const Json& j);

Json psdo_to_json(const PseudoDiffOp& op);           // {"coeffs": {"-1": {...}}, "floor": f}
PseudoDiffOp psdo_from_json(const Json& j);

Json spectrum_to_json(const PeriodicSpectrum& v);

Json verdict_to_json(const Verdict& v);              // {"pass": ..., "witness": ..., "checked": ...}

Json laurent_to_json(const LaurentSymbol& f);
LaurentSymbol laurent_from_json(const Json& j);

// Canonical one-line dump (sorted keys, no locale, exact rational strings).
std::string dump_canonical(const Json& j, bool pretty = false);

}  // namespace kptau
