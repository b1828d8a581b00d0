#pragma once

#include <string>
#include <vector>

#include "sprimary/decompose.hpp"

namespace sprimary {

// documents: {"gens":[...]} for finite rings, {"n":6} for nZ
json ideal_to_json(const Ideal& I);
Ideal ideal_from_json(const RingPtr& ring, const json& j);

// documents: {"gens":[...]} (finite), {"primes":[...],"units":bool} or
// {"complement_of_prime":p} (integer ring)
json mset_to_json(const MultiplicativeSet& S);
MultiplicativeSet mset_from_json(const RingPtr& ring, const json& j);

json element_to_json(const RingElement& e);

json certificate_to_json(const SPrimaryCertificate& c, const RingPtr& ring);
json certificate_to_json(const IrreducibilityCertificate& c, const RingPtr& ring);
json certificate_to_json(const SFiniteCertificate& c, const RingPtr& ring);
json spectrum_to_json(const SpectrumReport& r, const RingPtr& ring);

json minimality_to_json(const MinimalityReport& m);
json decomposition_to_json(const Decomposition& d);
/// Components may omit "s"; missing witnesses are recovered with a fresh
/// S-primary search during validation.
Decomposition decomposition_from_json(const RingPtr& ring, const MultiplicativeSet& S,
                                      const json& j);

/// Structural validation against the shipped schema subset - supports type,
/// properties, required, items, enum, additionalProperties, oneOf, minimum.
/// Returns human-readable problems; empty means valid.
std::vector<std::string> schema_validate(const json& doc, const json& schema);

}  // namespace sprimary
