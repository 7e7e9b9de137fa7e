#pragma once

#include "sprime/ideals.hpp"
#include "sprime/krull.hpp"
#include "sprime/serialize.hpp"

namespace sprime {

// JSON renderings of library results. Every verdict object carries "scope":
// "global" for structural proofs and exact refutations, "window" for anything read off a
// finite window or horizon.

Json to_json(const Window& w);
Json to_json(const GrowthCertificate& c);
Json to_json(const LowerCertificate& c);
Json to_json(const AuditReport& r);
Json to_json(const std::vector<TrendSample>& trend);
Json to_json(const ZeroSetInfo& z);
Json to_json(const DivisibilityVerdict& v);
Json to_json(const InvertibilityVerdict& v);
Json to_json(const MembershipVerdict& v);
Json to_json(const PrincipalReport& r);
Json to_json(const MaximalityWitness& w);
Json to_json(const NonfixedVerdict& v);
Json to_json(const PrimeClassification& c);
Json to_json(const ZeroOrder& z);
Json to_json(const KrullVerdict& v);
Json to_json(const ChainReport& r);

/// Whether a verdict is settled (exact refutation or globally certified).
bool is_decided(const DivisibilityVerdict& v);
bool is_decided(const InvertibilityVerdict& v);
bool is_decided(const MembershipVerdict& v);
bool is_decided(const PrimeClassification& c);
bool is_decided(const NonfixedVerdict& v);
bool is_decided(const ChainReport& r);

}  // namespace sprime
