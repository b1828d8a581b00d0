#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sprimary/predicates.hpp"

namespace sprimary {

struct DecompositionComponent {
    Ideal Q;
    Ideal P;        // rad(Q)
    RingElement s;  // witness for the S-primary property of Q
};

struct MinimalityReport {
    bool distinct_saturated_radicals = false;
    std::optional<std::pair<int, int>> radical_clash;
    std::vector<bool> redundant_saturated;  // S(Q_i) contains the intersection of the other S(Q_j)
    std::vector<bool> redundant_plain;      // S(Q_i) contains the intersection of the other Q_j
    bool forms_agree = false;
    bool minimal = false;
};

struct Decomposition {
    Ideal target;
    std::vector<DecompositionComponent> components;
    std::optional<MinimalityReport> minimal;

    Ideal intersection() const;
};

/// Brute-force S-primary decomposition over a finite ring: filter the ideals
/// above I to the S-primary ones and search subsets by increasing cardinality
/// (lexicographic within) for an exact intersection. nullopt when no subset
/// works.
std::optional<Decomposition> decompose_finite(const Ideal& I, const MultiplicativeSet& S);

/// All proper ideals disjoint from S passing is_s_primary, canonical order,
/// each with its certificate witness.
std::vector<std::pair<Ideal, RingElement>> s_primary_ideals(const RingPtr& ring,
                                                            const MultiplicativeSet& S);

/// decompose_finite against a precomputed candidate pool (same semantics);
/// lets corpus sweeps share the per-(ring, S) S-primary scan.
std::optional<Decomposition> decompose_finite_with_pool(
    const Ideal& I, const MultiplicativeSet& S,
    const std::vector<std::pair<Ideal, RingElement>>& pool);

/// Factorization-based decomposition of nZ: the part of n supported on
/// invertible primes is absorbed into one component per remaining prime
/// power; every component is re-checked against the residue search.
Decomposition decompose_integers(const Ideal& I, const MultiplicativeSet& S);

/// Rewrite a valid S-primary decomposition into a minimal one: pick s* with
/// (Q_i : s*) = S(Q_i) for all i, group by saturated radical, intersect
/// within groups, drop redundant groups, and cut each survivor with
/// (I + R s*). The output carries a verified minimality report.
Decomposition minimalize(const Ideal& I, const MultiplicativeSet& S, const Decomposition& input);

/// Check both minimality conditions, the second in both stated forms.
MinimalityReport verify_minimality(const Decomposition& d, const MultiplicativeSet& S);

/// Validate that d is an S-primary decomposition of its target (components
/// proper, disjoint from S, S-primary, radicals correct, intersection exact).
/// Throws ValidationError otherwise.
void validate_decomposition(const Decomposition& d, const MultiplicativeSet& S);

struct ColonSplit {
    Ideal left;   // (I : s)
    Ideal right;  // I + Rs
    bool holds;   // left n right == I
};

/// The identity I = (I : s) n (I + Rs), valid whenever (I : s) = (I : s^2);
/// violating that precondition is reported as a distinct error.
ColonSplit colon_split_identity(const Ideal& I, const RingElement& s);

/// Some member of the family admitting s in S with: every family member J
/// containing it satisfies sJ <= it. Scanned in family order, s in canonical
/// order; nullopt when the family has none.
std::optional<std::pair<Ideal, RingElement>> find_s_maximal(const std::vector<Ideal>& family,
                                                            const MultiplicativeSet& S);

}  // namespace sprimary
