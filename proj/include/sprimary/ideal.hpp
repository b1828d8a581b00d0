#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sprimary/ring.hpp"

namespace sprimary {

/// An ideal of a ring. Finite rings: explicit member set plus a generator
/// list. Integer ring: a single non-negative generator n standing for nZ
/// (n = 0 the zero ideal, n = 1 the whole ring).
class Ideal {
public:
    Ideal() = default;

    static Ideal from_set(RingPtr ring, ElemSet elems);
    static Ideal from_gen_indices(RingPtr ring, const std::vector<int>& gens);
    static Ideal z_ideal(RingPtr ring, Int n);

    const RingPtr& ring() const { return ring_; }
    bool finite_rep() const { return ring_->is_finite(); }

    const ElemSet& elems() const;
    Int zgen() const;

    /// Generator list; for finite reps computed greedily on demand and
    /// guaranteed to regenerate exactly the member set.
    std::vector<Int> gens() const;

    bool contains(Int v) const;
    bool is_proper() const;
    bool is_zero() const;
    bool subset_of(const Ideal& o) const;
    bool operator==(const Ideal& o) const;
    bool operator!=(const Ideal& o) const { return !(*this == o); }

    /// Canonical order: finite by (cardinality, membership mask); integer
    /// ideals by generator ascending with the zero ideal last.
    bool canonical_less(const Ideal& o) const;

    std::string str() const;

private:
    RingPtr ring_;
    ElemSet elems_;
    mutable std::optional<std::vector<int>> gens_cache_;
    Int zn_ = 0;
};

/// A multiplicatively closed subset containing 1 and (by construction)
/// excluding 0. Finite rings: explicit closed set. Integer ring: either the
/// saturated set generated by a finite set of primes (optionally with sign),
/// or the complement of a prime ideal pZ.
class MultiplicativeSet {
public:
    enum class ZShape { PrimeSet, ComplementOfPrime };

    MultiplicativeSet() = default;

    static MultiplicativeSet from_closed_set(RingPtr ring, ElemSet elems,
                                             std::vector<int> gens = {});
    static MultiplicativeSet z_prime_set(RingPtr ring, std::vector<Int> primes, bool units);
    static MultiplicativeSet z_complement_of_prime(RingPtr ring, Int p);

    const RingPtr& ring() const { return ring_; }
    bool finite_rep() const { return ring_->is_finite(); }

    const ElemSet& elems() const;
    const std::vector<int>& gen_indices() const { return gens_; }

    ZShape zshape() const { return zshape_; }
    const std::vector<Int>& zprimes() const { return zprimes_; }
    bool zunits() const { return zunits_; }
    Int zcomp_prime() const { return zp_; }

    bool contains(Int v) const;
    bool is_trivial() const;  // {1}

    /// Residues mod n attained by elements of an integer-ring set, each with
    /// a concrete witness element; ascending by residue.
    std::vector<std::pair<Int, Int>> attainable_residues(Int n) const;

    std::string str() const;

private:
    RingPtr ring_;
    ElemSet elems_;
    std::vector<int> gens_;
    ZShape zshape_ = ZShape::PrimeSet;
    std::vector<Int> zprimes_;
    bool zunits_ = false;
    Int zp_ = 0;
};

// --- ideal and multiplicative set operations -------------------------------

Ideal ideal_generate(const RingPtr& ring, const std::vector<RingElement>& gens);
Ideal ideal_generate_json(const RingPtr& ring, const json& gen_payloads);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_intersect(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);

Ideal ideal_colon(const Ideal& I, const RingElement& s);
Ideal ideal_colon_ideal(const Ideal& I, const Ideal& J);

Ideal radical(const Ideal& I);
Ideal nilradical(const RingPtr& ring);

Ideal saturation(const Ideal& I, const MultiplicativeSet& S);

/// All ideals of a finite ring, canonically ordered.
std::vector<Ideal> enumerate_ideals(const RingPtr& ring);

/// Closure of the given nonzero elements (plus 1) under multiplication;
/// reports the offending chain if 0 is reached.
MultiplicativeSet mset_closure(const RingPtr& ring, const std::vector<RingElement>& gens);

/// Trivial multiplicative set {1} of any ring.
MultiplicativeSet mset_trivial(const RingPtr& ring);

/// True iff I is contained in aR for every a outside I (finite rings).
bool is_divided(const Ideal& I);

bool disjoint_from(const Ideal& I, const MultiplicativeSet& S);

/// Whole-ring and zero ideals.
Ideal unit_ideal(const RingPtr& ring);
Ideal zero_ideal(const RingPtr& ring);
Ideal principal_ideal(const RingElement& a);

/// Image of an ideal under the quotient projection (quotient rings built on
/// I's ring).
Ideal ideal_image_in_quotient(const RingPtr& quot, const Ideal& I);
/// Preimage of an ideal of R/I in the base ring.
Ideal ideal_preimage_from_quotient(const Ideal& J);
/// Image multiplicative set {s + I} in a quotient ring.
MultiplicativeSet mset_image_in_quotient(const RingPtr& quot, const MultiplicativeSet& S);
/// Extension S^-1 Q in a localization built from Q's ring.
Ideal ideal_image_in_localization(const RingPtr& loc, const Ideal& I);

}  // namespace sprimary
