#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sprimary/ideal.hpp"

namespace sprimary {

struct CheckedUniverse {
    std::string description;
    long long instances = 0;
    json detail;
};

/// One rejected candidate s with a pair violating the defining condition.
/// Finite rings: element indices. Integer ring: s is a residue mod n, (a, b)
/// residues witnessing the violation for every actual element in that class.
struct SPrimaryViolation {
    Int s = 0, a = 0, b = 0;
};

struct SPrimaryCertificate {
    bool verdict = false;
    std::optional<RingElement> witness;
    std::vector<SPrimaryViolation> violations;
    CheckedUniverse universe;
};

struct IrreducibilityCounterexample {
    Ideal left, right;
    RingElement s;
};

struct IrreducibilityCertificate {
    bool verdict = false;
    std::optional<IrreducibilityCounterexample> counterexample;
    CheckedUniverse universe;
};

struct SFiniteCertificate {
    bool verdict = false;
    std::optional<RingElement> witness;  // s
    std::optional<Ideal> fg;             // the finitely generated J (or F)
    std::optional<int> exponent;         // SFT exponent
    CheckedUniverse universe;
};

struct SpectrumEntry {
    Ideal prime;
    SFiniteCertificate cert;
};

struct SpectrumReport {
    bool verdict = false;
    std::vector<SpectrumEntry> primes;
};

bool is_nonnil(const Ideal& I);
bool is_prime_ideal(const Ideal& P);
bool is_primary(const Ideal& Q);

/// Proper ideals of a finite ring that are prime, canonical order.
std::vector<Ideal> prime_ideals(const RingPtr& ring);

SPrimaryCertificate is_s_prime(const Ideal& P, const MultiplicativeSet& S);
SPrimaryCertificate is_s_primary(const Ideal& Q, const MultiplicativeSet& S);

/// Definition-level witness re-checks, implemented independently of the
/// searches above.
bool recheck_s_prime_witness(const Ideal& P, const MultiplicativeSet& S, const RingElement& s);
bool recheck_s_primary_witness(const Ideal& Q, const MultiplicativeSet& S, const RingElement& s);

bool is_irreducible(const Ideal& Q);
IrreducibilityCertificate is_s_irreducible(const Ideal& Q, const MultiplicativeSet& S);

SFiniteCertificate is_s_finite(const Ideal& I, const MultiplicativeSet& S);
SFiniteCertificate is_sft(const Ideal& I);
/// Smallest exponent search against a prescribed finitely generated F <= I.
SFiniteCertificate is_sft_with(const Ideal& I, const Ideal& F);
SFiniteCertificate is_s_sft(const Ideal& I, const MultiplicativeSet& S);
SFiniteCertificate is_radically_s_finite(const Ideal& I, const MultiplicativeSet& S);

bool recheck_s_finite(const Ideal& I, const MultiplicativeSet& S, const SFiniteCertificate& c);
bool recheck_radically_s_finite(const Ideal& I, const MultiplicativeSet& S,
                                const SFiniteCertificate& c);

SpectrumReport has_s_noetherian_spectrum(const RingPtr& ring, const MultiplicativeSet& S);

}  // namespace sprimary
