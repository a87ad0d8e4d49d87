#pragma once

#include "zerosum/sequence.hpp"
#include "zerosum/sums.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace zerosum {

/**
 * The length-|G| sequences whose nontrivial zero-sums all have one length.
 *
 * Cyclic G = <g> (g a generator, n = |G|):
 *   CYC_GPOW        g^{n-1} g'                      any g'
 *   CYC_2GPOW       (2g)^{n-1} g''                  g'' outside <2g>
 *   CYC_ODD_SQUARE  g^{n-2} ((n+1)/2 g)^2           n odd,        r = (n+1)/2
 *   CYC_MOD4        (2g)^{n/2+x} ((n+4)/2 g)^{n/2-x} n = 2 mod 4, x even in [0, n/2-1], r = n/2
 *   CYC_EVEN_HALF   g^{n/2+x} ((n+2)/2 g)^{n/2-x}   n even, x in [0, n/2-1], n/2-x odd, r = n/2
 * G = <h> + <g> = C2 + C2m, ord(g) = n/2, ord(h) = 2, r = n/2:
 *   NC_GPOW         g^{n-1} g'                      g' outside <g>
 *   NC_HG           g^{n/2+x} (h+g)^{n/2-x}          x odd in [1, n/2-1]
 *   NC_HQG          g^{n/2+x} (h+(n+4)/4 g)^{n/2-x}  x odd in [1, n/2-1]
 */
enum class Family { CycGPow, Cyc2GPow, CycOddSquare, CycMod4, CycEvenHalf, NcGPow, NcHG, NcHQG };

std::string_view family_tag(Family f);

struct FamilyInstance {
    Family tag;
    Element g;
    std::optional<Element> aux; // g', g'' or h
    std::optional<std::uint32_t> x;
    std::uint32_t r = 0;        // predicted unique zero-sum length
    Sequence sequence;
};

enum class GroupShape { Cyclic, TwoByEven, Other };

std::string_view shape_name(GroupShape s);

struct ShapeInfo {
    GroupShape shape = GroupShape::Other;
    std::optional<Element> h; // order 2 (TwoByEven)
    std::optional<Element> g; // order n (Cyclic) or n/2 (TwoByEven)
};

/// Structural detection, independent of how the factors were spelled.
ShapeInfo detect_shape(const GroupSpec& g);

struct FamilyCatalog {
    GroupSpec group;
    GroupShape shape = GroupShape::Other;
    std::vector<FamilyInstance> instances;
    std::vector<std::string> notes; // parameter combinations skipped
};

/// Every instance over every admissible parameter; duplicates across tags kept.
FamilyCatalog enumerate_families(const GroupSpec& g);

/// Realized-sequence lookup over a catalog.
class FamilyIndex {
public:
    explicit FamilyIndex(FamilyCatalog catalog);
    explicit FamilyIndex(const GroupSpec& g) : FamilyIndex(enumerate_families(g)) {}

    const FamilyCatalog& catalog() const noexcept { return catalog_; }
    std::size_t distinct_sequences() const noexcept { return index_.size(); }

    bool matches(std::span<const std::uint32_t> mult) const;
    std::vector<FamilyInstance> match(const Sequence& s) const;

private:
    struct Hash {
        std::size_t operator()(const Multiplicities& m) const noexcept;
    };

    FamilyCatalog catalog_;
    std::unordered_map<Multiplicities, std::vector<std::size_t>, Hash> index_;
};

/// Instances realizing S; requires |S| = |G|.
std::vector<FamilyInstance> match_family(const FamilyIndex& index, const Sequence& s);
std::vector<FamilyInstance> match_family(const Sequence& s);

struct SequenceRecord {
    Multiplicities mult;
    std::vector<std::size_t> lengths;
    std::size_t support = 0;

    friend bool operator<(const SequenceRecord& a, const SequenceRecord& b) { return a.mult < b.mult; }
};

enum class MismatchKind { QualifyingUnmatched, MatchedNotQualifying };

struct Mismatch {
    MismatchKind kind;
    SequenceRecord record;
};

struct FamilyFailure {
    FamilyInstance instance;
    std::vector<std::size_t> lengths;
};

struct VerifyOptions {
    bool up_to_automorphism = true;
    unsigned jobs = 1;
    std::uint64_t budget = default_multiset_budget;
};

struct VerificationReport {
    GroupSpec group;
    GroupShape shape = GroupShape::Other;
    bool up_to_automorphism = true;

    std::uint64_t total = 0;           // length-n multisets scanned
    std::uint64_t representatives = 0; // DP evaluations (orbit representatives)
    std::uint64_t qualifying = 0;      // representatives with a unique zero-sum length
    std::uint64_t matched = 0;         // qualifying representatives matched by a family
    std::uint64_t qualifying_weighted = 0; // over all multisets (orbit sizes summed)
    std::uint64_t matched_weighted = 0;
    std::map<std::size_t, std::uint64_t> qualifying_by_r; // weighted

    std::uint64_t family_instances = 0;
    std::uint64_t family_sequences = 0;

    std::vector<Mismatch> mismatches;
    std::vector<SequenceRecord> support_violations;
    std::vector<SequenceRecord> r_violations; // non-cyclic qualifying with r != n/2
    std::vector<FamilyFailure> family_failures;
    std::vector<std::string> notes;

    std::uint64_t tables_checked = 0;
    std::uint64_t complement_violations = 0;
    std::uint64_t padding_checked = 0;
    std::uint64_t padding_violations = 0;

    double elapsed_ms = 0;

    std::uint64_t unmatched() const;
    bool confirmed() const;
};

/// Exhaustive sweep over all length-|G| multisets.
VerificationReport verify_theorem(const GroupSpec& g, const VerifyOptions& options = {});

} // namespace zerosum
