#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "copra/copy_analysis.hpp"
#include "copra/forcing_term.hpp"
#include "copra/ordinal.hpp"

namespace copra {

/// A size parameter of a union descriptor: a positive natural or omega.
struct SizeParam {
    bool is_omega = false;
    std::uint64_t n = 0;

    static SizeParam nat(std::uint64_t v) { return {false, v}; }
    static SizeParam omega() { return {true, 0}; }

    bool operator==(const SizeParam&) const = default;
};

/// One entry of a union descriptor: `multiplicity` many classes of size
/// `class_size`, or (EveryFinite) `multiplicity` many classes of every
/// finite size.
struct ClassSpec {
    enum class Sizes { Fixed, EveryFinite };

    Sizes sizes = Sizes::Fixed;
    SizeParam class_size;  // meaningful when Fixed
    SizeParam multiplicity;
};

enum class UnionKind { EquivalenceRelation, CompleteGraphs, Chains };

enum class NamedExample { LineGraph, RayGraph, Tree, TreeCycles, RayCycles, MixedB3 };

/// A finitely presented countable structure, as accepted by the classifier.
struct FamilyDescriptor {
    struct Ordinal {
        OrdinalCNF value;
    };
    struct NonScatteredLinear {};
    struct Union {
        UnionKind kind;
        std::vector<ClassSpec> classes;
        bool complemented = false;
    };
    struct Maximal {
        MaximalFamily family;
    };
    struct Example {
        NamedExample which;
    };

    std::variant<Ordinal, NonScatteredLinear, Union, Maximal, Example> value;
};

/// Parses the one-line descriptor syntax:
///   ordinal: w^2*3 + w*2 + 5
///   linear: Q
///   eqrel: {2:w}      graphs: {w:1}      chains: {n:1}
///   maximal: diag | full | empty | complete | lt | gt | le | ge
///   example: tree | line-graph | ray-graph | tree-cycles | ray-cycles | mixed-B3
/// Union entries are class-size:multiplicity with `w` for omega; the class
/// size `n` (or `*`) stands for one class of every finite size.  A trailing
/// `complemented` marks the complement of the union, which classifies
/// identically.
FamilyDescriptor parse_descriptor(const std::string& text);

struct DiagramCell {
    char column = 'A';  // 'A'..'D'
    int row = 1;        // 1..5

    std::string name() const { return std::string(1, column) + std::to_string(row); }

    bool operator==(const DiagramCell&) const = default;
};

/// The ten cells of the diagram that contain structures.
bool cell_is_populated(const DiagramCell& cell);

enum class CopiesCardinality { One, Aleph0, Continuum };
enum class IdealStatus { NotIdeal, TallIdeal, Fin };
enum class CopiesDensity { NowhereDense, Dense };
enum class SqSize { One, Aleph0, AboveAleph0 };
enum class SqKind { Trivial, Cohen, SigmaClosedAtomless, QuotientOverCoanalyticTallIdeal };

const char* to_string(CopiesCardinality v);
const char* to_string(IdealStatus v);
const char* to_string(CopiesDensity v);
const char* to_string(SqSize v);
const char* to_string(SqKind v);

struct CellAttributes {
    CopiesCardinality copies_cardinality;
    bool divisible;
    IdealStatus ideal_status;
    CopiesDensity copies_density;
    SqSize sq_size;
    SqKind sq_kind;

    bool operator==(const CellAttributes&) const = default;
};

/// The attribute tuple read off the diagram's row and column labels.
/// Rejects the empty cells.
CellAttributes cell_attributes(const DiagramCell& cell);

struct Classification {
    DiagramCell cell;
    CellAttributes attributes;
    ForcingTerm term;
    std::vector<std::string> citations;  // rule identifiers for provenance
};

/// Maps a descriptor to its diagram cell, attributes and symbolic
/// forcing-equivalence term.  With ch_mode, terms that are sigma-closed,
/// atomless and of size continuum are additionally collapsed to (P(w)/Fin)+;
/// the cell never changes.
Classification classify(const FamilyDescriptor& descriptor, bool ch_mode = false);

/// Canonical JSON for the CLI: cell, attributes, rendered term, citations.
std::string classification_to_json_string(const Classification& c);

} // namespace copra
