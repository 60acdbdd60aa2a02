#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slopes/dimension.hpp"
#include "slopes/rational.hpp"

namespace slopes {

enum class PieceKind { Ueff, Uquot, Tors, Qp };

/// One stable piece of a Banach-Colmez space in HN-split form.
struct BCPiece {
    PieceKind kind;
    std::int64_t d = 0;   // Ueff/Uquot
    std::int64_t h = 0;   // Ueff/Uquot
    std::int64_t m = 0;   // Tors length, Qp multiplicity
    std::string point;    // Tors

    static BCPiece ueff(std::int64_t d, std::int64_t h);
    static BCPiece uquot(std::int64_t d, std::int64_t h);
    static BCPiece tors(std::string point, std::int64_t length);
    static BCPiece qp(std::int64_t n);

    Dimension dimension() const;
    std::string str() const;
    friend bool operator==(const BCPiece&, const BCPiece&) = default;
};

struct BCObject {
    std::vector<BCPiece> pieces;
    Dimension dimension() const;
    friend bool operator==(const BCObject&, const BCObject&) = default;
};

/// Extension of a BC by a torsion B_dR^+-module with the given lengths.
struct QBCObject {
    std::vector<std::int64_t> torsion_core;
    BCObject quotient;
    /// dim adds the core length; ht is that of the quotient.
    Dimension dimension() const;
};

/// HN slope mu^- over Q u {-inf}; nullopt is -inf.
struct BCSlope {
    std::optional<Rational> slope;
    std::int64_t multiplicity;
    friend bool operator==(const BCSlope&, const BCSlope&) = default;
};

/// Per piece: Ueff(d,h) -> -h/d (d > 0, multiplicity d), Ueff(0,h) and Qp -> -inf
/// (multiplicity ht), Tors -> 0, Uquot(d,h) -> h/d. Ascending, merged.
std::vector<BCSlope> hn_slopes(const BCObject& w);

/// Sign of the curvature: Uquot and torsion away from infty are > 0, torsion at
/// infty is 0, effective pieces and Qp are < 0.
int curvature_sign(const BCPiece& piece);

struct CanonicalFiltration {
    BCObject gt0, eq0, lt0;
};
CanonicalFiltration canonical_filtration(const BCObject& w);

/// A node of a formal exact sequence: its Dimension, plus the pieces when the
/// node is a BC object (used for the injection test into C^N).
struct SeqNode {
    Dimension dimension;
    std::optional<BCObject> object;

    static SeqNode of(const BCObject& w) { return {w.dimension(), w}; }
    static SeqNode of(const QBCObject& w) { return {w.dimension(), std::nullopt}; }
    static SeqNode of(Dimension d) { return {d, std::nullopt}; }
};

/// Declared kernel and image Dimensions of the arrow leaving a node; missing
/// entries are inferred from exactness.
struct SeqArrow {
    std::optional<Dimension> kernel;
    std::optional<Dimension> image;
};

struct ExactnessReport {
    bool exact = true;
    std::vector<std::string> violations;
};

/// Checks 0 -> X_0 -> ... -> X_{n-1} -> 0 for Dimension additivity at every
/// arrow, exactness at every node, validity of each kernel and image
/// Dimension, and that no effective piece with h <= d is declared to inject
/// into a power of C (torsion at infty with all lengths 1).
///
/// arrows is empty, has n-1 entries, or has n entries; in the last case the
/// final arrow leaves X_{n-1} towards an undisclosed target, its image must be
/// declared, and the sequence is not closed on the right.
ExactnessReport check_exact(const std::vector<SeqNode>& nodes, const std::vector<SeqArrow>& arrows = {});

/// Images of the arrows of a sequence as check_exact infers them (declared
/// values win). One entry per arrow, including a declared outgoing arrow.
std::vector<Dimension> arrow_images(const std::vector<SeqNode>& nodes, const std::vector<SeqArrow>& arrows = {});

struct HeightRank {
    std::int64_t rank;
    /// False when the object has positive curvature and the caller's Ext
    /// correction was used unverified.
    bool certified;
};

/// Rank of Hom(W, B_dR): ht(W) for curvature <= 0, else ht + correction.
HeightRank height_functor_rank(const BCObject& w, std::int64_t correction = 0);
HeightRank height_functor_rank(const QBCObject& w, std::int64_t correction = 0);

/// Almost-C objects for the Ext tables: B(k)(twist) = (B_dR^+/t^k)(twist),
/// with C(j) = B(1)(j), and Qp(n) for an n-dimensional Q_p-representation.
struct AlmostC {
    enum class Kind { B, Qp } kind;
    std::int64_t k = 1;      // B length
    std::int64_t twist = 0;
    std::int64_t n = 0;      // Qp dimension

    static AlmostC parse(const std::string& label);
    static AlmostC c(std::int64_t j) { return {Kind::B, 1, j, 0}; }
    static AlmostC b(std::int64_t k, std::int64_t j = 0) { return {Kind::B, k, j, 0}; }
    static AlmostC qp(std::int64_t n) { return {Kind::Qp, 1, 0, n}; }
    AlmostC twisted(std::int64_t r) const;
    std::int64_t height() const { return kind == Kind::Qp ? n : 0; }
    std::string str() const;
};

struct ExtTable {
    /// Q_p-dimensions of Ext^0..2, when tabulated.
    std::optional<std::array<std::int64_t, 3>> dims;
    /// The same over K, when tabulated.
    std::optional<std::array<std::int64_t, 3>> dims_over_k;
    std::int64_t euler_characteristic = 0;
    /// Which rule produced the dims: "twist-table", "dual-twist-table",
    /// "length-vanishing", or empty when untabulated.
    std::string source;
};

ExtTable ext_tables(const AlmostC& x, const AlmostC& y, std::int64_t k_degree = 1);

}  // namespace slopes
