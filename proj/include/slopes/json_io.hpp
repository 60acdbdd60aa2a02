#pragma once

// JSON encodings of the library types. Rationals travel as strings "a/b" (or
// "a"); readers also accept JSON integers. Every reader reports the JSON
// pointer of the offending value in its InvalidInput message.

#include <string>

#include "json.hpp"
#include "slopes/bc.hpp"
#include "slopes/cst.hpp"
#include "slopes/ff_sheaf.hpp"
#include "slopes/hn.hpp"

namespace slopes::io {

using Json = nlohmann::ordered_json;

/// Parses text; malformed input throws InvalidInput naming line and column.
Json parse(const std::string& text);

Rational read_rational(const Json& j, const std::string& at);
Vector read_vector(const Json& j, const std::string& at);
RatMatrix read_matrix(const Json& j, const std::string& at);
std::int64_t read_int(const Json& j, const std::string& at);
const Json& member(const Json& j, const char* key, const std::string& at);

PhiModule read_phi_module(const Json& j, const std::string& at = "");
HodgeData read_hodge(const Json& j, std::size_t rank, const std::string& at = "");
FilteredPhiModule read_filtered(const Json& j, const std::string& at = "");
FFSheaf read_sheaf(const Json& j, const std::string& at = "");
BCPiece read_piece(const Json& j, const std::string& at = "");
/// {"pieces": [...]} with an optional "core" of torsion lengths.
QBCObject read_qbc(const Json& j, const std::string& at = "");
BCObject read_bc(const Json& j, const std::string& at = "");
Dimension read_dimension(const Json& j, const std::string& at = "");
SeqArrow read_arrow(const Json& j, const std::string& at = "");
SyntheticCohomology read_synthetic(const Json& j, const std::string& at = "");
MvRow read_row(const Json& j, const std::string& at = "");

Json to_json(const Rational& q);
Json to_json(const RatMatrix& m);
Json to_json(const Subspace& s);
Json to_json(const SlopeMultiset& s);
Json to_json(const PhiModule& m);
Json to_json(const HodgeData& h);
Json to_json(const FilteredPhiModule& m);
Json to_json(const FFSheaf& s);
Json to_json(const BCPiece& p);
Json to_json(const BCObject& w);
Json to_json(const Dimension& d);
Json to_json(const Verdict& v);
Json to_json(const HNFiltration& hn);
Json to_json(const BatteryReport& r);

}  // namespace slopes::io
