#pragma once

#include "tlie/cochain.hpp"
#include "tlie/ns_three_lie.hpp"
#include "tlie/twisted_rbo.hpp"

#include <nlohmann/json_fwd.hpp>

#include <filesystem>
#include <optional>

namespace tlie::io {

using json = nlohmann::json;

/*
 * All structures share one dictionary-based text format: 1-based basis
 * indices, strictly increasing key tuples ("i,j,k" triples, "i,j" pairs,
 * "i,j|k" curly slots), and rationals as "p" or "p/q" strings. Loaded
 * structures carry no verification flags; callers run the checkers.
 */

json to_json(const Vec& v);
Vec vec_from_json(const json& j);

json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

json to_json(const ThreeLieAlgebra& a);
ThreeLieAlgebra algebra_from_json(const json& j);

json to_json(const Representation& rep);
json to_json(const TwoCochain& phi);
json to_json(const TwistedRbo& op);
json to_json(const NsThreeLie& a);

json to_json(const Report& report);
json to_json(const std::vector<CohomologyRow>& rows);

/// Operator context plus optional deformation payload, as stored in
/// deformation files.
struct DeformationBundle {
  TwistedRbo op;
  Matrix frak_t;
  std::optional<Matrix> frak_t2;
  std::optional<std::pair<Vec, Vec>> x;
};

ThreeLieAlgebra load_algebra(const std::filesystem::path& path);
Representation load_representation(const std::filesystem::path& path);
Matrix load_linear_map(const std::filesystem::path& path);
TwoCochain load_two_cochain(const std::filesystem::path& path);
/// Context pieces are validated (FI, representation, cocycle) before the
/// operator is assembled; a failing context raises Error(unverified_input).
TwistedRbo load_twisted_rbo(const std::filesystem::path& path);
NsThreeLie load_ns(const std::filesystem::path& path);
DeformationBundle load_deformation(const std::filesystem::path& path);

void save(const std::filesystem::path& path, const json& j);

}  // namespace tlie::io
