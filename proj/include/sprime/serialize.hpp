#pragma once

#include "sprime/expr.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace sprime {

using Json = nlohmann::json;

/// Highest total degree accepted for a coord_poly in the JSON form.
inline constexpr unsigned kMaxSerializedDegree = 64;

Json to_json(const GaussianRational& z);
Json to_json(const Point& p);
/// Canonical AST. Throws InvalidArgument for a coord_poly above kMaxSerializedDegree.
Json to_json(const Expr& e);

/// Compact canonical text (sorted keys).
std::string serialize(const Expr& e);

/// `where` is the JSON-pointer prefix used in ParseError locations.
GaussianRational gaussian_from_json(const Json& j, const std::string& where = "");
Point point_from_json(const Json& j, const std::string& where = "");

/// Dimension implied by points and exponent vectors inside the AST, if any.
/// Throws ParseError when two nodes disagree.
std::optional<std::size_t> infer_dimension(const Json& j);

/// Builds the expression in dimension `dim` (or the inferred one, else `fallback_dim`).
Expr expr_from_json(const Json& j, std::optional<std::size_t> dim = std::nullopt, std::size_t fallback_dim = 1);
Expr parse_expr(std::string_view text, std::optional<std::size_t> dim = std::nullopt, std::size_t fallback_dim = 1);

}  // namespace sprime
