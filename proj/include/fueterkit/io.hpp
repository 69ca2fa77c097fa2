#pragma once

#include <json.hpp>

#include "fueterkit/realization.hpp"
#include "fueterkit/series.hpp"

namespace fueterkit {

using Json = nlohmann::ordered_json;

/// Resolves a builtin name, a path, or a bare file name searched in the
/// FUETERKIT_ALGEBRA_PATH directories.
AlgebraPtr resolve_algebra(const std::string& name_or_path);

Json algebra_to_json(const AlgebraPtr& spec);
AlgebraPtr algebra_from_json(const Json& j);

Json element_to_json(const AlgebraElement& a);
AlgebraElement element_from_json(const Json& j, const AlgebraPtr& spec);

Json matrix_to_json(const MatrixOverA& m);
MatrixOverA matrix_from_json(const Json& j, const AlgebraPtr& spec);

Json series_to_json(const FueterSeries& f);
Json series_to_json(const MatrixSeries& f);
FueterSeries series_from_json(const Json& j);
MatrixSeries matrix_series_from_json(const Json& j);

Json realization_to_json(const Realization& r);
Realization realization_from_json(const Json& j);

Json point_to_json(const FueterPoint& p);
FueterPoint point_from_json(const Json& j, const AlgebraPtr& spec);

/// Comma-separated rationals -> coordinates (length checked by caller).
std::vector<FieldScalar> parse_coords(const std::string& text);
MultiIndex parse_multi_index(const std::string& text, int m);

Json load_json(const std::string& path);

/// Human-readable rendering like "(1)*z1^2*j + (-2)*z1*k".
std::string series_str(const FueterSeries& f);

}  // namespace fueterkit
