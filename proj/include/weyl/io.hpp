#pragma once

#include <string>

#include <json.hpp>

#include "weyl/osp_rep.hpp"
#include "weyl/trace_iw.hpp"
#include "weyl/weyl_oracle.hpp"

namespace weyl {

using Json = nlohmann::ordered_json;

// decimal = true writes re/im as 17-digit decimals instead of exact rationals
Json to_json(const Poly& f, bool decimal = false);
Poly poly_from_json(const Json& j);

Json to_json(const NormalForm& a);
Json to_json(const LinOp& t);
LinOp linop_from_json(const Json& j);
LinOp linop_from_file(const std::string& path);

Json to_json(const DiffOpSeries& d);
Json to_json(const NormalSymbol& s);
Json to_json(const GradedSeries& g);
Json to_json(const TraceResult& r);
Json to_json(const RootDatum& r);

// like Poly::to_string, coefficients as 17-digit decimals
std::string format_poly_numeric(const Poly& f);

}  // namespace weyl
