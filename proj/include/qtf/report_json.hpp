#pragma once

#include "qtf/analysis.hpp"
#include "qtf/dft.hpp"
#include "qtf/json_io.hpp"
#include "qtf/smoothness.hpp"
#include "qtf/specfact.hpp"
#include "qtf/verify.hpp"
#include "qtf/vmconstruct.hpp"

namespace qtf {

json to_json(const FilterReport& r);
json to_json(const VerificationReport& r);
json to_json(const SmoothnessEstimate& e);
json to_json(const HermitianFactorization& f);
json to_json(const ASolution& s);
json to_json(const TransformTree& t);
TransformTree tree_from_json(const json& j);

// vmo values use kInfiniteVmo internally; JSON carries null for "infinite".
json vmo_json(int v);

} // namespace qtf
