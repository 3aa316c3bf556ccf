#pragma once

/* JSON encodings used by the CLI.
   Tableau: {"n":6,"rows":[[1,1,3],[2,2,4],[3,4,5],[5,5,6]]}
   Tensor element: {"n":6,"factors":[rows,rows,...]} with factors in tensor order.
   One-row geometric point: {"n":2,"x":["3/2","7"]} (rational) or {"n":2,"x":[3,-1]} (tropical).
   Keyed geometric point: {"n":5,"k":2,"s":"3/2","x":{"1,1":"2",...}} over the free range;
   rational values are "p/q" strings, tropical values are plain integers.
   Verifier report: {"case":...,"checked":N,"failures":[...],"pass":bool}. */

#include "krc/crystal.hpp"
#include "krc/geom.hpp"
#include "krc/report.hpp"
#include "krc/semifield.hpp"
#include "krc/tableau.hpp"

#include "json.hpp"

namespace krc {

nlohmann::ordered_json tableau_to_json(const RectTableau& t);
RectTableau tableau_from_json(const nlohmann::json& j);

nlohmann::ordered_json tensor_to_json(const TensorElem& x);
TensorElem tensor_from_json(const nlohmann::json& j);

nlohmann::ordered_json vec_to_json(const VecPoint<PosRational>& v);
nlohmann::ordered_json vec_to_json(const VecPoint<TropInt>& v);
VecPoint<PosRational> vec_rational_from_json(const nlohmann::json& j);
VecPoint<TropInt> vec_tropical_from_json(const nlohmann::json& j);

nlohmann::ordered_json geom_to_json(const GeomPoint<PosRational>& p);
nlohmann::ordered_json geom_to_json(const GeomPoint<TropInt>& p);
GeomPoint<PosRational> geom_rational_from_json(const nlohmann::json& j);
GeomPoint<TropInt> geom_tropical_from_json(const nlohmann::json& j);

nlohmann::ordered_json report_to_json(const VerifierReport& r);

} /* namespace krc */
