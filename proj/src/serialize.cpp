/*
   Copyright 2026 The primequot Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "primequot/serialize.hpp"

namespace primequot {

Json to_json(const Vec& v) { return Json(v); }

Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return rows;
}

Json to_json(const Subspace& s) {
    Json j;
    j["dim"] = s.dim();
    j["basis"] = s.basis();
    return j;
}

Json to_json(const Subgroup& s) { return Json(s.elems); }

Json to_json(const CheckList& c) {
    Json out = Json::array();
    for (const auto& x : c.items) {
        Json e;
        e["name"] = x.name;
        e["ok"] = x.ok;
        if (!x.detail.empty()) e["detail"] = x.detail;
        out.push_back(std::move(e));
    }
    return out;
}

Json to_json(const CocycleTable& a) {
    Json j;
    j["order"] = a.F.order();
    j["values"] = a.values;
    return j;
}

std::vector<Vec> cocycle_values_from_json(const Json& j) {
    return j.at("values").get<std::vector<Vec>>();
}

}  // namespace primequot
