// Copyright 2026 The progkit authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "progkit/bodies.hpp"
#include "progkit/group.hpp"
#include "progkit/lattice.hpp"
#include "progkit/progressions.hpp"
#include "progkit/transfer.hpp"

#include <json.hpp>

namespace progkit {

// JSON schemas, exact at the boundary: in-core rationals travel as "p/q"
// strings, floating quantities carry explicit std_error fields.
//
// body:        {"type":"ellipsoid","gram":[["1/1","0/1"],["0/1","1/1"]]}
//              {"type":"polytope","forms":[["1/2","0/1"],...]}
// set:         {"m":1,"elements":[["0/1"],["1/1"]]}
// progression: {"frame":{"a0":["0/1"],"gens":[["1/1"]]},"body":{...},
//               "center":["1/2"],"kind":"gap"}
// point set:   {"points":[[0,0],[1,0]],"truncated":false}

nlohmann::json body_to_json(const SymmetricBody& body);
SymmetricBody body_from_json(const nlohmann::json& j);

nlohmann::json set_to_json(const FiniteSet& s);
FiniteSet set_from_json(const nlohmann::json& j);

nlohmann::json progression_to_json(const Progression& p);
Progression progression_from_json(const nlohmann::json& j);

nlohmann::json pointset_to_json(const LatticePointSet& s);

nlohmann::json volume_to_json(const VolumeEstimate& v);
nlohmann::json covering_bound_to_json(const CoveringBound& cb);
nlohmann::json rbm_to_json(const RbmResult& r);
nlohmann::json transfer_report_to_json(const TransferReport& r);

nlohmann::json rat_vec_to_json(const RatVec& v);
RatVec rat_vec_from_json(const nlohmann::json& j);

} // namespace progkit
