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

#include "progkit/group.hpp"

#include <algorithm>
#include <stdexcept>

namespace progkit {

FiniteSet FiniteSet::from_points(AmbientGroup g, std::vector<RatVec> pts) {
    if (g.m < 1) throw std::invalid_argument("FiniteSet: group dimension must be >= 1");
    for (const RatVec& p : pts)
        if (p.size() != g.m) throw std::invalid_argument("FiniteSet: point dimension mismatch");
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    FiniteSet s(g);
    s.elements_ = std::move(pts);
    return s;
}

bool FiniteSet::contains(const RatVec& p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p, lex_less);
}

void Frame::validate() const {
    if (group.m < 1) throw std::invalid_argument("Frame: group dimension must be >= 1");
    if (a0.size() != group.m) throw std::invalid_argument("Frame: a0 dimension mismatch");
    for (const RatVec& g : generators)
        if (g.size() != group.m) throw std::invalid_argument("Frame: generator dimension mismatch");
}

} // namespace progkit
