// Copyright 2026 The orthodice Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "internal.hpp"
#include "orthodice/orthopoly.hpp"

using namespace orthodice;
using namespace orthodice::capi;

namespace {

Json poly_json(const Polynomial& p) {
  Json j = Json::array();
  for (const auto& c : p.coefficients()) j.push_back(rational(c));
  return j;
}

}  // namespace

extern "C" {

od_status od_poly_report(const od_options* opts, const char* k0,
                         const char* const* indices, size_t n_indices,
                         unsigned degree, const unsigned* powers,
                         size_t n_powers, od_result** out) {
  return run(out, [&] {
    const od_options& o = resolve(opts);
    const Integer base = arg_integer(k0, "k0");
    const auto list = arg_integers(indices, n_indices, "index");
    if (list.empty()) throw Error(ErrorCode::InvalidArgument, "need at least one index");
    if (n_powers == 0 || powers == nullptr) {
      throw Error(ErrorCode::InvalidArgument, "need at least one p");
    }
    std::vector<unsigned> ps(powers, powers + n_powers);
    const PolyReport rep = convergence_report(base, list, degree, ps, o.tail_tol);
    Output res;
    res.payload["k0"] = integer(base, o);
    res.payload["theta"] = rational(rep.theta);
    res.payload["degree"] = degree;
    res.payload["powers"] = ps;
    res.payload["charlier"] = poly_json(rep.charlier);

    std::vector<std::string> cols{"l", "a"};
    for (unsigned p : ps) {
      cols.push_back("d_p" + std::to_string(p));
      cols.push_back("truncation_p" + std::to_string(p));
    }
    Json dist = table(cols);
    Json polys = Json::array();
    for (const auto& row : rep.rows) {
      Json r = Json::array({integer(row.index, o), rational(row.a)});
      for (const auto& d : row.distances) {
        r.push_back(d.distance);
        r.push_back(d.truncation);
      }
      dist["rows"].push_back(std::move(r));
      Json pj = Json::object();
      pj["l"] = integer(row.index, o);
      pj["coefficients"] = poly_json(row.poly);
      polys.push_back(std::move(pj));
    }
    res.payload["polynomials"] = std::move(polys);

    std::vector<std::string> fcols{"x", "weight", "charlier_weighted"};
    for (const auto& row : rep.rows) fcols.push_back("die_weighted_l" + to_string(row.index));
    Json fig = table(fcols);
    for (const auto& fr : rep.figure) {
      Json r = Json::array({fr.x, fr.weight, fr.charlier_weighted});
      for (double v : fr.die_weighted) r.push_back(v);
      fig["rows"].push_back(std::move(r));
    }
    res.payload["tables"]["distances"] = std::move(dist);
    res.payload["tables"]["figure"] = std::move(fig);
    set_tables(res.payload, "distances");
    return res;
  });
}

}  // extern "C"
