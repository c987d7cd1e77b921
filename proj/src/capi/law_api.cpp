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
#include "orthodice/law.hpp"

using namespace orthodice;
using namespace orthodice::capi;

namespace {

SupportPair support_arg(const char* m, const char* n) {
  SupportPair s(arg_integer(m, "m"), arg_integer(n, "n"));
  s.validate();
  return s;
}

}  // namespace

extern "C" {

od_status od_pgf_eval(const char* m, const char* n, double t, double* value) {
  if (value == nullptr) {
    set_last_error("output pointer is NULL");
    return OD_INVALID_ARGUMENT;
  }
  return run_scalar([&] { *value = pgf_eval(support_arg(m, n), t); });
}

od_status od_law_pmf(const od_options* opts, const char* m, const char* n,
                     const char* a, od_result** out) {
  return run(out, [&] {
    const od_options& o = resolve(opts);
    Output res;
    const SupportPair s = support_arg(m, n);
    const ThinningParam thin(arg_rational(a, "a", res));
    const DiscreteLaw law = thinned_pmf(s, thin, o.support_cap);
    res.payload["m"] = integer(s.m, o);
    res.payload["n"] = integer(s.n, o);
    res.payload["a"] = rational(thin.value());
    res.payload["total"] = rational(law.total());
    res.payload["mean"] = rational(law.mean());
    res.payload["variance"] = rational(law.variance());
    Json t = table({"j", "probability"});
    for (std::size_t i = 0; i < law.probs.size(); ++i) {
      t["rows"].push_back(Json::array(
          {law.offset + static_cast<std::int64_t>(i), rational(law.probs[i])}));
    }
    res.payload["tables"]["pmf"] = std::move(t);
    set_tables(res.payload, "pmf");
    return res;
  });
}

od_status od_law_moments(const od_options* opts, const char* m, const char* n,
                         const char* a, unsigned max_order, od_result** out) {
  return run(out, [&] {
    const od_options& o = resolve(opts);
    Output res;
    const SupportPair s = support_arg(m, n);
    const ThinningParam thin(arg_rational(a, "a", res));
    const MomentSummary ms = MomentSummary::of(s).thinned(thin);
    res.payload["m"] = integer(s.m, o);
    res.payload["n"] = integer(s.n, o);
    res.payload["a"] = rational(thin.value());
    res.payload["mean"] = rational(ms.c);
    res.payload["variance"] = rational(ms.delta_sq);
    Json t = table({"r", "factorial_moment", "raw_moment"});
    for (unsigned r = 0; r <= max_order; ++r) {
      t["rows"].push_back(Json::array({r, rational(factorial_moment(s, thin, r)),
                                       rational(raw_moment(s, thin, r))}));
    }
    res.payload["tables"]["moments"] = std::move(t);
    set_tables(res.payload, "moments");
    return res;
  });
}

od_status od_law_converge(const od_options* opts, const char* k0,
                          const char* const* indices, size_t n_indices,
                          od_result** out) {
  return run(out, [&] {
    const od_options& o = resolve(opts);
    const Integer base = arg_integer(k0, "k0");
    const auto list = arg_integers(indices, n_indices, "index");
    if (list.empty()) throw Error(ErrorCode::InvalidArgument, "need at least one index");
    Output res;
    res.payload["k0"] = integer(base, o);
    res.payload["theta"] = integer(mean_at_index(base), o);
    res.payload["grid_size"] = o.grid_size;
    res.payload["tail_tol"] = o.tail_tol;
    Json t = table({"l", "a", "tv_distance", "sup_distance"});
    for (const auto& row : convergence_sequence(base, list, o.grid_size, o.tail_tol)) {
      t["rows"].push_back(Json::array({integer(row.index, o), rational(row.a),
                                       row.tv_distance, row.sup_distance}));
    }
    res.payload["tables"]["convergence"] = std::move(t);
    set_tables(res.payload, "convergence");
    return res;
  });
}

}  // extern "C"
