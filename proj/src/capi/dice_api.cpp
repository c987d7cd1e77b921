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
#include "orthodice/dice.hpp"

using namespace orthodice;
using namespace orthodice::capi;

namespace {

Json die_json(const OrthogonalDie& d, const od_options& o) {
  Json j = Json::object();
  j["k"] = integer(d.k, o);
  j["m"] = integer(d.m, o);
  j["n"] = integer(d.n, o);
  j["c"] = integer(d.c, o);
  j["sides"] = integer(d.sides, o);
  j["position"] = integer(d.position, o);
  if (d.sides_prime) j["sides_prime"] = *d.sides_prime;
  j["orthogonal"] = verify_orthogonality(d);
  return j;
}

}  // namespace

extern "C" {

od_status od_dice_list(const od_options* opts, uint64_t count, od_result** out) {
  return run(out, [&] {
    const od_options& o = resolve(opts);
    if (count < 1) throw Error(ErrorCode::InvalidArgument, "count must be >= 1");
    Output res;
    Json t = table({"position", "k", "m", "n", "c", "sides"});
    for (const auto& d : enumerate_orthogonal(count)) {
      t["rows"].push_back(Json::array({integer(d.position, o), integer(d.k, o),
                                       integer(d.m, o), integer(d.n, o),
                                       integer(d.c, o), integer(d.sides, o)}));
    }
    res.payload["count"] = count;
    res.payload["tables"]["dice"] = std::move(t);
    set_tables(res.payload, "dice");
    return res;
  });
}

od_status od_dice_from_index(const od_options* opts, const char* k, od_result** out) {
  return run(out, [&] {
    Output res;
    res.payload["die"] = die_json(die_from_index(arg_integer(k, "k")), resolve(opts));
    return res;
  });
}

od_status od_dice_from_prime(const od_options* opts, const char* p,
                             int check_primality, od_result** out) {
  return run(out, [&] {
    const od_options& o = resolve(opts);
    const Integer value = arg_integer(p, "p");
    Output res;
    res.payload["p"] = integer(value, o);
    res.payload["p_digits"] = decimal_digits(value);
    res.payload["die"] = die_json(die_from_prime_product(value, check_primality != 0), o);
    return res;
  });
}

od_status od_dice_classify(const od_options* opts, const char* m, const char* n,
                           od_result** out) {
  return run(out, [&] {
    const od_options& o = resolve(opts);
    SupportPair s(arg_integer(m, "m"), arg_integer(n, "n"));
    const DiceClass cls = classify(s);
    Output res;
    res.payload["m"] = integer(s.m, o);
    res.payload["n"] = integer(s.n, o);
    res.payload["variant"] = variant_name(cls.variant);
    res.payload["degenerate"] = cls.degenerate;
    res.payload["mean"] = rational(s.mean());
    res.payload["variance"] = rational(s.variance());
    return res;
  });
}

od_status od_dice_nearest(const od_options* opts, const char* c_star, od_result** out) {
  return run(out, [&] {
    Output res;
    const Rational target = arg_rational(c_star, "c_star", res);
    if (target <= 0) throw Error(ErrorCode::InvalidArgument, "c_star must be positive");
    const OrthogonalDie d = nearest_die(target);
    res.payload["c_star"] = rational(target);
    res.payload["die"] = die_json(d, resolve(opts));
    res.payload["distance"] = rational(Rational(abs(Rational(d.c) - target)));
    return res;
  });
}

od_status od_dice_first_at_least(const od_options* opts, const char* c_min,
                                 od_result** out) {
  return run(out, [&] {
    const od_options& o = resolve(opts);
    const Integer target = arg_integer(c_min, "c_min");
    if (target < 1) throw Error(ErrorCode::InvalidArgument, "c_min must be >= 1");
    Output res;
    res.payload["c_min"] = integer(target, o);
    res.payload["die"] = die_json(first_die_with_mean_at_least(target), o);
    return res;
  });
}

od_status od_dice_decompose(const od_options* opts, const char* k, od_result** out) {
  return run(out, [&] {
    const od_options& o = resolve(opts);
    const OrthogonalDie d = die_from_index(arg_integer(k, "k"));
    const DieDecomposition dec = decompose(d);
    Output res;
    res.payload["die"] = die_json(d, o);
    res.payload["center"] = integer(dec.center, o);
    res.payload["halfwidth"] = integer(dec.halfwidth, o);
    return res;
  });
}

od_status od_count_coprime23(const od_options* opts, const char* n,
                             int use_oracle, od_result** out) {
  return run(out, [&] {
    const od_options& o = resolve(opts);
    const Integer value = arg_integer(n, "n");
    Output res;
    res.payload["n"] = integer(value, o);
    if (use_oracle) {
      if (value < 1 || !value.fits_ulong_p()) {
        throw Error(ErrorCode::InvalidArgument,
                    "the gcd-scan oracle needs 1 <= n < 2^64");
      }
      const std::uint64_t scanned = count_coprime23_oracle(value.get_ui());
      res.payload["count"] = scanned;
      res.payload["method"] = "gcd-scan";
      if (value >= 5) res.payload["closed_form_agrees"] = count_coprime23(value) == scanned;
    } else {
      res.payload["count"] = integer(count_coprime23(value), o);
      res.payload["method"] = "closed-form";
    }
    return res;
  });
}

od_status od_count_coprime23_u64(uint64_t n, int use_oracle, uint64_t* count) {
  if (count == nullptr) {
    set_last_error("output pointer is NULL");
    return OD_INVALID_ARGUMENT;
  }
  return run_scalar([&] {
    if (use_oracle) {
      *count = count_coprime23_oracle(n);
    } else {
      *count = count_coprime23(Integer(static_cast<unsigned long>(n))).get_ui();
    }
  });
}

}  // extern "C"
