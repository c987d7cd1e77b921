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

// orthodice command-line front end. Talks to the library only through the C
// interface in orthodice.h and renders the JSON documents it returns.

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "orthodice/orthodice.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kSchemaVersion = "1.0";
constexpr std::uint64_t kFallbackSeed = 20260101;

// Thrown for failures reported by the library: exit code 1.
struct DomainFailure {
  std::string name;
  std::string message;
};

// Thrown for command-line misuse discovered after parsing: exit code 2.
struct UsageFailure {
  std::string message;
};

struct ResultDeleter {
  void operator()(od_result* r) const { od_result_destroy(r); }
};
using ResultPtr = std::unique_ptr<od_result, ResultDeleter>;

struct OptionsDeleter {
  void operator()(od_options* o) const { od_options_destroy(o); }
};
using OptionsPtr = std::unique_ptr<od_options, OptionsDeleter>;

void check(od_status status) {
  if (status != OD_OK) {
    throw DomainFailure{od_status_name(status), od_last_error_message()};
  }
}

struct Globals {
  std::string format = "json";
  std::string table;
  unsigned threads = 1;
  std::uint64_t seed = kFallbackSeed;
  bool full = false;
  double tail_tol = 1e-12;
  std::size_t grid = 1001;
  std::int64_t support_cap = 1'000'000;
};

OptionsPtr make_options(const Globals& g) {
  od_options* raw = nullptr;
  check(od_options_create(&raw));
  OptionsPtr o(raw);
  check(od_options_set_threads(o.get(), g.threads));
  check(od_options_set_tail_tol(o.get(), g.tail_tol));
  check(od_options_set_grid_size(o.get(), g.grid));
  check(od_options_set_support_cap(o.get(), g.support_cap));
  if (g.full) check(od_options_set_full_integers(o.get(), 0));
  return o;
}

// ---- rendering --------------------------------------------------------------

bool is_rational(const Json& v) { return v.is_object() && v.contains("rational"); }
bool is_summary(const Json& v) { return v.is_object() && v.contains("digits"); }

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  if (is_summary(v)) {
    return "<" + std::to_string(v["digits"].get<std::uint64_t>()) +
           " digits ..." + v["tail"].get<std::string>() + ">";
  }
  if (v.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i > 0) out += ';';
      out += is_rational(v[i]) ? v[i]["rational"].get<std::string>() : scalar_text(v[i]);
    }
    return out;
  }
  return v.dump();
}

struct Grid {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// Rational cells expand into "<col>" (p/q) and "<col>_decimal".
Grid grid_from_table(const Json& t) {
  Grid g;
  const auto& cols = t["columns"];
  const auto& rows = t["rows"];
  std::vector<bool> rational_col(cols.size(), false);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < cols.size() && c < row.size(); ++c) {
      if (is_rational(row[c])) rational_col[c] = true;
    }
  }
  for (std::size_t c = 0; c < cols.size(); ++c) {
    g.header.push_back(cols[c].get<std::string>());
    if (rational_col[c]) g.header.push_back(cols[c].get<std::string>() + "_decimal");
  }
  for (const auto& row : rows) {
    std::vector<std::string> cells;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const Json& v = row[c];
      if (rational_col[c]) {
        cells.push_back(is_rational(v) ? v["rational"].get<std::string>() : scalar_text(v));
        cells.push_back(is_rational(v) ? v["decimal"].dump() : "");
      } else {
        cells.push_back(scalar_text(v));
      }
    }
    g.rows.push_back(std::move(cells));
  }
  return g;
}

void flatten(const std::string& prefix, const Json& v, Grid& g) {
  if (is_rational(v)) {
    g.rows.push_back({prefix, v["rational"].get<std::string>()});
    g.rows.push_back({prefix + "_decimal", v["decimal"].dump()});
  } else if (v.is_object() && !is_summary(v)) {
    for (const auto& [key, value] : v.items()) {
      if (prefix.empty() && (key == "tables" || key == "default_table")) continue;
      flatten(prefix.empty() ? key : prefix + "." + key, value, g);
    }
  } else {
    g.rows.push_back({prefix, scalar_text(v)});
  }
}

Grid select_grid(const Json& payload, const std::string& wanted) {
  if (payload.contains("tables")) {
    const std::string name =
        wanted.empty() ? payload["default_table"].get<std::string>() : wanted;
    if (!payload["tables"].contains(name)) {
      std::string known;
      for (const auto& [key, _] : payload["tables"].items()) known += " " + key;
      throw UsageFailure{"no table '" + name + "'; available:" + known};
    }
    return grid_from_table(payload["tables"][name]);
  }
  if (!wanted.empty()) throw UsageFailure{"this command has no tables"};
  Grid g;
  g.header = {"key", "value"};
  flatten("", payload, g);
  return g;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void print_csv(const Grid& g, std::ostream& os) {
  auto line = [&os](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) os << ',';
      os << csv_cell(cells[i]);
    }
    os << '\n';
  };
  line(g.header);
  for (const auto& r : g.rows) line(r);
}

void print_table(const Grid& g, std::ostream& os) {
  std::vector<std::size_t> width(g.header.size(), 0);
  auto measure = [&width](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i) {
      width[i] = std::max(width[i], cells[i].size());
    }
  };
  measure(g.header);
  for (const auto& r : g.rows) measure(r);
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) os << "  ";
      if (i + 1 == cells.size()) {
        os << cells[i];
      } else {
        os << std::left << std::setw(static_cast<int>(width[i])) << cells[i];
      }
    }
    os << '\n';
  };
  line(g.header);
  std::vector<std::string> rule;
  for (std::size_t w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& r : g.rows) line(r);
}

void emit(const Globals& g, const std::string& command, const ResultPtr& result) {
  for (std::size_t i = 0; i < od_result_warning_count(result.get()); ++i) {
    std::cerr << "warning: " << od_result_warning(result.get(), i) << '\n';
  }
  Json payload = Json::parse(od_result_json(result.get()));
  if (g.format == "json") {
    if (!g.table.empty()) select_grid(payload, g.table);  // validate the name
    Json env = Json::object();
    env["schema_version"] = kSchemaVersion;
    env["command"] = command;
    env["format"] = "json";
    env["payload"] = std::move(payload);
    std::cout << env.dump(2) << '\n';
    return;
  }
  const Grid grid = select_grid(payload, g.table);
  if (g.format == "csv") {
    print_csv(grid, std::cout);
  } else {
    print_table(grid, std::cout);
  }
}

// ---- argument helpers ------------------------------------------------------

std::vector<const char*> c_strings(const std::vector<std::string>& items) {
  std::vector<const char*> out;
  for (const auto& s : items) out.push_back(s.c_str());
  return out;
}

std::optional<std::uint64_t> env_seed() {
  const char* text = std::getenv("ORTHODICE_SEED");
  if (text == nullptr || *text == '\0') return std::nullopt;
  std::string s(text);
  if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 20) {
    throw UsageFailure{"ORTHODICE_SEED must be a non-negative integer, got '" + s + "'"};
  }
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw UsageFailure{"ORTHODICE_SEED is out of range: '" + s + "'"};
  }
}

std::array<double, 3> vec3(const std::vector<double>& v, const char* what) {
  if (v.size() != 3) {
    throw UsageFailure{std::string(what) + " needs exactly three comma-separated values"};
  }
  return {v[0], v[1], v[2]};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orthodice: orthogonal dice, thinning and Poisson limits"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(od_version()));

  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--table", g.table, "Table to render for csv/table output");
  app.add_option("--threads", g.threads, "Worker threads (output does not depend on it)")
      ->check(CLI::Range(1U, 1024U));
  auto* seed_opt = app.add_option("--seed", g.seed, "Seed (default: $ORTHODICE_SEED)");
  app.add_flag("--full", g.full, "Print huge integers in full instead of summarizing");

  std::function<void()> action;
  std::string command;
  auto on = [&](CLI::App* sub, std::string name, std::function<void()> fn) {
    sub->callback([&, name, fn] {
      command = name;
      action = fn;
    });
  };

  // dice ------------------------------------------------------------------
  auto* dice = app.add_subcommand("dice", "Orthogonal dice")->require_subcommand(1);
  std::uint64_t list_count = 15;
  auto* dice_list = dice->add_subcommand("list", "First N orthogonal dice");
  dice_list->add_option("--count", list_count, "How many")->check(CLI::PositiveNumber);
  on(dice_list, "dice list", [&] {
    auto o = make_options(g);
    od_result* r = nullptr;
    check(od_dice_list(o.get(), list_count, &r));
    emit(g, command, ResultPtr(r));
  });

  std::string dice_k;
  auto* from_index = dice->add_subcommand("from-index", "Die with canonical index K");
  from_index->add_option("K", dice_k)->required();
  on(from_index, "dice from-index", [&] {
    auto o = make_options(g);
    od_result* r = nullptr;
    check(od_dice_from_index(o.get(), dice_k.c_str(), &r));
    emit(g, command, ResultPtr(r));
  });

  std::string dice_p;
  bool check_primality = false;
  auto* from_prime = dice->add_subcommand("from-prime", "Die with P sides (P coprime to 6)");
  from_prime->add_option("P", dice_p, "Side count; accepts B^E-C forms")->required();
  from_prime->add_flag("--check-primality", check_primality, "Annotate whether P is prime");
  on(from_prime, "dice from-prime", [&] {
    auto o = make_options(g);
    od_result* r = nullptr;
    check(od_dice_from_prime(o.get(), dice_p.c_str(), check_primality, &r));
    emit(g, command, ResultPtr(r));
  });

  std::string cls_m, cls_n;
  auto* classify = dice->add_subcommand("classify", "Classify the die on {M..N}");
  classify->add_option("M", cls_m)->required();
  classify->add_option("N", cls_n)->required();
  on(classify, "dice classify", [&] {
    auto o = make_options(g);
    od_result* r = nullptr;
    check(od_dice_classify(o.get(), cls_m.c_str(), cls_n.c_str(), &r));
    emit(g, command, ResultPtr(r));
  });

  std::string c_star;
  auto* nearest = dice->add_subcommand("nearest", "Orthogonal die with mean closest to C");
  nearest->add_option("C", c_star, "Target mean, P/Q or decimal")->required();
  on(nearest, "dice nearest", [&] {
    auto o = make_options(g);
    od_result* r = nullptr;
    check(od_dice_nearest(o.get(), c_star.c_str(), &r));
    emit(g, command, ResultPtr(r));
  });

  std::string c_min;
  auto* first = dice->add_subcommand("first-at-least", "First orthogonal die with mean >= C");
  first->add_option("C", c_min)->required();
  on(first, "dice first-at-least", [&] {
    auto o = make_options(g);
    od_result* r = nullptr;
    check(od_dice_first_at_least(o.get(), c_min.c_str(), &r));
    emit(g, command, ResultPtr(r));
  });

  std::string dec_k;
  auto* decompose = dice->add_subcommand("decompose", "Centre and half-width of die K");
  decompose->add_option("K", dec_k)->required();
  on(decompose, "dice decompose", [&] {
    auto o = make_options(g);
    od_result* r = nullptr;
    check(od_dice_decompose(o.get(), dec_k.c_str(), &r));
    emit(g, command, ResultPtr(r));
  });

  // count -----------------------------------------------------------------
  auto* count = app.add_subcommand("count", "Counting identities")->require_subcommand(1);
  std::string count_n;
  bool oracle = false;
  auto* coprime = count->add_subcommand("coprime23", "Integers in [1, N] coprime to 6");
  coprime->add_option("N", count_n)->required();
  coprime->add_flag("--oracle", oracle, "Use the gcd scan instead of the closed form");
  on(coprime, "count coprime23", [&] {
    auto o = make_options(g);
    od_result* r = nullptr;
    check(od_count_coprime23(o.get(), count_n.c_str(), oracle, &r));
    emit(g, command, ResultPtr(r));
  });

  // law -------------------------------------------------------------------
  auto* law = app.add_subcommand("law", "Count laws, thinning and Poisson limits")
                  ->require_subcommand(1);
  std::string law_m, law_n, law_a = "1";
  unsigned max_order = 4;
  auto* pmf = law->add_subcommand("pmf", "Exact pmf of the a-thinned die");
  pmf->add_option("--m", law_m)->required();
  pmf->add_option("--n", law_n)->required();
  pmf->add_option("--a", law_a, "Thinning probability, P/Q")->capture_default_str();
  on(pmf, "law pmf", [&] {
    auto o = make_options(g);
    od_result* r = nullptr;
    check(od_law_pmf(o.get(), law_m.c_str(), law_n.c_str(), law_a.c_str(), &r));
    emit(g, command, ResultPtr(r));
  });
  auto* moments = law->add_subcommand("moments", "Factorial and raw moments");
  moments->add_option("--m", law_m)->required();
  moments->add_option("--n", law_n)->required();
  moments->add_option("--a", law_a, "Thinning probability, P/Q")->capture_default_str();
  moments->add_option("--max-order", max_order, "Highest order")->capture_default_str();
  on(moments, "law moments", [&] {
    auto o = make_options(g);
    od_result* r = nullptr;
    check(od_law_moments(o.get(), law_m.c_str(), law_n.c_str(), law_a.c_str(),
                         max_order, &r));
    emit(g, command, ResultPtr(r));
  });
  std::string k0;
  std::vector<std::string> indices;
  auto* converge = law->add_subcommand("converge", "Distances to Poisson(c(k0)) (figure data)");
  converge->add_option("--k0", k0)->required();
  converge->add_option("--indices", indices)->required()->delimiter(',');
  converge->add_option("--grid", g.grid, "pgf grid size")->capture_default_str()->check(CLI::Range(2, 100000000));
  converge->add_option("--tail-tol", g.tail_tol, "Poisson tail tolerance")->capture_default_str()
      ->check(CLI::Range(1e-300, 0.5));
  on(converge, "law converge", [&] {
    auto o = make_options(g);
    auto items = c_strings(indices);
    od_result* r = nullptr;
    check(od_law_converge(o.get(), k0.c_str(), items.data(), items.size(), &r));
    emit(g, command, ResultPtr(r));
  });

  // sim -------------------------------------------------------------------
  auto* sim = app.add_subcommand("sim", "Stone throwing Monte Carlo")->require_subcommand(1);
  std::string model;
  std::vector<std::string> functionals;
  std::uint64_t reps = 10000;
  auto* estimate = sim->add_subcommand("estimate", "Estimate E, Var, Cov of N f");
  estimate->add_option("--model", model, "e.g. die:96:132@interval, dirac:5@goe")->required();
  estimate->add_option("--functional", functionals, "Repeatable or comma separated")
      ->required()
      ->delimiter(',');
  estimate->add_option("--reps", reps, "Replicates")->capture_default_str()->check(CLI::Range(2ULL, 1ULL << 40));
  on(estimate, "sim estimate", [&] {
    auto o = make_options(g);
    auto items = c_strings(functionals);
    od_result* r = nullptr;
    check(od_sim_estimate(o.get(), model.c_str(), items.data(), items.size(), reps,
                          g.seed, &r));
    emit(g, command, ResultPtr(r));
  });

  // app -------------------------------------------------------------------
  auto* apps = app.add_subcommand("app", "Applications")->require_subcommand(1);
  auto* cards = apps->add_subcommand("cards", "Card games")->require_subcommand(1);
  std::string card_m, card_n;
  auto* cards_table = cards->add_subcommand("table", "Exact suit moments and covariances");
  cards_table->add_option("--m", card_m)->required();
  cards_table->add_option("--n", card_n)->required();
  on(cards_table, "app cards table", [&] {
    auto o = make_options(g);
    od_result* r = nullptr;
    check(od_cards_table(o.get(), card_m.c_str(), card_n.c_str(), &r));
    emit(g, command, ResultPtr(r));
  });
  unsigned hand = 0;
  std::vector<unsigned> suit_counts;
  auto* partition = cards->add_subcommand("partition", "Suit partition probabilities");
  partition->add_option("--hand", hand)->required();
  partition->add_option("--counts", suit_counts, "Four suit counts")->required()->delimiter(',');
  on(partition, "app cards partition", [&] {
    auto o = make_options(g);
    od_result* r = nullptr;
    check(od_cards_partition(o.get(), hand, suit_counts.data(), suit_counts.size(), &r));
    emit(g, command, ResultPtr(r));
  });
  std::uint64_t rounds = 100000;
  auto* game = cards->add_subcommand("game", "Guessing game (figure data)");
  game->add_option("--m", card_m)->required();
  game->add_option("--n", card_n)->required();
  game->add_option("--rounds", rounds, "Rounds")->capture_default_str()->check(CLI::Range(2ULL, 1ULL << 40));
  on(game, "app cards game", [&] {
    auto o = make_options(g);
    od_result* r = nullptr;
    check(od_cards_game(o.get(), card_m.c_str(), card_n.c_str(), rounds, g.seed, &r));
    emit(g, command, ResultPtr(r));
  });

  auto* goe = apps->add_subcommand("goe", "2x2 GOE spectral gap")->require_subcommand(1);
  std::vector<double> r_grid;
  std::uint64_t samples = 10'000'000;
  auto* goe_summary = goe->add_subcommand("summary", "Restriction curves (figure data)");
  goe_summary->add_option("--r-grid", r_grid, "Comma separated r values (default -3..3)")
      ->delimiter(',');
  goe_summary->add_option("--samples", samples, "Samples per r; 0 = quadrature")->capture_default_str();
  on(goe_summary, "app goe summary", [&] {
    auto o = make_options(g);
    check(od_options_set_samples(o.get(), samples));
    od_result* r = nullptr;
    check(od_goe_summary(o.get(), r_grid.empty() ? nullptr : r_grid.data(),
                         r_grid.size(), g.seed, &r));
    emit(g, command, ResultPtr(r));
  });
  std::uint64_t wigner_n = 100000;
  auto* wigner = goe->add_subcommand("wigner", "Wigner surmise samples");
  wigner->add_option("--n", wigner_n, "Sample size")->capture_default_str()->check(CLI::PositiveNumber);
  on(wigner, "app goe wigner", [&] {
    auto o = make_options(g);
    od_result* r = nullptr;
    check(od_goe_wigner(o.get(), wigner_n, g.seed, &r));
    emit(g, command, ResultPtr(r));
  });

  double horizon = 10.0, amp = 1.0, decay = 1.0;
  std::string die_index = "17";
  std::size_t grid_points = 20;
  auto* shot = apps->add_subcommand("shotnoise", "Shot noise driven by an orthogonal die");
  shot->add_option("--T", horizon, "Horizon")->capture_default_str();
  shot->add_option("--ap", amp, "Pulse amplitude")->capture_default_str();
  shot->add_option("--bp", decay, "Pulse decay rate")->capture_default_str();
  shot->add_option("--die-index", die_index, "Canonical index k")->capture_default_str();
  shot->add_option("--grid", grid_points, "Time grid points on [0, T]")->capture_default_str()
      ->check(CLI::Range(2, 1000000));
  shot->add_option("--reps", reps, "Replicates")->capture_default_str()->check(CLI::Range(2ULL, 1ULL << 40));
  on(shot, "app shotnoise", [&] {
    auto o = make_options(g);
    od_result* r = nullptr;
    check(od_shotnoise(o.get(), horizon, amp, decay, die_index.c_str(), grid_points, reps,
                       g.seed, &r));
    emit(g, command, ResultPtr(r));
  });

  od_gravity_params gp;
  od_gravity_params_init(&gp);
  std::string preset, density = "gaussian", grav_m = "96", grav_n = "132";
  std::vector<double> center, zpt, wpt;
  bool no_soften = false;
  std::uint64_t grav_reps = 10000;
  auto* grav = apps->add_subcommand("gravity", "Gravitational potential of a star cloud");
  grav->add_option("--preset", preset, "Named preset")->check(CLI::IsMember({"milkyway"}));
  grav->add_option("--density", density, "gaussian | ball | disk")->capture_default_str()
      ->check(CLI::IsMember({"gaussian", "ball", "disk"}));
  grav->add_option("--center", center, "x,y,z")->delimiter(',');
  grav->add_option("--scale", gp.scale, "sigma | radius | disk scale length")->capture_default_str();
  grav->add_option("--scale-height", gp.scale_height, "Disk scale height")->capture_default_str();
  grav->add_option("--r-max", gp.r_max, "Disk radius cut")->capture_default_str();
  grav->add_option("--z-max", gp.z_max, "Disk height cut")->capture_default_str();
  grav->add_option("--mass-mean", gp.mass_mean, "Lognormal mass mean b_m")->capture_default_str();
  grav->add_option("--mass-variance", gp.mass_variance, "Lognormal mass variance")->capture_default_str();
  grav->add_option("--G", gp.gravitational_constant, "Gravitational constant")->capture_default_str();
  grav->add_option("--softening", gp.softening, "Softening length (default 1e-3 diameter)");
  grav->add_flag("--no-soften", no_soften, "Fail on evaluation points inside the support");
  grav->add_option("--z", zpt, "Evaluation point x,y,z")->delimiter(',');
  grav->add_option("--w", wpt, "Second point x,y,z")->delimiter(',');
  grav->add_option("--m", grav_m, "Die lower bound")->capture_default_str();
  grav->add_option("--n", grav_n, "Die upper bound")->capture_default_str();
  grav->add_option("--reps", grav_reps, "Replicates")->capture_default_str()->check(CLI::Range(2ULL, 1ULL << 40));
  on(grav, "app gravity", [&] {
    auto o = make_options(g);
    od_result* r = nullptr;
    if (preset == "milkyway") {
      check(od_gravity_milky_way(o.get(), grav_reps, g.seed, &r));
    } else {
      gp.density = density == "ball"   ? OD_DENSITY_BALL
                   : density == "disk" ? OD_DENSITY_DISK
                                       : OD_DENSITY_GAUSSIAN;
      if (!center.empty()) {
        const auto c = vec3(center, "--center");
        std::copy(c.begin(), c.end(), gp.center);
      }
      if (!zpt.empty()) {
        const auto c = vec3(zpt, "--z");
        std::copy(c.begin(), c.end(), gp.z);
      }
      if (!wpt.empty()) {
        const auto c = vec3(wpt, "--w");
        std::copy(c.begin(), c.end(), gp.w);
      }
      gp.soften_inside = no_soften ? 0 : 1;
      check(od_gravity(o.get(), &gp, grav_m.c_str(), grav_n.c_str(), grav_reps, g.seed, &r));
    }
    emit(g, command, ResultPtr(r));
  });

  // poly ------------------------------------------------------------------
  auto* poly = app.add_subcommand("poly", "Orthogonal polynomials")->require_subcommand(1);
  unsigned degree = 3;
  std::vector<unsigned> powers{1, 2};
  auto* report = poly->add_subcommand("report", "Distances to Charlier (figure data)");
  report->add_option("--k0", k0)->required();
  report->add_option("--indices", indices)->required()->delimiter(',');
  report->add_option("--degree", degree, "Polynomial degree")->capture_default_str()->check(CLI::Range(0, 40));
  report->add_option("--p", powers, "L^p exponents")->delimiter(',')->check(CLI::PositiveNumber);
  report->add_option("--tail-tol", g.tail_tol, "Poisson tail tolerance")->capture_default_str()
      ->check(CLI::Range(1e-300, 0.5));
  on(report, "poly report", [&] {
    auto o = make_options(g);
    auto items = c_strings(indices);
    od_result* r = nullptr;
    check(od_poly_report(o.get(), k0.c_str(), items.data(), items.size(), degree,
                         powers.data(), powers.size(), &r));
    emit(g, command, ResultPtr(r));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    // --help and --version exit 0; anything else is a usage error.
    return code == 0 ? 0 : 2;
  }

  try {
    if (seed_opt->count() == 0) {
      if (auto s = env_seed()) g.seed = *s;
    }
    if (action) action();
  } catch (const UsageFailure& e) {
    std::cerr << "usage error: " << e.message << '\n';
    return 2;
  } catch (const DomainFailure& e) {
    std::cerr << e.name << ": " << e.message << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "Internal: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
