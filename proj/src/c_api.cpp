// Copyright 2026 The cgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <new>
#include <string>
#include <vector>

#include "cgame/cgame.h"
#include "cgame/commands.hpp"
#include "cgame/fixtures.hpp"

struct cg_options {
  cgame::CommandOptions opt;
  std::string atlas_file;
};

struct cg_scenario {
  cgame::Scenario sc;
  std::string text;
};

struct cg_result {
  cgame::CommandResult res;
  std::string records;
};

namespace {

thread_local std::string g_last_error;

cg_status fail(cg_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

// Runs f, translating exceptions to status codes.
template <typename F>
cg_status guarded(F&& f) {
  try {
    g_last_error.clear();
    return f();
  } catch (const cgame::Error& e) {
    return fail(static_cast<cg_status>(static_cast<int>(e.code()) + 1), e.what());
  } catch (const std::bad_alloc&) {
    return fail(CG_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CG_INTERNAL, e.what());
  }
}

cgame::CommandOptions resolve(const cgame::Scenario& sc, const cg_options* opts) {
  if (opts == nullptr) return {};
  cgame::CommandOptions o = opts->opt;
  if (!opts->atlas_file.empty()) {
    for (const auto& [g, x] : cgame::load_atlas_file(sc, opts->atlas_file)) o.reps[g] = x;
  }
  return o;
}

cg_result* wrap(cgame::CommandResult r) {
  auto* out = new cg_result{std::move(r), {}};
  out->records = cgame::format_records(out->res.records);
  return out;
}

}  // namespace

extern "C" {

const char* cg_status_name(cg_status status) {
  if (status == CG_OK) return "Ok";
  if (status == CG_INTERNAL) return "Internal";
  if (status < CG_OK || status > CG_INTERNAL) return "Unknown";
  return cgame::error_code_name(static_cast<cgame::ErrorCode>(status - 1));
}

const char* cg_last_error(void) { return g_last_error.c_str(); }

size_t cg_fixture_count(void) { return cgame::fixture_names().size(); }

const char* cg_fixture_name(size_t index) {
  const auto& names = cgame::fixture_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

cg_options* cg_options_new(void) { return new (std::nothrow) cg_options(); }

void cg_options_free(cg_options* opts) { delete opts; }

cg_status cg_options_set_bound(cg_options* opts, int bound) {
  if (opts == nullptr || bound < 0) return fail(CG_INVALID_ARGUMENT, "bad bound");
  if (bound == 0) {
    opts->opt.bound.reset();
  } else {
    opts->opt.bound = bound;
  }
  return CG_OK;
}

cg_status cg_options_set_strict(cg_options* opts, int strict) {
  if (opts == nullptr) return fail(CG_INVALID_ARGUMENT, "null options");
  opts->opt.strict = strict != 0;
  return CG_OK;
}

cg_status cg_options_set_cap(cg_options* opts, size_t cap) {
  if (opts == nullptr || cap == 0) return fail(CG_INVALID_ARGUMENT, "bad cap");
  opts->opt.limits.config_cap = cap;
  opts->opt.limits.iso_cap = cap;
  return CG_OK;
}

cg_status cg_options_set_atlas_file(cg_options* opts, const char* path) {
  if (opts == nullptr) return fail(CG_INVALID_ARGUMENT, "null options");
  opts->atlas_file = path == nullptr ? "" : path;
  return CG_OK;
}

cg_status cg_scenario_load(const char* source, const cg_options* opts, cg_scenario** out) {
  if (source == nullptr || out == nullptr) return fail(CG_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    cgame::CommandOptions o = opts ? opts->opt : cgame::CommandOptions{};
    auto* sc = new cg_scenario{cgame::load_scenario(source, o), {}};
    sc->text = cgame::print_scenario(sc->sc);
    *out = sc;
    return CG_OK;
  });
}

cg_status cg_scenario_parse(const char* text, cg_scenario** out) {
  if (text == nullptr || out == nullptr) return fail(CG_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto* sc = new cg_scenario{cgame::parse_scenario(text), {}};
    sc->text = cgame::print_scenario(sc->sc);
    *out = sc;
    return CG_OK;
  });
}

void cg_scenario_free(cg_scenario* sc) { delete sc; }

const char* cg_scenario_text(const cg_scenario* sc) {
  return sc == nullptr ? nullptr : sc->text.c_str();
}

size_t cg_scenario_command_count(const cg_scenario* sc) {
  return sc == nullptr ? 0 : sc->sc.commands.size();
}

cg_status cg_run(const cg_scenario* sc, const char* const* words, size_t count,
                 const cg_options* opts, cg_result** out) {
  if (sc == nullptr || out == nullptr || (count > 0 && words == nullptr)) {
    return fail(CG_INVALID_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return guarded([&] {
    std::vector<std::string> w;
    for (size_t i = 0; i < count; ++i) {
      if (words[i] == nullptr) return fail(CG_INVALID_ARGUMENT, "null word");
      w.emplace_back(words[i]);
    }
    cgame::CommandOptions o = resolve(sc->sc, opts);
    bool run_all = w.size() == 1 && w[0] == "run";
    *out = wrap(run_all ? cgame::cmd_run(sc->sc, o) : cgame::run_command(sc->sc, w, o));
    return CG_OK;
  });
}

cg_status cg_repro(const char* fixture, const cg_options* opts, cg_result** out) {
  if (fixture == nullptr || out == nullptr) return fail(CG_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    if (!cgame::is_fixture(fixture)) {
      return fail(CG_INVALID_ARGUMENT, std::string("unknown fixture ") + fixture);
    }
    cgame::CommandOptions o = opts ? opts->opt : cgame::CommandOptions{};
    *out = wrap(cgame::cmd_repro(fixture, o));
    return CG_OK;
  });
}

int cg_result_exit_code(const cg_result* r) { return r == nullptr ? 2 : r->res.exit_code; }

const char* cg_result_text(const cg_result* r) {
  return r == nullptr ? nullptr : r->res.text.c_str();
}

const char* cg_result_records(const cg_result* r) {
  return r == nullptr ? nullptr : r->records.c_str();
}

void cg_result_free(cg_result* r) { delete r; }

}  // extern "C"
