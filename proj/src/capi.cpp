#include "wildram.h"

#include <cstdlib>
#include <cstring>

#include "wildram/config.hpp"
#include "wildram/errors.hpp"
#include "wildram/filtration.hpp"
#include "wildram/io.hpp"
#include "wildram/sweep.hpp"

using namespace wildram;

// Handle = validated tower plus the truncation window it was opened with.
struct wr_tower {
  Tower t;
  long window;
};

namespace {

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

wr_status fail(const std::exception& e, char** out) {
  if (out) *out = dup_string(error_json(e).dump());
  return static_cast<wr_status>(exit_code_for(e));
}

template <typename Fn>
wr_status guarded(char** out, Fn&& fn) {
  if (!out) return WR_DOMAIN;
  *out = nullptr;
  try {
    json j = fn();
    *out = dup_string(j.dump());
    return WR_OK;
  } catch (const std::exception& e) {
    return fail(e, out);
  } catch (...) {
    if (out) *out = dup_string(R"({"kind":"Internal","message":"unknown"})");
    return WR_INTERNAL;
  }
}

template <typename Fn>
wr_status with_tower(const wr_tower* t, char** out, Fn&& fn) {
  return guarded(out, [&]() -> json {
    if (!t) throw DomainError("null tower handle");
    WindowGuard guard(t->window);
    return fn(t->t);
  });
}

std::string require_text(const char* s, const char* what) {
  if (!s) throw DomainError(std::string("null ") + what);
  return s;
}

}  // namespace

extern "C" {

const char* wr_version(void) { return "wildram 1.0.0"; }

void wr_string_free(char* s) { std::free(s); }

long wr_get_window(void) { return default_window(); }

void wr_set_window(long coeffs) {
  if (coeffs > 0) set_default_window(coeffs);
}

wr_status wr_tower_open(const char* spec_json, wr_tower** out, char** err) {
  if (err) *err = nullptr;
  if (!out) return WR_DOMAIN;
  *out = nullptr;
  try {
    CoverSpecFile spec = parse_cover_spec(require_text(spec_json, "description"));
    long window = spec.precision.value_or(default_window());
    WindowGuard guard(window);
    *out = new wr_tower{open_tower(spec), window};
    return WR_OK;
  } catch (const std::exception& e) {
    return fail(e, err);
  }
}

void wr_tower_close(wr_tower* t) { delete t; }

wr_status wr_tower_spec(const wr_tower* t, char** out) {
  return with_tower(t, out,
                    [](const Tower& tw) { return cover_spec_json(cover_spec_of(tw)); });
}

wr_status wr_validate(const char* spec_json, char** out) {
  return guarded(out, [&]() -> json {
    CoverSpecFile spec = parse_cover_spec(require_text(spec_json, "description"));
    const FqCtx& F = FqCtx::get(spec.p, spec.e);
    WindowGuard guard(spec.precision.value_or(default_window()));
    std::vector<LaurentSeries> rhs;
    for (const auto& s : spec.rhs) rhs.push_back(parse_series(F, s));
    return validation_json(validate_tower(rhs));
  });
}

wr_status wr_reduce(int p, int e, const char* series, char** out) {
  return guarded(out, [&]() -> json {
    const FqCtx& F = FqCtx::get(p, e);
    return reduce_json(reduce_rhs(parse_series(F, require_text(series, "series"))));
  });
}

wr_status wr_breaks(const wr_tower* t, char** out) {
  return with_tower(t, out, [](const Tower& tw) { return breaks_json(tw); });
}

wr_status wr_filtration(const wr_tower* t, char** out) {
  return with_tower(t, out, [](const Tower& tw) {
    return filtration_json(ramification_filtration(tw));
  });
}

wr_status wr_different(const wr_tower* t, char** out) {
  return with_tower(t, out, [](const Tower& tw) { return different_json(tw); });
}

wr_status wr_g2(const wr_tower* t, char** out) {
  return with_tower(t, out, [](const Tower& tw) { return g2_json(tw); });
}

wr_status wr_jump_at_two(const wr_tower* t, char** out) {
  return with_tower(t, out, [](const Tower& tw) { return jump2_json(tw); });
}

wr_status wr_restrict_filtration(const wr_tower* t, const char* subgroup_rows,
                                 char** out) {
  return with_tower(t, out, [&](const Tower& tw) {
    json rows = json::parse(require_text(subgroup_rows, "subgroup"), nullptr, false);
    if (rows.is_discarded()) throw ParseError("subgroup is not valid JSON");
    return restrict_json(tw, parse_subspace_rows(tw.p(), tw.ell(), rows));
  });
}

wr_status wr_quotient_filtration(const wr_tower* t, long chain_index,
                                 char** out) {
  return with_tower(t, out, [&](const Tower& tw) {
    return quotient_json(tw, chain_index);
  });
}

wr_status wr_transitivity(const wr_tower* t, char** out) {
  return with_tower(t, out,
                    [](const Tower& tw) { return transitivity_json(tw); });
}

wr_status wr_compose(const wr_tower* x, const wr_tower* z, char** out) {
  return guarded(out, [&]() -> json {
    if (!x || !z) throw DomainError("null tower handle");
    WindowGuard guard(x->window);
    return compose_json(x->t, z->t);
  });
}

wr_status wr_kill_wild(const wr_tower* t, const char* subgroup_rows,
                       char** out) {
  return with_tower(t, out, [&](const Tower& tw) {
    json rows = json::parse(require_text(subgroup_rows, "subgroup"), nullptr, false);
    if (rows.is_discarded()) throw ParseError("subgroup is not valid JSON");
    return kill_wild_json(tw, parse_subspace_rows(tw.p(), tw.ell(), rows));
  });
}

wr_status wr_tame_pullback(const wr_tower* t, long n, char** out) {
  return with_tower(t, out,
                    [&](const Tower& tw) { return tame_pullback_json(tw, n); });
}

wr_status wr_uniformizer(const wr_tower* t, char** out) {
  return with_tower(t, out,
                    [](const Tower& tw) { return uniformizer_json(tw); });
}

wr_status wr_genus(long degree, const long* differents, size_t count,
                   char** out) {
  return guarded(out, [&]() -> json {
    std::vector<long> d;
    if (count && !differents) throw DomainError("null different list");
    for (size_t i = 0; i < count; ++i) d.push_back(differents[i]);
    return genus_json(degree, d);
  });
}

wr_status wr_sweep(unsigned long long seed, long window, int samples,
                   char** out) {
  return guarded(out, [&]() -> json {
    SweepOptions opts;
    opts.seed = seed;
    if (window > 0) opts.window = window;
    if (samples > 0) opts.samples = samples;
    return sweep_json(run_sweep(opts));
  });
}

}  // extern "C"
