#include "orbilef/orbilef.h"

#include <cmath>
#include <exception>
#include <new>
#include <string>

#include "orbilef/catalog.hpp"
#include "orbilef/error.hpp"
#include "orbilef/summary.hpp"

struct orbilef_context {
  std::uint64_t seed = orbilef::kDefaultSeed;
  double radius = 0;
  double tolerance = 0;
  orbilef_format format = ORBILEF_FORMAT_TEXT;
  std::string last_error;
};

struct orbilef_report {
  std::string text;
  std::string json;
  std::int64_t num = 0;
  std::int64_t den = 1;
};

namespace {

template <class F>
orbilef_status guarded(orbilef_context* ctx, F&& body) {
  if (!ctx)
    return ORBILEF_INVALID_ARGUMENT;
  ctx->last_error.clear();
  try {
    body();
    return ORBILEF_OK;
  } catch (const orbilef::Error& e) {
    ctx->last_error = e.what();
    return static_cast<orbilef_status>(e.code());
  } catch (const std::bad_alloc&) {
    ctx->last_error = "Internal: out of memory";
  } catch (const std::exception& e) {
    ctx->last_error = std::string("Internal: ") + e.what();
  }
  return ORBILEF_INTERNAL;
}

void require(bool ok, const char* what) {
  if (!ok)
    orbilef::fail(orbilef::ErrorCode::InvalidArgument, what);
}

orbilef_report* emit(const orbilef_context* ctx, const orbilef::Summary& s) {
  auto* r = new orbilef_report;
  r->json = s.data.dump(2) + "\n";
  r->text = ctx->format == ORBILEF_FORMAT_STRUCTURED ? r->json : s.text;
  r->num = s.headline.num();
  r->den = s.headline.den();
  return r;
}

orbilef::SceneFile scene_with_overrides(const orbilef_context* ctx, const char* text) {
  orbilef::SceneFile scene = orbilef::parse_scene(text);
  if (ctx->radius > 0)
    scene.radius = ctx->radius;
  if (ctx->tolerance > 0)
    scene.tolerances.point = ctx->tolerance;
  return scene;
}

} // namespace

extern "C" {

const char* orbilef_version(void) { return "0.1.0"; }

const char* orbilef_status_name(orbilef_status status) {
  if (status == ORBILEF_OK)
    return "OK";
  // error_name returns views of string literals, so data() is terminated.
  return orbilef::error_name(static_cast<orbilef::ErrorCode>(status)).data();
}

orbilef_context* orbilef_context_create(void) { return new (std::nothrow) orbilef_context; }

void orbilef_context_destroy(orbilef_context* ctx) { delete ctx; }

const char* orbilef_last_error(const orbilef_context* ctx) {
  return ctx ? ctx->last_error.c_str() : "";
}

orbilef_status orbilef_set_seed(orbilef_context* ctx, uint64_t seed) {
  return guarded(ctx, [&] { ctx->seed = seed; });
}

orbilef_status orbilef_set_radius(orbilef_context* ctx, double radius) {
  return guarded(ctx, [&] {
    require(std::isfinite(radius), "radius must be finite");
    ctx->radius = radius > 0 ? radius : 0;
  });
}

orbilef_status orbilef_set_tolerance(orbilef_context* ctx, double tol) {
  return guarded(ctx, [&] {
    require(std::isfinite(tol), "tolerance must be finite");
    ctx->tolerance = tol > 0 ? tol : 0;
  });
}

orbilef_status orbilef_set_format(orbilef_context* ctx, orbilef_format format) {
  return guarded(ctx, [&] {
    require(format == ORBILEF_FORMAT_TEXT || format == ORBILEF_FORMAT_STRUCTURED,
            "unknown format");
    ctx->format = format;
  });
}

orbilef_status orbilef_run_scene(orbilef_context* ctx, const char* scene_json,
                                 orbilef_report** out) {
  return guarded(ctx, [&] {
    require(scene_json && out, "null argument");
    *out = nullptr;
    orbilef::SceneFile scene = scene_with_overrides(ctx, scene_json);
    *out = emit(ctx, orbilef::lefschetz_summary(scene, ctx->seed));
  });
}

orbilef_status orbilef_run_group(orbilef_context* ctx, const char* scene_json,
                                 orbilef_report** out) {
  return guarded(ctx, [&] {
    require(scene_json && out, "null argument");
    *out = nullptr;
    orbilef::SceneFile scene = scene_with_overrides(ctx, scene_json);
    *out = emit(ctx, orbilef::group_summary(scene));
  });
}

orbilef_status orbilef_run_burnside(orbilef_context* ctx, const char* group, const char* zeta,
                                    orbilef_report** out) {
  return guarded(ctx, [&] {
    require(group && zeta && out, "null argument");
    *out = nullptr;
    orbilef::GroupPtr g = orbilef::named_group(group);
    *out = emit(ctx, orbilef::burnside_summary(g, orbilef::parse_automorphism(g, zeta), ctx->seed));
  });
}

orbilef_status orbilef_run_character(orbilef_context* ctx, const char* group,
                                     const char* rep_json, const char* intertwiner_json,
                                     orbilef_report** out) {
  return guarded(ctx, [&] {
    require(group && rep_json && intertwiner_json && out, "null argument");
    *out = nullptr;
    orbilef::GroupPtr g = orbilef::named_group(group);
    *out = emit(ctx, orbilef::character_summary(g, rep_json, intertwiner_json, ctx->seed));
  });
}

orbilef_status orbilef_run_model_index(orbilef_context* ctx, int truncation,
                                       orbilef_report** out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "null argument");
    *out = nullptr;
    *out = emit(ctx, orbilef::model_index_summary(truncation));
  });
}

const char* orbilef_report_text(const orbilef_report* report) {
  return report ? report->text.c_str() : "";
}

const char* orbilef_report_json(const orbilef_report* report) {
  return report ? report->json.c_str() : "";
}

void orbilef_report_total(const orbilef_report* report, int64_t* num, int64_t* den) {
  if (num)
    *num = report ? report->num : 0;
  if (den)
    *den = report ? report->den : 1;
}

void orbilef_report_destroy(orbilef_report* report) { delete report; }

} // extern "C"
