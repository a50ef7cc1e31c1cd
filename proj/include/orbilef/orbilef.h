/* C interface to the orbilef library.  All objects are opaque; every call
   that can fail returns an orbilef_status and records a message retrievable
   through orbilef_last_error. */
#ifndef ORBILEF_H_
#define ORBILEF_H_

#include <stdint.h>

#if defined(_WIN32)
#  ifdef ORBILEF_BUILDING
#    define ORBILEF_API __declspec(dllexport)
#  else
#    define ORBILEF_API __declspec(dllimport)
#  endif
#else
#  define ORBILEF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values match the CLI exit codes. */
typedef enum orbilef_status {
  ORBILEF_OK = 0,
  ORBILEF_PARSE_ERROR = 2,
  ORBILEF_VALIDATION_ERROR = 3,
  ORBILEF_NOT_A_HOMOMORPHISM = 4,
  ORBILEF_NOT_BIJECTIVE = 5,
  ORBILEF_NOT_INVARIANT = 6,
  ORBILEF_GROUP_MISMATCH = 7,
  ORBILEF_CONVERGENCE_FAILURE = 8,
  ORBILEF_NON_INTEGRAL_MULTIPLICITY = 9,
  ORBILEF_NOT_INTERTWINER = 10,
  ORBILEF_SINGULAR_INTERTWINER = 11,
  ORBILEF_AMBIGUOUS_SIGN = 12,
  ORBILEF_EXPLOSION_GUARD = 13,
  ORBILEF_NOT_CLOSED = 14,
  ORBILEF_OUT_OF_REACH = 15,
  ORBILEF_NON_DIFFERENTIABLE = 16,
  ORBILEF_TANGENCY_DETECTED = 17,
  ORBILEF_COSET_MISMATCH = 18,
  ORBILEF_NON_INTEGER_TOTAL = 19,
  ORBILEF_GROUP_TOO_LARGE = 20,
  ORBILEF_IO_ERROR = 21,
  ORBILEF_INVALID_ARGUMENT = 22,
  ORBILEF_INTERNAL = 23
} orbilef_status;

typedef enum orbilef_format {
  ORBILEF_FORMAT_TEXT = 0,
  ORBILEF_FORMAT_STRUCTURED = 1
} orbilef_format;

typedef struct orbilef_context orbilef_context;
typedef struct orbilef_report orbilef_report;

ORBILEF_API const char* orbilef_version(void);
ORBILEF_API const char* orbilef_status_name(orbilef_status status);

ORBILEF_API orbilef_context* orbilef_context_create(void);
ORBILEF_API void orbilef_context_destroy(orbilef_context* ctx);
/* Message of the most recent failure on this context, or "". */
ORBILEF_API const char* orbilef_last_error(const orbilef_context* ctx);

ORBILEF_API orbilef_status orbilef_set_seed(orbilef_context* ctx, uint64_t seed);
/* Overrides the scene's enumeration radius; a value <= 0 clears the override. */
ORBILEF_API orbilef_status orbilef_set_radius(orbilef_context* ctx, double radius);
/* Overrides the scene's point tolerance (fixed-point residual and element
   matching); a value <= 0 clears the override. */
ORBILEF_API orbilef_status orbilef_set_tolerance(orbilef_context* ctx, double tol);
ORBILEF_API orbilef_status orbilef_set_format(orbilef_context* ctx, orbilef_format format);

/* Lefschetz number of a geometric scene, or the finite-group computation of
   a finite-group scene.  scene_json is the scene document itself. */
ORBILEF_API orbilef_status orbilef_run_scene(orbilef_context* ctx, const char* scene_json,
                                             orbilef_report** out);
/* Enumerated group elements and fixed-orbit isotropy (geometric scene), or
   conjugacy and twisted conjugacy classes (finite-group scene). */
ORBILEF_API orbilef_status orbilef_run_group(orbilef_context* ctx, const char* scene_json,
                                             orbilef_report** out);

/* Finite group given by name ("S3", "D8", ...) and an automorphism spec
   ("id", "inv", "pow:k", "conj:word", "a=word,b=word"). */
ORBILEF_API orbilef_status orbilef_run_burnside(orbilef_context* ctx, const char* group,
                                                const char* zeta, orbilef_report** out);

/* Orientation character of an orthogonal representation (JSON object mapping
   generator labels to matrices) with an intertwiner (JSON matrix). */
ORBILEF_API orbilef_status orbilef_run_character(orbilef_context* ctx, const char* group,
                                                 const char* rep_json,
                                                 const char* intertwiner_json,
                                                 orbilef_report** out);

/* Kernel, cokernel and index of the truncated model operator. */
ORBILEF_API orbilef_status orbilef_run_model_index(orbilef_context* ctx, int truncation,
                                                   orbilef_report** out);

/* Rendered in the context's format at the time of the run. */
ORBILEF_API const char* orbilef_report_text(const orbilef_report* report);
/* Always the structured JSON form. */
ORBILEF_API const char* orbilef_report_json(const orbilef_report* report);
/* The headline number as a fraction (Lefschetz number, twisted class count,
   average of the orientation character, or the index). */
ORBILEF_API void orbilef_report_total(const orbilef_report* report, int64_t* num, int64_t* den);
ORBILEF_API void orbilef_report_destroy(orbilef_report* report);

#ifdef __cplusplus
}
#endif

#endif /* ORBILEF_H_ */
