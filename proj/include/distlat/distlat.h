#ifndef DISTLAT_H
#define DISTLAT_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(DISTLAT_BUILDING)
#    define DISTLAT_API __declspec(dllexport)
#  else
#    define DISTLAT_API __declspec(dllimport)
#  endif
#else
#  define DISTLAT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes double as the CLI exit codes. */
typedef enum distlat_status {
  DISTLAT_OK = 0,
  DISTLAT_VERIFICATION_FAILED = 1,
  DISTLAT_MALFORMED_INPUT = 2,
  DISTLAT_NO_SOLUTION = 3,
  DISTLAT_CAP_EXCEEDED = 4,
  DISTLAT_INVALID_ARGUMENT = 5,
  DISTLAT_INTERNAL_ERROR = 6
} distlat_status;

typedef struct distlat_problem distlat_problem;
typedef struct distlat_result distlat_result;
typedef struct distlat_group distlat_group;
typedef struct distlat_subgroup distlat_subgroup;

typedef struct distlat_options {
  const char* family;       /* NULL: first listed family, else all subgroups */
  int augment;
  int representatives;
  size_t cap;               /* closure cap */
  const char* flavor;       /* pattern: "constant", "ideal" or "quotient" */
  const char* module_spec;  /* ext/tor, e.g. "Z/8" or "Z^2 + Z/4" */
  long degrees;             /* ext/tor: highest degree, -1 for the family default */
  unsigned long long enumeration_limit;
  unsigned threads;
} distlat_options;

DISTLAT_API const char* distlat_version(void);
/* Message for the last failing call on this thread; never NULL. */
DISTLAT_API const char* distlat_last_error(void);
DISTLAT_API const char* distlat_status_name(distlat_status s);

DISTLAT_API void distlat_options_init(distlat_options* opts);

/* Number of command names and the i-th name, in sorted order. */
DISTLAT_API size_t distlat_command_count(void);
DISTLAT_API const char* distlat_command_name(size_t i);

DISTLAT_API distlat_status distlat_problem_parse(const char* text, size_t length,
                                                 distlat_problem** out);
DISTLAT_API void distlat_problem_free(distlat_problem* p);

/* On DISTLAT_OK, DISTLAT_NO_SOLUTION and DISTLAT_VERIFICATION_FAILED a result
   document is produced; otherwise *out is set to NULL. */
DISTLAT_API distlat_status distlat_run(const distlat_problem* p, const char* command,
                                       const distlat_options* opts, distlat_result** out);
/* Sorted-key JSON text owned by the result. */
DISTLAT_API const char* distlat_result_json(const distlat_result* r);
DISTLAT_API void distlat_result_free(distlat_result* r);

/* Direct access to groups and subgroups. Integers are decimal strings;
   coordinate vectors list free generators first. */
DISTLAT_API distlat_status distlat_group_create(size_t free_rank, const char* const* torsion,
                                                size_t torsion_count, distlat_group** out);
DISTLAT_API void distlat_group_free(distlat_group* g);
DISTLAT_API size_t distlat_group_generators(const distlat_group* g);
/* Invariant-factor text such as "Z/2 + Z"; free with distlat_string_free. */
DISTLAT_API char* distlat_group_describe(const distlat_group* g);

/* `coords` holds `count` vectors of distlat_group_generators(g) entries each,
   row after row. */
DISTLAT_API distlat_status distlat_subgroup_create(const distlat_group* g,
                                                   const char* const* coords, size_t count,
                                                   distlat_subgroup** out);
DISTLAT_API void distlat_subgroup_free(distlat_subgroup* s);
DISTLAT_API distlat_status distlat_subgroup_sum(const distlat_subgroup* a,
                                                const distlat_subgroup* b,
                                                distlat_subgroup** out);
DISTLAT_API distlat_status distlat_subgroup_intersect(const distlat_subgroup* a,
                                                      const distlat_subgroup* b,
                                                      distlat_subgroup** out);
DISTLAT_API distlat_status distlat_subgroup_equal(const distlat_subgroup* a,
                                                  const distlat_subgroup* b, int* out);
DISTLAT_API distlat_status distlat_subgroup_contains(const distlat_subgroup* s,
                                                     const char* const* coords, int* out);
/* Generators as JSON text; free with distlat_string_free. */
DISTLAT_API char* distlat_subgroup_generators_json(const distlat_subgroup* s);

DISTLAT_API void distlat_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
