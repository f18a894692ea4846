#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "distlat/distlat.h"

static int failures = 0;

#define EXPECT(cond)                                                  \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                     \
    }                                                                 \
  } while (0)

static const char* kCrt =
    "{\"ambient\": {\"free_rank\": 1}, \"subgroups\": {\"I\": [[\"3\"]], \"J\": [[\"5\"]]},"
    " \"residues\": {\"I\": [\"2\"], \"J\": [\"3\"]}}";

static void test_run(void) {
  distlat_problem* p = NULL;
  EXPECT(distlat_problem_parse(kCrt, strlen(kCrt), &p) == DISTLAT_OK);
  distlat_result* r = NULL;
  EXPECT(distlat_run(p, "crt", NULL, &r) == DISTLAT_OK);
  EXPECT(r != NULL);
  EXPECT(strstr(distlat_result_json(r), "\"solution\": [\n    \"8\"") != NULL);
  distlat_result_free(r);

  distlat_options o;
  distlat_options_init(&o);
  o.family = "missing";
  EXPECT(distlat_run(p, "crt", &o, &r) == DISTLAT_MALFORMED_INPUT);
  EXPECT(r == NULL);
  EXPECT(strstr(distlat_last_error(), "missing") != NULL);
  EXPECT(distlat_run(p, "nonsense", NULL, &r) == DISTLAT_MALFORMED_INPUT);

  distlat_options_init(&o);
  o.cap = 2;
  EXPECT(distlat_run(p, "closure", &o, &r) == DISTLAT_CAP_EXCEEDED);
  distlat_problem_free(p);

  const char* bad = "{\"ambient\": {\"free_rank\": 1},\n \"subgroups\": {\"I\": [[\"3\", \"4\"]]}}";
  EXPECT(distlat_problem_parse(bad, strlen(bad), &p) == DISTLAT_MALFORMED_INPUT);
  EXPECT(p == NULL);
  EXPECT(strstr(distlat_last_error(), "subgroups.I[0]") != NULL);
  const char* broken = "{\n  \"ambient\": ,\n}";
  EXPECT(distlat_problem_parse(broken, strlen(broken), &p) == DISTLAT_MALFORMED_INPUT);
  EXPECT(strstr(distlat_last_error(), "line 2") != NULL);
}

static void test_groups(void) {
  const char* torsion[] = {"2", "2"};
  distlat_group* k = NULL;
  EXPECT(distlat_group_create(0, torsion, 2, &k) == DISTLAT_OK);
  EXPECT(distlat_group_generators(k) == 2);
  char* d = distlat_group_describe(k);
  EXPECT(strcmp(d, "Z/2 + Z/2") == 0);
  distlat_string_free(d);

  const char* p_gen[] = {"1", "0"};
  const char* q_gen[] = {"0", "1"};
  distlat_subgroup *p = NULL, *q = NULL, *sum = NULL, *meet = NULL;
  EXPECT(distlat_subgroup_create(k, p_gen, 1, &p) == DISTLAT_OK);
  EXPECT(distlat_subgroup_create(k, q_gen, 1, &q) == DISTLAT_OK);
  EXPECT(distlat_subgroup_sum(p, q, &sum) == DISTLAT_OK);
  EXPECT(distlat_subgroup_intersect(p, q, &meet) == DISTLAT_OK);
  const char* x[] = {"1", "1"};
  int in = -1;
  EXPECT(distlat_subgroup_contains(sum, x, &in) == DISTLAT_OK && in == 1);
  EXPECT(distlat_subgroup_contains(p, x, &in) == DISTLAT_OK && in == 0);
  int eq = -1;
  EXPECT(distlat_subgroup_equal(p, q, &eq) == DISTLAT_OK && eq == 0);
  char* gens = distlat_subgroup_generators_json(meet);
  EXPECT(strcmp(gens, "[]") == 0);
  distlat_string_free(gens);

  const char* bad_torsion[] = {"2", "3"};
  distlat_group* g = NULL;
  EXPECT(distlat_group_create(0, bad_torsion, 2, &g) == DISTLAT_INVALID_ARGUMENT);
  EXPECT(g == NULL);
  const char* z[] = {"x", "0"};
  distlat_subgroup_free(sum);
  EXPECT(distlat_subgroup_create(k, z, 1, &sum) == DISTLAT_INVALID_ARGUMENT);

  distlat_subgroup_free(p);
  distlat_subgroup_free(q);
  distlat_subgroup_free(meet);
  distlat_group_free(k);
}

int main(void) {
  EXPECT(distlat_command_count() == 11);
  EXPECT(strcmp(distlat_status_name(DISTLAT_NO_SOLUTION), "no_solution") == 0);
  EXPECT(distlat_run(NULL, "crt", NULL, NULL) == DISTLAT_INVALID_ARGUMENT);
  test_run();
  test_groups();
  if (failures) {
    fprintf(stderr, "%d failure(s)\n", failures);
    return 1;
  }
  printf("capi_test: all checks passed\n");
  return 0;
}
