#include <stdio.h>
#include <string.h>

#include "bentforge.h"

#define CHECK(cond)                                        \
  do {                                                     \
    if (!(cond)) {                                         \
      fprintf(stderr, "line %d: %s\n", __LINE__, #cond);   \
      return 1;                                            \
    }                                                      \
  } while (0)

int main(void) {
  BfFunction *f1 = NULL, *f2 = NULL, *g1 = NULL, *g2 = NULL, *out = NULL, *dual = NULL;
  CHECK(bf_function_parse("x1*x2", 0, &f1) == BF_STATUS_OK);
  CHECK(bf_function_parse("x1*x2 + x1", 0, &f2) == BF_STATUS_OK);
  CHECK(bf_function_parse("x1*x2 + x2", 2, &g1) == BF_STATUS_OK);
  CHECK(bf_function_from_hex("7", &g2) == BF_STATUS_OK);

  CHECK(bf_indirect_sum(f1, f2, g1, g2, BF_VERIFY_ALWAYS, &out, &dual) == BF_STATUS_OK);
  bool bent = false;
  CHECK(bf_function_is_bent(out, &bent) == BF_STATUS_OK && bent);
  BfClass cls;
  CHECK(bf_function_classify(out, &cls) == BF_STATUS_OK);
  CHECK(cls.kind == BF_CLASS_KIND_BENT && cls.s == 0);

  char *hex = NULL;
  CHECK(bf_function_to_hex(dual, &hex) == BF_STATUS_OK);
  CHECK(strlen(hex) == 4);
  bf_string_free(hex);

  BfFunction *bad = NULL;
  CHECK(bf_function_parse("x1 +", 0, &bad) == BF_STATUS_PARSE);
  CHECK(bad == NULL && bf_last_error() != NULL);
  CHECK(bf_rothaus(f1, f2, g1, 7, &bad) == BF_STATUS_INVALID_ARGUMENT);

  bf_function_free(f1);
  bf_function_free(f2);
  bf_function_free(g1);
  bf_function_free(g2);
  bf_function_free(out);
  bf_function_free(dual);
  puts("ok");
  return 0;
}
