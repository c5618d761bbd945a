#ifndef HELGASON_H
#define HELGASON_H

#include <stddef.h>

#if defined(HELGASON_BUILDING_LIBRARY)
#define HG_API __attribute__((visibility("default")))
#else
#define HG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every function returns HG_OK or an error code; the message for the most
   recent failure on the calling thread is available from hg_last_error(). */
typedef enum hg_status {
  HG_OK = 0,
  HG_ERR_INVALID_ARGUMENT = 1, /* null pointer, negative box size */
  HG_ERR_PARSE = 2,            /* malformed rational or tuple */
  HG_ERR_UNKNOWN_FAMILY = 3,
  HG_ERR_PARAMETER = 4,        /* family parameters outside their constraints */
  HG_ERR_ARITY = 5,            /* weight or root has the wrong number of coordinates */
  HG_ERR_NOT_SIMPLE = 6,       /* root is not simple in the current base */
  HG_ERR_INVALID_BASE = 7,     /* supplied base is not a base of the system */
  HG_ERR_DOMAIN = 8,           /* any other mathematical precondition */
  HG_ERR_INTERNAL = 99
} hg_status;

typedef enum hg_verdict {
  HG_SPHERICAL = 0,
  HG_NOT_SPHERICAL = 1,
  HG_UNDETERMINED = 2
} hg_verdict;

/* Parameters left at -1 (or NULL) take the family default. */
typedef struct hg_params {
  const char* family;
  int m;
  int n;
  int r;
  int s;
  const char* deformation; /* rational "p/q", the a of d(2,1;a) or the k of BC_k */
} hg_params;

typedef struct hg_entry hg_entry;

HG_API void hg_params_init(hg_params* params);

HG_API hg_status hg_entry_create(const hg_params* params, hg_entry** out);
HG_API void hg_entry_destroy(hg_entry* entry);

/* "(1,-1,0),(0,1,-1)". NULL restores the default base. */
HG_API hg_status hg_entry_set_base(hg_entry* entry, const char* tuples);
HG_API hg_status hg_entry_dim(const hg_entry* entry, size_t* out);

/* JSON strings returned through char** are owned by the caller; release them
   with hg_string_free. */
HG_API hg_status hg_families_json(char** out);
HG_API hg_status hg_entry_describe_json(const hg_entry* entry, char** out);

/* json_out may be NULL when only the verdict is wanted. */
HG_API hg_status hg_check(const hg_entry* entry, const char* weight, hg_verdict* verdict, char** json_out);

/* weight may be NULL. */
HG_API hg_status hg_reflect(const hg_entry* entry, const char* root, const char* weight, char** json_out);

/* threads = 0 uses every core. */
HG_API hg_status hg_enumerate(const hg_entry* entry, int max_coeff, unsigned threads, char** json_out);

/* variant is "table" (or NULL) or, for ag12-d213, "item11". clean is set to 1
   iff there are no disagreements and no Undetermined verdicts. */
HG_API hg_status hg_crosscheck(const hg_entry* entry, int max_coeff, const char* variant, unsigned threads,
                               int* clean, char** json_out);

/* dot_out may be NULL. */
HG_API hg_status hg_basegraph(const hg_entry* entry, int singular_only, char** json_out, char** dot_out);

/* Parses a verdict document and emits it again; used to validate stored output. */
HG_API hg_status hg_verdict_normalize(const char* json, char** out);

HG_API const char* hg_last_error(void);
HG_API const char* hg_status_name(hg_status status);
HG_API const char* hg_version(void);
HG_API void hg_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
