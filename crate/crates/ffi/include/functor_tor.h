#ifndef FUNCTOR_TOR_H
#define FUNCTOR_TOR_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Which argument of Tor is resolved.
 */
typedef enum FtSide {
  FT_SIDE_RESOLVE_CONTRAVARIANT = 0,
  FT_SIDE_RESOLVE_COVARIANT = 1,
} FtSide;

/*
 Result of every fallible call.
 */
typedef enum FtStatus {
  FT_STATUS_OK = 0,
  FT_STATUS_NULL_ARGUMENT = 1,
  FT_STATUS_INVALID_UTF8 = 2,
  FT_STATUS_INVALID_INPUT = 3,
  FT_STATUS_JSON = 4,
  FT_STATUS_NOT_A_GROUP = 5,
  FT_STATUS_NOT_CROSSED = 6,
  FT_STATUS_BASE_MISMATCH = 7,
  FT_STATUS_FIELD_MISMATCH = 8,
  FT_STATUS_MARGIN_VIOLATION = 9,
  FT_STATUS_NOT_ASSOCIATIVE = 10,
  FT_STATUS_NOT_UNITAL = 11,
  FT_STATUS_RELATION_VIOLATION = 12,
  FT_STATUS_UNSUPPORTED = 13,
  FT_STATUS_BUFFER_TOO_SMALL = 14,
  FT_STATUS_INTERNAL = 15,
} FtStatus;

typedef enum FtVariance {
  FT_VARIANCE_COVARIANT = 0,
  FT_VARIANCE_CONTRAVARIANT = 1,
} FtVariance;

/*
 A finite category.
 */
typedef struct FtCategory FtCategory;

/*
 A module (functor to finite-dimensional vector spaces) over an [`FtCategory`].
 */
typedef struct FtModule FtModule;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Library version as a static NUL-terminated string.
 */
const char *ft_version(void);

/*
 Length in bytes of the last error message on this thread, excluding the terminator.
 */
size_t ft_last_error_length(void);

/*
 Copies the last error message on this thread into `buf` with a NUL terminator.

 # Safety
 `buf` must be valid for writes of `len` bytes.
 */
enum FtStatus ft_last_error_message(char *buf, size_t len);

/*
 Builds a built-in category from a name such as `"f_as:3"`, `"delta:2"` or `"cyclic:4"`.

 # Safety
 `spec` must be a NUL-terminated string and `out` valid for one write.
 */
enum FtStatus ft_category_builtin(const char *spec, struct FtCategory **out);

/*
 Builds a category from its JSON composition table.

 # Safety
 `json` must be a NUL-terminated string and `out` valid for one write.
 */
enum FtStatus ft_category_from_json(const char *json, struct FtCategory **out);

/*
 Releases a category. Modules built over it stay valid.

 # Safety
 `cat` must come from an `ft_category_*` constructor and not be used afterwards.
 */
void ft_category_free(struct FtCategory *cat);

/*
 # Safety
 `cat` must be a live handle and `out` valid for one write.
 */
enum FtStatus ft_category_object_count(const struct FtCategory *cat, size_t *out);

/*
 Number of morphisms from object `x` to object `y`.

 # Safety
 `cat` must be a live handle and `out` valid for one write.
 */
enum FtStatus ft_category_hom_size(const struct FtCategory *cat, size_t x, size_t y, size_t *out);

/*
 Checks the identity and associativity axioms exhaustively; writes the number of violations.

 # Safety
 `cat` must be a live handle and `violations` valid for one write.
 */
enum FtStatus ft_category_validate(const struct FtCategory *cat, size_t *violations);

/*
 The constant module with value the ground field and identity actions.

 # Safety
 `cat` must be a live handle and `out` valid for one write.
 */
enum FtStatus ft_module_trivial(const struct FtCategory *cat,
                                uint32_t p,
                                enum FtVariance variance_kind,
                                struct FtModule **out);

/*
 The representable module at `object`: `K[Hom(object, -)]` when covariant,
 `K[Hom(-, object)]` when contravariant.

 # Safety
 `cat` must be a live handle and `out` valid for one write.
 */
enum FtStatus ft_module_representable(const struct FtCategory *cat,
                                      uint32_t p,
                                      size_t object,
                                      enum FtVariance variance_kind,
                                      struct FtModule **out);

/*
 Loads a module from JSON. The JSON must name the category by the spec it was built
 from (for example `"f_as:3"`) or embed the same composition table.

 # Safety
 `cat` must be a live handle, `json` a NUL-terminated string and `out` valid for one write.
 */
enum FtStatus ft_module_from_json(const struct FtCategory *cat,
                                  uint32_t p,
                                  const char *json,
                                  struct FtModule **out);

/*
 Releases a module.

 # Safety
 `module` must come from an `ft_module_*` constructor and not be used afterwards.
 */
void ft_module_free(struct FtModule *module);

/*
 Writes the dimension at each object into `out`, which must hold one entry per object.

 # Safety
 `module` must be a live handle and `out` valid for `len` writes.
 */
enum FtStatus ft_module_dims(const struct FtModule *module, size_t *out, size_t len);

/*
 Dimensions of `Tor_k(left, right)` for `k = 0..=max_degree`, written to `out`, which must
 hold `max_degree + 1` entries. `left` is contravariant and `right` covariant over the
 same category and field.

 # Safety
 The module handles must be live and `out` valid for `len` writes.
 */
enum FtStatus ft_tor(const struct FtModule *left,
                     const struct FtModule *right,
                     size_t max_degree,
                     enum FtSide side,
                     size_t *out,
                     size_t len);

/*
 Hochschild homology dimensions `HH_0..HH_max_degree` of an algebra given as JSON, with
 coefficients in a bimodule given as JSON or, when `bimodule_json` is null, in the algebra.

 # Safety
 The strings must be NUL-terminated (or `bimodule_json` null) and `out` valid for `len` writes.
 */
enum FtStatus ft_hochschild_dims(const char *algebra_json,
                                 const char *bimodule_json,
                                 size_t max_degree,
                                 size_t *out,
                                 size_t len);

/*
 Cyclic homology dimensions `HC_0..HC_max_degree` of an algebra given as JSON.

 # Safety
 `algebra_json` must be NUL-terminated and `out` valid for `len` writes.
 */
enum FtStatus ft_cyclic_dims(const char *algebra_json, size_t max_degree, size_t *out, size_t len);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FUNCTOR_TOR_H */
