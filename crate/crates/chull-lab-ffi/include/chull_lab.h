#ifndef CHULL_LAB_H
#define CHULL_LAB_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every API function.
 */
typedef enum ChlStatus {
  ChlStatus_Ok = 0,
  ChlStatus_NullArgument = 1,
  /**
   * A numeric argument was out of range or not finite.
   */
  ChlStatus_InvalidArgument = 2,
  /**
   * The point set was empty or otherwise unusable.
   */
  ChlStatus_BadPointSet = 3,
  /**
   * The direction list was empty, unnormalizable, not closed under
   * negation, or contained duplicates.
   */
  ChlStatus_BadDirections = 4,
} ChlStatus;

/**
 * Opaque handle: the membership index of a directed hull.
 */
typedef struct ChlDirectedHull ChlDirectedHull;

/**
 * Opaque handle: a validated set of directions.
 */
typedef struct ChlDirectionSet ChlDirectionSet;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a NUL-terminated static string.
 */
const char *chl_version(void);

/**
 * Build a direction set from angles in radians. With `auto_close` nonzero
 * the antipode of every angle is added automatically.
 *
 * # Safety
 * `angles` must point to `len` doubles; `out` must be a valid pointer.
 */
enum ChlStatus chl_direction_set_from_angles(const double *angles,
                                             uintptr_t len,
                                             int auto_close,
                                             struct ChlDirectionSet **out);

/**
 * Build `k` equally spaced doubled directions (2k vectors, density pi/k).
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum ChlStatus chl_direction_set_equally_spaced(uintptr_t k, struct ChlDirectionSet **out);

/**
 * Density of the direction set: the largest angular gap.
 *
 * # Safety
 * Valid handle and out pointer.
 */
enum ChlStatus chl_direction_set_alpha(const struct ChlDirectionSet *ds, double *out);

/**
 * Number of unit vectors in the set.
 *
 * # Safety
 * Valid handle and out pointer.
 */
enum ChlStatus chl_direction_set_len(const struct ChlDirectionSet *ds, uintptr_t *out);

/**
 * Release a direction set handle. Null is ignored.
 *
 * # Safety
 * `ds` must be a pointer returned by a `chl_direction_set_*` constructor,
 * not yet freed.
 */
void chl_direction_set_free(struct ChlDirectionSet *ds);

/**
 * Vertex count of the convex hull of the given planar points.
 *
 * # Safety
 * `xs`/`ys` must point to `len` doubles each; `out` must be valid.
 */
enum ChlStatus chl_convex_hull_vertex_count(const double *xs,
                                            const double *ys,
                                            uintptr_t len,
                                            uintptr_t *out);

/**
 * Area of the convex hull of the given planar points.
 *
 * # Safety
 * `xs`/`ys` must point to `len` doubles each; `out` must be valid.
 */
enum ChlStatus chl_convex_hull_area(const double *xs, const double *ys, uintptr_t len, double *out);

/**
 * Number of points on the boundary of the directed hull of the point set.
 *
 * # Safety
 * `xs`/`ys` must point to `len` doubles each; `ds` and `out` must be valid.
 */
enum ChlStatus chl_boundary_count(const double *xs,
                                  const double *ys,
                                  uintptr_t len,
                                  const struct ChlDirectionSet *ds,
                                  uintptr_t *out);

/**
 * Build the membership index for the directed hull of the point set.
 *
 * # Safety
 * `xs`/`ys` must point to `len` doubles each; `ds` and `out` must be valid.
 */
enum ChlStatus chl_directed_hull_new(const double *xs,
                                     const double *ys,
                                     uintptr_t len,
                                     const struct ChlDirectionSet *ds,
                                     struct ChlDirectedHull **out);

/**
 * Closed-cone membership of (x, y) in the directed hull; writes 1 or 0.
 *
 * # Safety
 * Valid handle and out pointer.
 */
enum ChlStatus chl_directed_hull_contains(const struct ChlDirectedHull *hull,
                                          double x,
                                          double y,
                                          int *out);

/**
 * Release a directed hull handle. Null is ignored.
 *
 * # Safety
 * `hull` must be a pointer returned by `chl_directed_hull_new`, not yet
 * freed.
 */
void chl_directed_hull_free(struct ChlDirectedHull *hull);

/**
 * Number of maxima (non-dominated points) of a row-major n x d matrix.
 *
 * # Safety
 * `coords` must point to `n * d` doubles; `out` must be valid.
 */
enum ChlStatus chl_maxima_count(const double *coords, uintptr_t n, uintptr_t d, uintptr_t *out);

/**
 * Number of points on the boundary of the quadrant (orthant) hull of a
 * row-major n x d matrix.
 *
 * # Safety
 * `coords` must point to `n * d` doubles; `out` must be valid.
 */
enum ChlStatus chl_orthant_boundary_count(const double *coords,
                                          uintptr_t n,
                                          uintptr_t d,
                                          uintptr_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CHULL_LAB_H */
