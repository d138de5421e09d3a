"""Univariate spline dimension counting, independent of the package."""


def univariate_spline_dim(degree, smoothness, interior_knots):
    """Dimension of C^smoothness splines of the given degree on a segment
    subdivided by the given number of distinct interior knots."""
    if degree < 0:
        return 0
    pieces = interior_knots + 1
    dim = pieces * (degree + 1) - interior_knots * (smoothness + 1)
    return max(dim, 0)


def tensor_grid_dim(k, r, m):
    """Product dimension for a k x k uniform C^r tensor grid at bi-degree m."""
    return (univariate_spline_dim(m[0], r, k - 1)
            * univariate_spline_dim(m[1], r, k - 1))
