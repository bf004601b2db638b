"""Statistical reproductions of the documented estimator behavior."""
