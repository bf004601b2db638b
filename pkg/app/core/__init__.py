"""Initialize application core components."""
