"""Domain services: linear algebra, oracles, estimators, theory and matrix I/O."""
