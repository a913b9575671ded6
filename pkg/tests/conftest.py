from hypothesis import HealthCheck, settings

# Exhaustive enumerations inside property bodies make per-example deadlines
# meaningless; correctness runs care about totals, not percentiles.
settings.register_profile(
    "cubedecomp",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("cubedecomp")
