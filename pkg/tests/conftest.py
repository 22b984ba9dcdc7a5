from hypothesis import HealthCheck, settings

settings.register_profile(
    "exact",
    deadline=None,  # exact-arithmetic cases vary wildly in size
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("exact")
