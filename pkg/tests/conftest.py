from hypothesis import HealthCheck, settings

settings.register_profile(
    "trispectral",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("trispectral")
