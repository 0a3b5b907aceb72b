from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    settings(
        deadline=None,
        suppress_health_check=[HealthCheck.too_slow],
        max_examples=50,
    ),
)

settings.load_profile("default")
