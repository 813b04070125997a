import hypothesis

hypothesis.settings.register_profile(
    "oppm", deadline=None, max_examples=100, derandomize=True
)
hypothesis.settings.load_profile("oppm")
