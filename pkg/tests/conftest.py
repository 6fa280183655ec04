from hypothesis import settings

settings.register_profile("exact", deadline=None, max_examples=40)
settings.load_profile("exact")
