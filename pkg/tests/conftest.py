from hypothesis import settings

settings.register_profile("heronquad", deadline=None)
settings.load_profile("heronquad")
