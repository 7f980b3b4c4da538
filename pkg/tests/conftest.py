from hypothesis import settings

settings.register_profile("versals", deadline=None)
settings.load_profile("versals")
