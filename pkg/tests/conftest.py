from hypothesis import settings

# Oracle-backed properties mix fast and slow examples; wall-clock
# deadlines only add noise there.
settings.register_profile("suite", deadline=None)
settings.load_profile("suite")
