from hypothesis import settings

# Everything here is exact rational arithmetic; individual examples are
# cheap but the acceptance loops are not, so no per-example deadline.
settings.register_profile("exact", deadline=None, max_examples=100)
settings.load_profile("exact")
