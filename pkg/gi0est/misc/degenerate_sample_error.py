class DegenerateSampleError(ValueError):
    pass
